// Copyright 2026 The hoffman Authors
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef HOFFMAN_HOFFMAN_HPP_
#define HOFFMAN_HOFFMAN_HPP_

#include "hoffman/bounds.hpp"
#include "hoffman/convex_solvers.hpp"
#include "hoffman/error.hpp"
#include "hoffman/io.hpp"
#include "hoffman/matrix_core.hpp"
#include "hoffman/numerics.hpp"
#include "hoffman/oracle.hpp"
#include "hoffman/partition.hpp"

#endif  // HOFFMAN_HOFFMAN_HPP_
