# Copyright 2026 The hoffman Authors
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#     http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.

"""Runs the CLI on a set of inputs and validates every JSON report."""

import json
import pathlib
import subprocess
import sys
import tempfile

import jsonschema


def main() -> int:
    cli, schema_path, data_dir = sys.argv[1], pathlib.Path(sys.argv[2]), pathlib.Path(sys.argv[3])
    schema = json.loads(schema_path.read_text())
    jsonschema.Draft202012Validator.check_schema(schema)
    validator = jsonschema.Draft202012Validator(schema)

    with tempfile.TemporaryDirectory() as tmp:
        tmp = pathlib.Path(tmp)
        (tmp / "zero.csv").write_text("0,0\n0,0\n")
        (tmp / "single.csv").write_text("3,4\n")
        (tmp / "dense.csv").write_text("0.3,-1.2,0.5\n-0.7,0.1,0.9\n1.1,0.4,-0.2\n-0.5,-0.6,-0.8\n")
        inputs = sorted(data_dir.iterdir()) + sorted(tmp.iterdir())
        failures = 0
        for path in inputs:
            for samples in ("0", "50"):
                proc = subprocess.run(
                    [cli, "compute", "--input", str(path), "--output", "json",
                     "--samples", samples, "--seed", "3"],
                    capture_output=True, text=True, check=False)
                label = f"{path.name} samples={samples}"
                if proc.returncode != 0:
                    print(f"FAIL {label}: exit {proc.returncode}: {proc.stderr.strip()}")
                    failures += 1
                    continue
                report = json.loads(proc.stdout)
                errors = sorted(validator.iter_errors(report), key=lambda e: list(e.path))
                if errors:
                    failures += 1
                    for err in errors:
                        print(f"FAIL {label}: {'/'.join(map(str, err.path))}: {err.message}")
                else:
                    print(f"ok   {label}: branch {report['branch']}, total {report['bounds']['total']}")
    return 1 if failures else 0


if __name__ == "__main__":
    sys.exit(main())
