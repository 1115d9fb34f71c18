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

#ifndef HOFFMAN_IO_HPP_
#define HOFFMAN_IO_HPP_

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "hoffman/error.hpp"
#include "hoffman/matrix_core.hpp"

namespace hoffman {

enum class InputFormat { kCsv, kMatrixMarket, kAuto };

namespace internal {

inline std::string Where(std::size_t line, std::size_t column) {
  return "line " + std::to_string(line) + ", column " + std::to_string(column);
}

inline std::string_view Trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

inline double ParseReal(std::string_view token, std::size_t line, std::size_t column) {
  token = Trim(token);
  if (!token.empty() && token.front() == '+') token.remove_prefix(1);
  double value = 0.0;
  const auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
  if (token.empty() || ec != std::errc() || ptr != token.data() + token.size()) {
    throw Error(ErrorCode::kParseError,
                Where(line, column) + ": not a number: '" + std::string(token) + "'");
  }
  if (!std::isfinite(value)) {
    throw Error(ErrorCode::kParseError, Where(line, column) + ": non-finite value");
  }
  return value;
}

inline std::vector<std::string_view> SplitLines(std::string_view text) {
  std::vector<std::string_view> lines;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(start, end - start);
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    lines.push_back(line);
    if (end == text.size()) break;
    start = end + 1;
  }
  return lines;
}

inline std::string Lower(std::string_view s) {
  std::string out(s);
  std::transform(out.begin(), out.end(), out.begin(),
                 [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
  return out;
}

}  // namespace internal

// RFC-4180-style CSV without a header: one matrix row per line, fields
// separated by commas, optionally double-quoted. Blank lines are ignored.
inline Matrix ParseCsv(std::string_view text) {
  std::vector<std::vector<double>> rows;
  const auto lines = internal::SplitLines(text);
  for (std::size_t li = 0; li < lines.size(); ++li) {
    const std::string_view line = lines[li];
    if (internal::Trim(line).empty()) continue;
    std::vector<double> row;
    std::size_t pos = 0;
    while (true) {
      const std::size_t column = pos + 1;
      std::string field;
      std::size_t next = pos;
      std::size_t q = pos;
      while (q < line.size() && (line[q] == ' ' || line[q] == '\t')) ++q;
      if (q < line.size() && line[q] == '"') {
        ++q;
        while (true) {
          if (q >= line.size()) {
            throw Error(ErrorCode::kParseError,
                        internal::Where(li + 1, column) + ": unterminated quoted field");
          }
          if (line[q] == '"') {
            if (q + 1 < line.size() && line[q + 1] == '"') {
              field.push_back('"');
              q += 2;
              continue;
            }
            ++q;
            break;
          }
          field.push_back(line[q++]);
        }
        while (q < line.size() && (line[q] == ' ' || line[q] == '\t')) ++q;
        if (q < line.size() && line[q] != ',') {
          throw Error(ErrorCode::kParseError,
                      internal::Where(li + 1, q + 1) + ": text after closing quote");
        }
        next = q;
      } else {
        next = line.find(',', pos);
        if (next == std::string_view::npos) next = line.size();
        field = std::string(line.substr(pos, next - pos));
      }
      row.push_back(internal::ParseReal(field, li + 1, column));
      if (next >= line.size()) break;
      pos = next + 1;
    }
    if (!rows.empty() && row.size() != rows.front().size()) {
      throw Error(ErrorCode::kDimensionError,
                  "line " + std::to_string(li + 1) + ": expected " +
                      std::to_string(rows.front().size()) + " fields, found " +
                      std::to_string(row.size()));
    }
    rows.push_back(std::move(row));
  }
  if (rows.empty()) throw Error(ErrorCode::kDimensionError, "CSV input has no rows");
  Matrix out(static_cast<Eigen::Index>(rows.size()), static_cast<Eigen::Index>(rows[0].size()));
  for (std::size_t i = 0; i < rows.size(); ++i) {
    for (std::size_t j = 0; j < rows[i].size(); ++j) out(i, j) = rows[i][j];
  }
  return out;
}

// Matrix Market "matrix" objects with real or integer fields, in array or
// coordinate layout, general/symmetric/skew-symmetric symmetry.
inline Matrix ParseMatrixMarket(std::string_view text) {
  const auto lines = internal::SplitLines(text);
  if (lines.empty() || lines[0].rfind("%%MatrixMarket", 0) != 0) {
    throw Error(ErrorCode::kParseError, internal::Where(1, 1) + ": missing %%MatrixMarket banner");
  }
  std::istringstream banner{std::string(lines[0])};
  std::string tag, object, layout, field, symmetry;
  banner >> tag >> object >> layout >> field >> symmetry;
  object = internal::Lower(object);
  layout = internal::Lower(layout);
  field = internal::Lower(field);
  symmetry = internal::Lower(symmetry);
  if (object != "matrix") {
    throw Error(ErrorCode::kUnsupportedFormat, "Matrix Market object '" + object + "'");
  }
  if (layout != "array" && layout != "coordinate") {
    throw Error(ErrorCode::kParseError, internal::Where(1, 1) + ": unknown layout '" + layout + "'");
  }
  if (field != "real" && field != "integer" && field != "double") {
    throw Error(ErrorCode::kUnsupportedFormat, "Matrix Market field '" + field + "'");
  }
  if (symmetry != "general" && symmetry != "symmetric" && symmetry != "skew-symmetric") {
    throw Error(ErrorCode::kUnsupportedFormat, "Matrix Market symmetry '" + symmetry + "'");
  }
  const bool symmetric = symmetry == "symmetric";
  const bool skew = symmetry == "skew-symmetric";

  // Remaining non-comment lines, tokenized on whitespace.
  struct Token {
    std::string_view text;
    std::size_t line;
    std::size_t column;
  };
  std::vector<std::vector<Token>> data;
  for (std::size_t li = 1; li < lines.size(); ++li) {
    const std::string_view line = lines[li];
    if (internal::Trim(line).empty() || internal::Trim(line).front() == '%') continue;
    std::vector<Token> tokens;
    std::size_t p = 0;
    while (p < line.size()) {
      while (p < line.size() && std::isspace(static_cast<unsigned char>(line[p]))) ++p;
      if (p >= line.size()) break;
      std::size_t e = p;
      while (e < line.size() && !std::isspace(static_cast<unsigned char>(line[e]))) ++e;
      tokens.push_back({line.substr(p, e - p), li + 1, p + 1});
      p = e;
    }
    data.push_back(std::move(tokens));
  }
  if (data.empty()) throw Error(ErrorCode::kParseError, "Matrix Market input has no size line");

  auto parse_index = [](const Token& t) {
    long long v = 0;
    const auto [ptr, ec] = std::from_chars(t.text.data(), t.text.data() + t.text.size(), v);
    if (ec != std::errc() || ptr != t.text.data() + t.text.size() || v < 0) {
      throw Error(ErrorCode::kParseError,
                  internal::Where(t.line, t.column) + ": bad integer '" + std::string(t.text) + "'");
    }
    return v;
  };

  const auto& size_line = data[0];
  const std::size_t expected_size_tokens = layout == "array" ? 2 : 3;
  if (size_line.size() != expected_size_tokens) {
    const std::size_t line = size_line.empty() ? 0 : size_line[0].line;
    throw Error(ErrorCode::kParseError, internal::Where(line, 1) + ": malformed size line");
  }
  const long long rows = parse_index(size_line[0]);
  const long long cols = parse_index(size_line[1]);
  if (rows < 1 || cols < 1) {
    throw Error(ErrorCode::kDimensionError, "Matrix Market matrix has an empty dimension");
  }
  if ((symmetric || skew) && rows != cols) {
    throw Error(ErrorCode::kDimensionError, "symmetric Matrix Market matrix must be square");
  }
  Matrix out = Matrix::Zero(rows, cols);

  std::vector<Token> values;
  for (std::size_t k = 1; k < data.size(); ++k) {
    for (const Token& t : data[k]) values.push_back(t);
  }
  auto value_at = [&](std::size_t k) {
    const Token& t = values[k];
    return internal::ParseReal(t.text, t.line, t.column);
  };

  if (layout == "array") {
    std::vector<std::pair<long long, long long>> slots;  // column-major order
    for (long long j = 0; j < cols; ++j) {
      const long long first = symmetric ? j : (skew ? j + 1 : 0);
      for (long long i = first; i < rows; ++i) slots.emplace_back(i, j);
    }
    if (values.size() != slots.size()) {
      throw Error(ErrorCode::kDimensionError,
                  "expected " + std::to_string(slots.size()) + " array entries, found " +
                      std::to_string(values.size()));
    }
    for (std::size_t k = 0; k < slots.size(); ++k) {
      const auto [i, j] = slots[k];
      const double v = value_at(k);
      out(i, j) = v;
      if (symmetric) out(j, i) = v;
      if (skew) out(j, i) = -v;
    }
    return out;
  }

  const long long nnz = parse_index(size_line[2]);
  for (std::size_t k = 1; k < data.size(); ++k) {
    const auto& entry = data[k];
    if (entry.size() != 3) {
      throw Error(ErrorCode::kParseError,
                  internal::Where(entry.front().line, 1) + ": coordinate entry needs i j value");
    }
    const long long i = parse_index(entry[0]);
    const long long j = parse_index(entry[1]);
    if (i < 1 || i > rows || j < 1 || j > cols) {
      throw Error(ErrorCode::kDimensionError,
                  internal::Where(entry[0].line, entry[0].column) + ": index out of range");
    }
    const double v = internal::ParseReal(entry[2].text, entry[2].line, entry[2].column);
    out(i - 1, j - 1) += v;
    if (i != j && symmetric) out(j - 1, i - 1) += v;
    if (i != j && skew) out(j - 1, i - 1) -= v;
  }
  if (static_cast<long long>(data.size()) - 1 != nnz) {
    throw Error(ErrorCode::kDimensionError,
                "expected " + std::to_string(nnz) + " coordinate entries, found " +
                    std::to_string(data.size() - 1));
  }
  return out;
}

inline InputFormat DetectFormat(const std::string& path) {
  const auto dot = path.rfind('.');
  const std::string ext = dot == std::string::npos ? "" : internal::Lower(path.substr(dot));
  if (ext == ".csv") return InputFormat::kCsv;
  if (ext == ".mtx" || ext == ".mm") return InputFormat::kMatrixMarket;
  throw Error(ErrorCode::kUnsupportedFormat,
              "cannot infer format from '" + path + "'; use .csv or .mtx or pass --format");
}

inline ProblemInstance LoadMatrix(const std::string& path, InputFormat format = InputFormat::kAuto) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::kParseError, "cannot open '" + path + "'");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  const std::string text = buffer.str();
  if (format == InputFormat::kAuto) format = DetectFormat(path);
  Matrix a = format == InputFormat::kCsv ? ParseCsv(text) : ParseMatrixMarket(text);
  return ProblemInstance(std::move(a));
}

// CSV with 17 significant digits, which round-trips every double.
inline std::string WriteCsv(const Matrix& a) {
  std::string out;
  char buf[32];
  for (Eigen::Index i = 0; i < a.rows(); ++i) {
    for (Eigen::Index j = 0; j < a.cols(); ++j) {
      std::snprintf(buf, sizeof(buf), "%.17g", a(i, j));
      if (j > 0) out.push_back(',');
      out += buf;
    }
    out.push_back('\n');
  }
  return out;
}

}  // namespace hoffman

#endif  // HOFFMAN_IO_HPP_
