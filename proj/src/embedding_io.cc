// Copyright 2026 The Markeval Authors. All Rights Reserved.
//
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

#include "markeval/embedding_io.h"

#include <charconv>
#include <cmath>
#include <fstream>
#include <optional>
#include <sstream>
#include <string_view>
#include <vector>

#include "markeval/error.h"

namespace markeval {
namespace {

std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

std::optional<double> parse_number(std::string_view cell) {
  cell = trim(cell);
  if (!cell.empty() && cell.front() == '+') cell.remove_prefix(1);
  if (cell.empty()) return std::nullopt;
  double value = 0.0;
  const auto [ptr, ec] =
      std::from_chars(cell.data(), cell.data() + cell.size(), value);
  if (ec != std::errc() || ptr != cell.data() + cell.size()) {
    return std::nullopt;
  }
  return value;
}

std::vector<std::string_view> split(std::string_view line) {
  std::vector<std::string_view> cells;
  std::size_t start = 0;
  while (true) {
    const auto comma = line.find(',', start);
    cells.push_back(line.substr(start, comma - start));
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return cells;
}

}  // namespace

std::string read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    throw Error(ErrorCode::kIoError, "cannot open '" + path.string() + "'");
  }
  std::ostringstream buf;
  buf << in.rdbuf();
  if (in.bad()) {
    throw Error(ErrorCode::kIoError, "failed reading '" + path.string() + "'");
  }
  return buf.str();
}

EmbeddingSet parse_csv_embeddings(const std::string& text,
                                  const std::string& label) {
  std::vector<double> values;
  std::size_t dim = 0;
  std::size_t rows = 0;
  std::size_t line_no = 0;
  bool first_content_line = true;
  std::string_view rest(text);
  while (!rest.empty()) {
    const auto nl = rest.find('\n');
    const std::string_view line = trim(rest.substr(0, nl));
    rest = nl == std::string_view::npos ? std::string_view{} : rest.substr(nl + 1);
    ++line_no;
    if (line.empty()) continue;

    const auto cells = split(line);
    std::vector<double> row;
    row.reserve(cells.size());
    bool numeric = true;
    for (auto cell : cells) {
      const auto v = parse_number(cell);
      if (!v) {
        numeric = false;
        break;
      }
      row.push_back(*v);
    }
    if (!numeric) {
      if (first_content_line) {
        first_content_line = false;  // header
        continue;
      }
      throw Error(ErrorCode::kFormatError,
                  "CSV line " + std::to_string(line_no) +
                      " has a non-numeric cell");
    }
    first_content_line = false;
    if (rows == 0) {
      dim = row.size();
    } else if (row.size() != dim) {
      throw Error(ErrorCode::kRaggedRows,
                  "CSV line " + std::to_string(line_no) + " has " +
                      std::to_string(row.size()) + " cells, expected " +
                      std::to_string(dim));
    }
    for (std::size_t c = 0; c < row.size(); ++c) {
      if (!std::isfinite(row[c])) {
        throw Error(ErrorCode::kNonFinite,
                    "CSV line " + std::to_string(line_no) + ", column " +
                        std::to_string(c + 1) + " is not finite");
      }
    }
    values.insert(values.end(), row.begin(), row.end());
    ++rows;
  }
  if (rows == 0) throw Error(ErrorCode::kEmptyFile, "CSV has no data rows");
  return EmbeddingSet(std::move(values), dim, label);
}

LabeledValues parse_labeled_values(const std::string& text) {
  LabeledValues out;
  std::size_t line_no = 0;
  bool first_content_line = true;
  std::string_view rest(text);
  while (!rest.empty()) {
    const auto nl = rest.find('\n');
    const std::string_view line = trim(rest.substr(0, nl));
    rest = nl == std::string_view::npos ? std::string_view{} : rest.substr(nl + 1);
    ++line_no;
    if (line.empty()) continue;
    const auto cells = split(line);
    const bool shape_ok = cells.size() == 1 || cells.size() == 2;
    const auto value = shape_ok ? parse_number(cells.back()) : std::nullopt;
    if (!value) {
      if (first_content_line) {
        first_content_line = false;
        continue;
      }
      throw Error(ErrorCode::kFormatError,
                  "line " + std::to_string(line_no) +
                      " is not 'value' or 'label,value'");
    }
    first_content_line = false;
    if (!std::isfinite(*value)) {
      throw Error(ErrorCode::kNonFinite,
                  "line " + std::to_string(line_no) + " is not finite");
    }
    out.labels.emplace_back(cells.size() == 2 ? trim(cells.front()) : "");
    out.values.push_back(*value);
  }
  if (out.values.empty()) throw Error(ErrorCode::kEmptyFile, "no values");
  return out;
}

LabeledValues read_labeled_values(const std::filesystem::path& path) {
  try {
    return parse_labeled_values(read_file(path));
  } catch (const Error& e) {
    if (e.code() == ErrorCode::kIoError) throw;
    throw Error(e.code(), "'" + path.string() + "': " + e.message());
  }
}

EmbeddingSet read_embeddings(const std::filesystem::path& path) {
  const std::string bytes = read_file(path);
  if (bytes.find_first_not_of(" \t\r\n") == std::string::npos) {
    throw Error(ErrorCode::kEmptyFile, "'" + path.string() + "' is empty");
  }
  try {
    if (bytes.rfind("\x93NUMPY", 0) == 0) {
      NpyArray array = parse_npy(bytes);
      if (array.rows == 0 || array.cols == 0) {
        throw Error(ErrorCode::kEmptyFile, "array has no elements");
      }
      return EmbeddingSet(std::move(array.values), array.cols, path.string());
    }
    return parse_csv_embeddings(bytes, path.string());
  } catch (const Error& e) {
    throw Error(e.code(), "'" + path.string() + "': " + e.message());
  }
}

void write_embeddings_npy(const std::filesystem::path& path,
                          const EmbeddingSet& set, NpyDtype dtype) {
  write_npy(path, NpyArray{set.size(), set.dim(), set.values()}, dtype);
}

}  // namespace markeval
