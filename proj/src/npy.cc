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

#include "markeval/npy.h"

#include <bit>
#include <cstdint>
#include <cstring>
#include <fstream>
#include <regex>

#include "markeval/error.h"

namespace markeval {
namespace {

constexpr char kMagic[] = "\x93NUMPY";
constexpr std::size_t kMagicSize = 6;

static_assert(std::endian::native == std::endian::little,
              "NPY encoding assumes a little-endian host");

[[noreturn]] void format_error(const std::string& what) {
  throw Error(ErrorCode::kFormatError, "NPY: " + what);
}

std::size_t read_le(const std::string& bytes, std::size_t offset,
                    std::size_t width) {
  std::size_t v = 0;
  for (std::size_t i = 0; i < width; ++i) {
    v |= static_cast<std::size_t>(static_cast<unsigned char>(bytes[offset + i]))
         << (8 * i);
  }
  return v;
}

}  // namespace

NpyArray parse_npy(const std::string& bytes) {
  if (bytes.size() < kMagicSize + 4 ||
      std::memcmp(bytes.data(), kMagic, kMagicSize) != 0) {
    format_error("missing \\x93NUMPY magic");
  }
  const int major = static_cast<unsigned char>(bytes[6]);
  std::size_t header_len = 0;
  std::size_t header_start = 0;
  if (major == 1) {
    header_len = read_le(bytes, 8, 2);
    header_start = 10;
  } else if (major == 2) {
    if (bytes.size() < 12) format_error("truncated v2 preamble");
    header_len = read_le(bytes, 8, 4);
    header_start = 12;
  } else {
    format_error("unsupported version " + std::to_string(major) + "." +
                 std::to_string(static_cast<unsigned char>(bytes[7])));
  }
  if (bytes.size() < header_start + header_len) format_error("truncated header");
  const std::string header = bytes.substr(header_start, header_len);

  std::smatch m;
  static const std::regex descr_re(R"('descr'\s*:\s*'([^']*)')");
  static const std::regex fortran_re(R"('fortran_order'\s*:\s*(True|False))");
  static const std::regex shape_re(R"('shape'\s*:\s*\(([^)]*)\))");
  if (!std::regex_search(header, m, descr_re)) format_error("header has no descr");
  const std::string descr = m[1];
  std::size_t width = 0;
  if (descr == "<f4") {
    width = 4;
  } else if (descr == "<f8") {
    width = 8;
  } else {
    format_error("unsupported dtype '" + descr + "' (expected '<f4' or '<f8')");
  }
  if (!std::regex_search(header, m, fortran_re)) {
    format_error("header has no fortran_order");
  }
  if (m[1] == "True") format_error("Fortran-ordered arrays are not supported");
  if (!std::regex_search(header, m, shape_re)) format_error("header has no shape");

  std::vector<std::size_t> shape;
  const std::string dims = m[1];
  static const std::regex int_re(R"(\d+)");
  for (auto it = std::sregex_iterator(dims.begin(), dims.end(), int_re);
       it != std::sregex_iterator(); ++it) {
    shape.push_back(std::stoull(it->str()));
  }
  if (shape.size() != 2) {
    format_error("expected a 2-D array (rank 2), got rank " +
                 std::to_string(shape.size()));
  }

  NpyArray out;
  out.rows = shape[0];
  out.cols = shape[1];
  const std::size_t count = out.rows * out.cols;
  const std::size_t data_start = header_start + header_len;
  if (bytes.size() - data_start < count * width) {
    format_error("data section holds fewer than " + std::to_string(count) +
                 " elements");
  }
  out.values.resize(count);
  const char* data = bytes.data() + data_start;
  for (std::size_t i = 0; i < count; ++i) {
    if (width == 4) {
      float f;
      std::memcpy(&f, data + i * 4, 4);
      out.values[i] = f;
    } else {
      std::memcpy(&out.values[i], data + i * 8, 8);
    }
  }
  return out;
}

std::string encode_npy(const NpyArray& array, NpyDtype dtype) {
  const bool f32 = dtype == NpyDtype::kFloat32;
  std::string header = std::string("{'descr': '") + (f32 ? "<f4" : "<f8") +
                       "', 'fortran_order': False, 'shape': (" +
                       std::to_string(array.rows) + ", " +
                       std::to_string(array.cols) + "), }";
  // Pad with spaces so magic + preamble + header + '\n' is 64-byte aligned.
  const std::size_t unpadded = kMagicSize + 4 + header.size() + 1;
  header.append((64 - unpadded % 64) % 64, ' ');
  header.push_back('\n');

  std::string out(kMagic, kMagicSize);
  out.push_back('\x01');
  out.push_back('\x00');
  out.push_back(static_cast<char>(header.size() & 0xff));
  out.push_back(static_cast<char>((header.size() >> 8) & 0xff));
  out += header;
  for (double v : array.values) {
    if (f32) {
      const float f = static_cast<float>(v);
      out.append(reinterpret_cast<const char*>(&f), 4);
    } else {
      out.append(reinterpret_cast<const char*>(&v), 8);
    }
  }
  return out;
}

void write_npy(const std::filesystem::path& path, const NpyArray& array,
               NpyDtype dtype) {
  std::ofstream out(path, std::ios::binary);
  if (!out) {
    throw Error(ErrorCode::kIoError, "cannot open " + path.string() + " for writing");
  }
  const std::string bytes = encode_npy(array, dtype);
  out.write(bytes.data(), static_cast<std::streamsize>(bytes.size()));
  if (!out) throw Error(ErrorCode::kIoError, "failed writing " + path.string());
}

}  // namespace markeval
