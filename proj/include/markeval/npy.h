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

#ifndef MARKEVAL_NPY_H_
#define MARKEVAL_NPY_H_

#include <cstddef>
#include <filesystem>
#include <string>
#include <vector>

namespace markeval {

enum class NpyDtype { kFloat32, kFloat64 };

// A 2-D little-endian floating array, widened to double on read.
struct NpyArray {
  std::size_t rows = 0;
  std::size_t cols = 0;
  std::vector<double> values;  // row-major
};

// Parses an NPY v1.0 (or v2.0) buffer holding a C-order 2-D array of dtype
// '<f4' or '<f8'. Throws FormatError otherwise.
NpyArray parse_npy(const std::string& bytes);

std::string encode_npy(const NpyArray& array, NpyDtype dtype);

void write_npy(const std::filesystem::path& path, const NpyArray& array,
               NpyDtype dtype);

}  // namespace markeval

#endif  // MARKEVAL_NPY_H_
