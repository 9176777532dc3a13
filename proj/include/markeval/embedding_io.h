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

#ifndef MARKEVAL_EMBEDDING_IO_H_
#define MARKEVAL_EMBEDDING_IO_H_

#include <filesystem>
#include <string>
#include <vector>

#include "markeval/embedding_set.h"
#include "markeval/npy.h"

namespace markeval {

// Loads an embedding matrix. Files starting with the NPY magic are parsed as
// NPY; anything else as CSV (numeric cells, one row per sample, an optional
// single header line detected by a non-numeric first row).
//
// Errors: IoError (missing/unreadable, message names the path), EmptyFile,
// FormatError, RaggedRows, NonFinite, MinSamples.
EmbeddingSet read_embeddings(const std::filesystem::path& path);

EmbeddingSet parse_csv_embeddings(const std::string& text,
                                  const std::string& label = {});

void write_embeddings_npy(const std::filesystem::path& path,
                          const EmbeddingSet& set,
                          NpyDtype dtype = NpyDtype::kFloat32);

// One value per line, optionally prefixed by a label ("label,value"). A
// non-numeric first line is treated as a header.
struct LabeledValues {
  std::vector<std::string> labels;  // empty strings when unlabeled
  std::vector<double> values;
};

LabeledValues parse_labeled_values(const std::string& text);
LabeledValues read_labeled_values(const std::filesystem::path& path);

// Reads a whole file; IoError naming the path on failure.
std::string read_file(const std::filesystem::path& path);

}  // namespace markeval

#endif  // MARKEVAL_EMBEDDING_IO_H_
