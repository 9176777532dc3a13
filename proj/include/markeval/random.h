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

#ifndef MARKEVAL_RANDOM_H_
#define MARKEVAL_RANDOM_H_

#include <cstdint>
#include <optional>
#include <random>

namespace markeval {

// Seeded generator with a fixed algorithm identity:
//   * bits:    std::mt19937_64 (sequence fixed by the C++ standard),
//   * uniform: top 53 bits scaled to [0, 1),
//   * normal:  Box-Muller on (1 - u1, u2), both outputs used in order,
//   * integer: rejection sampling on the raw 64-bit output.
// std::*_distribution is avoided because its output is implementation-defined.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  double uniform();
  double normal();
  // Uniform integer in [0, n); n must be positive.
  std::uint64_t below(std::uint64_t n);

 private:
  std::mt19937_64 engine_;
  std::optional<double> spare_;
};

// Child seed for an independent stream (splitmix64 finalizer).
std::uint64_t derive_seed(std::uint64_t master, std::uint64_t stream);

}  // namespace markeval

#endif  // MARKEVAL_RANDOM_H_
