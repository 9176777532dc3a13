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

#ifndef MARKEVAL_PARALLEL_H_
#define MARKEVAL_PARALLEL_H_

#include <cstddef>
#include <functional>

namespace markeval {

// Worker count for internal loops. Honors the ME_THREADS environment variable
// (positive integer); otherwise uses the hardware concurrency.
std::size_t thread_count();

// Runs body(i) for i in [0, n) split into contiguous chunks across
// thread_count() workers. Callers write only to slot i, so results do not
// depend on the schedule.
void parallel_for(std::size_t n, const std::function<void(std::size_t)>& body);

}  // namespace markeval

#endif  // MARKEVAL_PARALLEL_H_
