// Copyright 2026 The haalab Authors.
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

#ifndef HAA_PARALLEL_HPP
#define HAA_PARALLEL_HPP

#include <cstddef>
#include <functional>

namespace haa {

/// Hardware concurrency, at least 1.
std::size_t default_threads();

/// Calls fn(i) for i in [0, n) on up to `threads` workers. Each index runs
/// exactly once; callers write results into slot i so the merge order is
/// fixed. The first exception thrown by any task is rethrown.
void parallel_for(std::size_t n, std::size_t threads,
                  const std::function<void(std::size_t)>& fn);

}  // namespace haa

#endif  // HAA_PARALLEL_HPP
