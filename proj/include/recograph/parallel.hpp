// Copyright 2026 The recograph Authors
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

#ifndef RECOGRAPH_PARALLEL_HPP_
#define RECOGRAPH_PARALLEL_HPP_

#include <cstddef>
#include <functional>

namespace recograph {

// Worker count from RECOGRAPH_THREADS; unset, 0 or unparsable means
// std::thread::hardware_concurrency().
std::size_t default_thread_count();

// Calls task(i) for every i in [0, count) using up to `threads` workers
// (0 = default_thread_count()). Tasks must only write to state owned by
// their index. The first exception thrown by a task is rethrown after all
// workers have joined.
void parallel_for(std::size_t count, std::size_t threads,
                  const std::function<void(std::size_t)>& task);

}  // namespace recograph

#endif  // RECOGRAPH_PARALLEL_HPP_
