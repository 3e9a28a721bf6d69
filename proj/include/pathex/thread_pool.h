// Copyright 2026 The pathex Authors. All Rights Reserved.
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

#ifndef PATHEX_THREAD_POOL_H_
#define PATHEX_THREAD_POOL_H_

#include <cstddef>
#include <functional>

namespace pathex {

/// std::thread::hardware_concurrency(), at least 1.
int DefaultWorkerCount();

/// Runs body(i) for i in [0, count) on up to `workers` threads, handing
/// out indices dynamically. If any call throws, the exception from the
/// lowest failing index is rethrown after all threads join.
void ParallelFor(std::size_t count, int workers,
                 const std::function<void(std::size_t)>& body);

}  // namespace pathex

#endif  // PATHEX_THREAD_POOL_H_
