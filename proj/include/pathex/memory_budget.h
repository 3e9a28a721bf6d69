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

#ifndef PATHEX_MEMORY_BUDGET_H_
#define PATHEX_MEMORY_BUDGET_H_

#include <cstdint>
#include <optional>
#include <string_view>

namespace pathex {

/// Upper bound on the bytes held by one slab's patch and mask planes.
class MemoryBudget {
 public:
  static constexpr std::uint64_t kMinBytes = std::uint64_t{1} << 20;
  static constexpr std::uint64_t kDefaultBytes = std::uint64_t{1} << 30;

  MemoryBudget() = default;
  /// Throws kBudget below kMinBytes.
  explicit MemoryBudget(std::uint64_t bytes);

  std::uint64_t bytes() const { return bytes_; }

 private:
  std::uint64_t bytes_ = kDefaultBytes;
};

/// "1048576", "512KiB", "8MiB", "1GiB" (also KB/MB/GB as binary units).
std::optional<std::uint64_t> ParseByteSize(std::string_view text);

/// Flag beats environment beats the 1 GiB default. Unparseable text or a
/// value below the floor throws kBudget.
MemoryBudget ResolveBudget(std::optional<std::string_view> flag_value,
                           std::optional<std::string_view> env_value);

inline constexpr const char* kBudgetEnvVar = "PATHEX_MEMORY_BUDGET";

}  // namespace pathex

#endif  // PATHEX_MEMORY_BUDGET_H_
