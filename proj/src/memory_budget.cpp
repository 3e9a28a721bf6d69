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

#include "pathex/memory_budget.h"

#include <array>
#include <charconv>
#include <string>
#include <utility>

#include "pathex/error.h"

namespace pathex {

MemoryBudget::MemoryBudget(std::uint64_t bytes) : bytes_(bytes) {
  if (bytes_ < kMinBytes) {
    throw Error(ErrorKind::kBudget, "memory budget of " + std::to_string(bytes) +
                                        " bytes is below the 1 MiB floor");
  }
}

std::optional<std::uint64_t> ParseByteSize(std::string_view text) {
  while (!text.empty() && text.front() == ' ') text.remove_prefix(1);
  while (!text.empty() && text.back() == ' ') text.remove_suffix(1);
  std::uint64_t value = 0;
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc() || ptr == text.data()) return std::nullopt;
  std::string_view suffix(ptr, text.data() + text.size() - ptr);
  static constexpr std::array<std::pair<std::string_view, int>, 10> kUnits{{
      {"", 0}, {"B", 0}, {"KiB", 10}, {"KB", 10}, {"K", 10},
      {"MiB", 20}, {"MB", 20}, {"M", 20}, {"GiB", 30}, {"GB", 30},
  }};
  for (const auto& [unit, shift] : kUnits) {
    if (suffix == unit) {
      if (shift > 0 && value > (~std::uint64_t{0} >> shift)) return std::nullopt;
      return value << shift;
    }
  }
  if (suffix == "G") return value << 30;
  return std::nullopt;
}

MemoryBudget ResolveBudget(std::optional<std::string_view> flag_value,
                           std::optional<std::string_view> env_value) {
  std::optional<std::string_view> chosen = flag_value ? flag_value : env_value;
  if (!chosen) return MemoryBudget();
  const std::optional<std::uint64_t> bytes = ParseByteSize(*chosen);
  if (!bytes) {
    throw Error(ErrorKind::kBudget, "cannot parse memory budget '" +
                                        std::string(*chosen) + "'");
  }
  return MemoryBudget(*bytes);
}

}  // namespace pathex
