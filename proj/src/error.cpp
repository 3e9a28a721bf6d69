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

#include "pathex/error.h"

namespace pathex {

std::string_view ErrorKindName(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::kInvalidArgument:
      return "InvalidArgument";
    case ErrorKind::kParse:
      return "ParseError";
    case ErrorKind::kUnsupportedGeometry:
      return "UnsupportedGeometry";
    case ErrorKind::kInvalidRing:
      return "InvalidRing";
    case ErrorKind::kEmptyObject:
      return "EmptyObject";
    case ErrorKind::kEmptyRegionSet:
      return "EmptyRegionSet";
    case ErrorKind::kBounds:
      return "BoundsError";
    case ErrorKind::kIndexBuild:
      return "IndexBuildError";
    case ErrorKind::kJoin:
      return "JoinError";
    case ErrorKind::kBudget:
      return "BudgetError";
    case ErrorKind::kPlanCorrupt:
      return "PlanCorrupt";
    case ErrorKind::kShape:
      return "ShapeError";
    case ErrorKind::kPacking:
      return "PackingError";
    case ErrorKind::kIo:
      return "IoError";
  }
  return "Unknown";
}

Error::Error(ErrorKind kind, const std::string& message)
    : std::runtime_error(std::string(ErrorKindName(kind)) + ": " + message),
      kind_(kind) {}

}  // namespace pathex
