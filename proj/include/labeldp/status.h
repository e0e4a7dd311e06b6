// Copyright 2026 The labeldp Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef LABELDP_STATUS_H_
#define LABELDP_STATUS_H_

#include "absl/strings/string_view.h"

#include "absl/status/status.h"
#include "absl/status/statusor.h"
#include "absl/strings/str_cat.h"

namespace labeldp {

// Every error produced by this library carries one of these tags as the
// leading token of its message, e.g. "NonMonotoneNodes: nodes[2] <= nodes[1]".
// The absl code gives the coarse category; the tag names the exact condition.
namespace error_tag {
inline constexpr absl::string_view kNonMonotoneNodes = "NonMonotoneNodes";
inline constexpr absl::string_view kNegativeMass = "NegativeMass";
inline constexpr absl::string_view kZeroTotalMass = "ZeroTotalMass";
inline constexpr absl::string_view kReversedBounds = "ReversedBounds";
inline constexpr absl::string_view kNonPositiveZeta = "NonPositiveZeta";
inline constexpr absl::string_view kNegativeEpsilon = "NegativeEpsilon";
inline constexpr absl::string_view kEqualHeights = "EqualHeights";
inline constexpr absl::string_view kOutOfInterval = "OutOfInterval";
inline constexpr absl::string_view kWrongKind = "WrongKind";
inline constexpr absl::string_view kInvalidDelta = "InvalidDelta";
inline constexpr absl::string_view kEmptyDataset = "EmptyDataset";
inline constexpr absl::string_view kDegenerateSpread = "DegenerateSpread";
inline constexpr absl::string_view kLengthMismatch = "LengthMismatch";
inline constexpr absl::string_view kInsufficientSamples = "InsufficientSamples";
inline constexpr absl::string_view kInvalidBudget = "InvalidBudget";
}  // namespace error_tag

template <typename... Args>
absl::Status TaggedError(absl::StatusCode code, absl::string_view tag,
                         const Args&... args) {
  return absl::Status(code, absl::StrCat(tag, ": ", args...));
}

// True when `status` was produced with the given tag.
inline bool HasErrorTag(const absl::Status& status, absl::string_view tag) {
  absl::string_view message = status.message();
  return !status.ok() && message.size() > tag.size() &&
         message.substr(0, tag.size()) == tag && message[tag.size()] == ':';
}

}  // namespace labeldp

#define LABELDP_STATUS_CONCAT_INNER_(a, b) a##b
#define LABELDP_STATUS_CONCAT_(a, b) LABELDP_STATUS_CONCAT_INNER_(a, b)

#define LABELDP_RETURN_IF_ERROR(expr)             \
  do {                                            \
    if (absl::Status _status = (expr); !_status.ok()) \
      return _status;                             \
  } while (0)

#define LABELDP_ASSIGN_OR_RETURN_IMPL_(tmp, lhs, rexpr) \
  auto tmp = (rexpr);                                   \
  if (!tmp.ok()) return tmp.status();                   \
  lhs = *std::move(tmp)

#define LABELDP_ASSIGN_OR_RETURN(lhs, rexpr) \
  LABELDP_ASSIGN_OR_RETURN_IMPL_(            \
      LABELDP_STATUS_CONCAT_(_statusor_, __LINE__), lhs, rexpr)

#endif  // LABELDP_STATUS_H_
