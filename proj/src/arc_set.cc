// Copyright 2026 The linspp Authors.
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

#include "linspp/arc_set.h"

#include "linspp/error.h"

namespace linspp {

std::string_view ErrorCodeName(ErrorCode code) {
  switch (code) {
    case ErrorCode::kCycleDetected: return "CycleDetected";
    case ErrorCode::kSourceEqualsSink: return "SourceEqualsSink";
    case ErrorCode::kDanglingVertexReference: return "DanglingVertexReference";
    case ErrorCode::kNoStPath: return "NoStPath";
    case ErrorCode::kVertexUnreachable: return "VertexUnreachable";
    case ErrorCode::kSourceHasNoNonbasicPath: return "SourceHasNoNonbasicPath";
    case ErrorCode::kTooManyPaths: return "TooManyPaths";
    case ErrorCode::kTooManySystems: return "TooManySystems";
    case ErrorCode::kUnknownArc: return "UnknownArc";
    case ErrorCode::kOrderMismatch: return "OrderMismatch";
    case ErrorCode::kNotStronglyBasic: return "NotStronglyBasic";
    case ErrorCode::kPropertyPiViolated: return "PropertyPiViolated";
    case ErrorCode::kNotLinearizable: return "NotLinearizable";
    case ErrorCode::kDimensionMismatch: return "DimensionMismatch";
    case ErrorCode::kParseError: return "ParseError";
    case ErrorCode::kDuplicateCostKey: return "DuplicateCostKey";
    case ErrorCode::kArcIdOutOfRange: return "ArcIdOutOfRange";
    case ErrorCode::kUnsupportedParams: return "UnsupportedParams";
    case ErrorCode::kIoError: return "IoError";
    case ErrorCode::kInvalidArgument: return "InvalidArgument";
  }
  return "Unknown";
}

ArcSet::ArcSet(std::initializer_list<ArcId> ids)
    : ArcSet(FromIds(std::span<const ArcId>(ids.begin(), ids.size()))) {}

ArcSet ArcSet::FromIds(std::span<const ArcId> ids) {
  if (ids.size() > static_cast<size_t>(kMaxOrder)) {
    throw Error(ErrorCode::kOrderMismatch,
                "arc subset larger than the supported maximum order " +
                    std::to_string(kMaxOrder));
  }
  ArcSet s;
  std::copy(ids.begin(), ids.end(), s.ids_.begin());
  s.size_ = static_cast<std::uint8_t>(ids.size());
  std::sort(s.ids_.begin(), s.ids_.begin() + s.size_);
  if (std::adjacent_find(s.begin(), s.end()) != s.end()) {
    throw Error(ErrorCode::kParseError, "arc subset repeats an arc");
  }
  return s;
}

ArcSet ArcSet::With(ArcId id) const {
  ArcSet s;
  const ArcId* pos = std::lower_bound(begin(), end(), id);
  const int k = static_cast<int>(pos - begin());
  std::copy(begin(), pos, s.ids_.begin());
  s.ids_[k] = id;
  std::copy(pos, end(), s.ids_.begin() + k + 1);
  s.size_ = static_cast<std::uint8_t>(size_ + 1);
  return s;
}

ArcSet ArcSet::Without(ArcId id) const {
  ArcSet s;
  auto out = s.ids_.begin();
  for (ArcId a : *this) {
    if (a != id) *out++ = a;
  }
  s.size_ = static_cast<std::uint8_t>(out - s.ids_.begin());
  return s;
}

std::string ArcSet::ToString() const {
  std::string out;
  for (int i = 0; i < size_; ++i) {
    if (i > 0) out += ',';
    out += std::to_string(ids_[i]);
  }
  return out;
}

}  // namespace linspp
