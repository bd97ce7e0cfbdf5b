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

#ifndef LINSPP_ARC_SET_H_
#define LINSPP_ARC_SET_H_

#include <algorithm>
#include <array>
#include <compare>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <string>
#include <utility>

namespace linspp {

// Arc ids are 1-based; 0 never names an arc.
using ArcId = std::uint32_t;
using VertexId = std::int32_t;

inline constexpr ArcId kNoArc = 0;
inline constexpr VertexId kNoVertex = -1;

// Largest interaction order supported by the fixed-capacity subset key.
inline constexpr int kMaxOrder = 7;

// A small sorted set of distinct arc ids, used as the key of interaction
// costs. Ordering is lexicographic over the sorted id tuple, so the empty set
// comes first.
class ArcSet {
 public:
  ArcSet() = default;
  // Sorts and validates; throws Error(kParseError) on duplicates and
  // Error(kOrderMismatch) when more than kMaxOrder ids are given.
  ArcSet(std::initializer_list<ArcId> ids);
  static ArcSet FromIds(std::span<const ArcId> ids);

  int size() const { return size_; }
  bool empty() const { return size_ == 0; }
  const ArcId* begin() const { return ids_.data(); }
  const ArcId* end() const { return ids_.data() + size_; }
  ArcId operator[](int i) const { return ids_[i]; }
  std::span<const ArcId> ids() const { return {begin(), end()}; }

  bool contains(ArcId id) const {
    return std::binary_search(begin(), end(), id);
  }
  // Returns this set plus `id`; `id` must not already be present and the
  // result must fit kMaxOrder.
  ArcSet With(ArcId id) const;
  ArcSet Without(ArcId id) const;

  // Comma-joined ids, empty string for the empty set.
  std::string ToString() const;

  friend bool operator==(const ArcSet& a, const ArcSet& b) {
    return a.size_ == b.size_ && std::equal(a.begin(), a.end(), b.begin());
  }
  friend std::strong_ordering operator<=>(const ArcSet& a, const ArcSet& b) {
    return std::lexicographical_compare_three_way(a.begin(), a.end(),
                                                  b.begin(), b.end());
  }

  template <typename H>
  friend H AbslHashValue(H h, const ArcSet& s) {
    return H::combine_contiguous(std::move(h), s.ids_.data(), s.size_);
  }

 private:
  std::array<ArcId, kMaxOrder> ids_{};
  std::uint8_t size_ = 0;
};

}  // namespace linspp

#endif  // LINSPP_ARC_SET_H_
