// Copyright 2026 The profitshare Authors
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

#pragma once

#include <bit>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

namespace profitshare {

using Mask = std::uint32_t;

// Hard ceiling on the ground set; coalitions are 32-bit masks.
inline constexpr int kMaxPlayers = 30;

// A set of players drawn from {1..n}. Player i is stored as bit (i - 1),
// which is also the ExplicitTable index convention. Iteration over members()
// is in ascending player order.
class Coalition {
 public:
  constexpr Coalition() = default;

  static constexpr Coalition from_mask(Mask mask) { return Coalition(mask); }
  static Coalition of(std::initializer_list<int> players);
  static Coalition of(std::span<const int> players);
  // {1..n}
  static Coalition all(int n);

  constexpr Mask mask() const { return mask_; }
  constexpr bool empty() const { return mask_ == 0; }
  int size() const { return std::popcount(mask_); }

  bool contains(int player) const {
    return player >= 1 && player <= kMaxPlayers &&
           ((mask_ >> (player - 1)) & 1U) != 0;
  }
  Coalition with(int player) const;
  Coalition without(int player) const;

  // Largest member index, 0 for the empty coalition.
  int max_member() const { return mask_ == 0 ? 0 : 32 - std::countl_zero(mask_); }

  bool is_subset_of(Coalition other) const {
    return (mask_ & ~other.mask_) == 0;
  }
  bool intersects(Coalition other) const { return (mask_ & other.mask_) != 0; }

  std::vector<int> members() const;

  friend constexpr Coalition operator|(Coalition a, Coalition b) {
    return Coalition(a.mask_ | b.mask_);
  }
  friend constexpr Coalition operator&(Coalition a, Coalition b) {
    return Coalition(a.mask_ & b.mask_);
  }
  friend constexpr bool operator==(Coalition a, Coalition b) = default;

 private:
  constexpr explicit Coalition(Mask mask) : mask_(mask) {}
  Mask mask_ = 0;
};

// "{1,3}" style rendering for messages and reports.
std::string to_string(Coalition coalition);

// Calls visit(sub) for every subset of `mask`, including 0 and `mask`,
// in decreasing numeric order.
template <typename Visit>
void for_each_submask(Mask mask, Visit&& visit) {
  Mask sub = mask;
  while (true) {
    visit(sub);
    if (sub == 0) break;
    sub = (sub - 1) & mask;
  }
}

}  // namespace profitshare
