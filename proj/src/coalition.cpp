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

#include "profitshare/coalition.hpp"

#include "profitshare/errors.hpp"

namespace profitshare {
namespace {

Mask bit_for(int player) {
  if (player < 1 || player > kMaxPlayers) {
    throw InvalidCoalition("player index " + std::to_string(player) +
                           " outside [1, " + std::to_string(kMaxPlayers) + "]");
  }
  return Mask{1} << (player - 1);
}

}  // namespace

Coalition Coalition::of(std::initializer_list<int> players) {
  return of(std::span<const int>(players.begin(), players.size()));
}

Coalition Coalition::of(std::span<const int> players) {
  Mask mask = 0;
  for (int p : players) mask |= bit_for(p);
  return Coalition(mask);
}

Coalition Coalition::all(int n) {
  if (n < 0 || n > kMaxPlayers) {
    throw InvalidArgument("ground set size " + std::to_string(n) +
                          " outside [0, " + std::to_string(kMaxPlayers) + "]");
  }
  return Coalition(n == 0 ? 0 : (n == 32 ? ~Mask{0} : ((Mask{1} << n) - 1)));
}

Coalition Coalition::with(int player) const {
  return Coalition(mask_ | bit_for(player));
}

Coalition Coalition::without(int player) const {
  return Coalition(mask_ & ~bit_for(player));
}

std::vector<int> Coalition::members() const {
  std::vector<int> out;
  out.reserve(static_cast<std::size_t>(size()));
  for (Mask m = mask_; m != 0; m &= m - 1) {
    out.push_back(std::countr_zero(m) + 1);
  }
  return out;
}

std::string to_string(Coalition coalition) {
  std::string out = "{";
  bool first = true;
  for (int p : coalition.members()) {
    if (!first) out += ",";
    out += std::to_string(p);
    first = false;
  }
  return out + "}";
}

}  // namespace profitshare
