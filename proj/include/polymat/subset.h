// Copyright 2026 The Authors.
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

// Subsets of a ground set {0, ..., n-1} encoded as bitmasks.
//
// Element i of the ground set is bit i. Externally (text formats, reports)
// elements are numbered from 1, so element i prints as i+1. All iteration
// over subsets runs in increasing mask order.

#ifndef POLYMAT_SUBSET_H_
#define POLYMAT_SUBSET_H_

#include <bit>
#include <cstdint>
#include <string>
#include <vector>

namespace polymat {

using Subset = std::uint32_t;

// Hard ceiling imposed by the mask width; the configurable table cap in
// limits.h is normally much lower.
inline constexpr int kMaskBits = 30;

constexpr Subset full_set(int n) {
  return n == 0 ? Subset{0} : (Subset{1} << n) - 1;
}
constexpr Subset singleton(int i) { return Subset{1} << i; }
constexpr bool contains(Subset s, int i) { return (s >> i) & 1U; }
constexpr bool is_subset(Subset a, Subset b) { return (a & ~b) == 0; }
constexpr int cardinality(Subset s) { return std::popcount(s); }

// Elements of s in increasing order.
std::vector<int> elements(Subset s);

// "{1,3,4}" with 1-based labels; "{}" for the empty set.
std::string format_subset(Subset s);

// Calls f(t) for every t within s, in increasing mask order, including
// t = 0 and t = s.
template <typename F>
void for_each_submask(Subset s, F&& f) {
  Subset t = 0;
  while (true) {
    f(t);
    if (t == s) break;
    t = (t - s) & s;
  }
}

// Spreads the low bits of `packed` onto the set bits of `positions`
// (bit k of packed goes to the k-th smallest element of positions).
constexpr Subset deposit_bits(Subset packed, Subset positions) {
  Subset out = 0;
  int k = 0;
  while (positions != 0) {
    Subset low = positions & (~positions + 1);
    if ((packed >> k) & 1U) out |= low;
    ++k;
    positions &= positions - 1;
  }
  return out;
}

// Inverse of deposit_bits: gathers the bits of s found at `positions`
// into the low bits of the result.
constexpr Subset extract_bits(Subset s, Subset positions) {
  Subset out = 0;
  int k = 0;
  while (positions != 0) {
    Subset low = positions & (~positions + 1);
    if (s & low) out |= Subset{1} << k;
    ++k;
    positions &= positions - 1;
  }
  return out;
}

}  // namespace polymat

#endif  // POLYMAT_SUBSET_H_
