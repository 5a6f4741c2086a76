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

// Enumeration caps. Both default to desk-scale values and can be raised or
// lowered with the POLYMAT_MAX_SUBSETS environment variable, which sets the
// largest number of subsets (2^n) in any explicit rank table and the largest
// integer box enumerated by the vector routines.

#ifndef POLYMAT_LIMITS_H_
#define POLYMAT_LIMITS_H_

#include <cstdint>
#include <string_view>

namespace polymat {

inline constexpr std::uint64_t kDefaultMaxSubsets = std::uint64_t{1} << 20;
inline constexpr std::uint64_t kDefaultMaxVectors = 1000000;

std::uint64_t max_subsets();
std::uint64_t max_vectors();

// Throws kCapacityExceeded unless a table over n elements fits the cap.
void require_table_capacity(int n, std::string_view what);

}  // namespace polymat

#endif  // POLYMAT_LIMITS_H_
