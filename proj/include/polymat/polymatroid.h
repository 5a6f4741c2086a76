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

// Polymatroids on small ground sets stored as explicit rank tables.
//
// A Polymatroid on n elements owns one exact rank value per subset of
// {0, ..., n-1}, indexed by bitmask. Ranks are Rationals; most of the library
// works only with integer polymatroids and checks is_integral() on entry,
// while the cyclic-flat routines in zflats.h also accept fractional ranks.
//
// Values are immutable and share their table, so copies are cheap and may
// be passed between threads freely.

#ifndef POLYMAT_POLYMATROID_H_
#define POLYMAT_POLYMATROID_H_

#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "polymat/error.h"
#include "polymat/rational.h"
#include "polymat/subset.h"

namespace polymat {

class Polymatroid {
 public:
  // The empty polymatroid (n = 0).
  Polymatroid();

  // Wraps a table without checking the polymatroid axioms. The table must
  // have exactly 2^n entries. Use validate() for untrusted input.
  static Polymatroid from_table_unchecked(int n, std::vector<Rational> ranks);

  int size() const { return n_; }
  Subset ground() const { return full_set(n_); }

  const Rational& rank(Subset s) const { return (*ranks_)[s]; }
  const Rational& operator()(Subset s) const { return (*ranks_)[s]; }
  const Rational& element_rank(int i) const { return (*ranks_)[singleton(i)]; }
  const Rational& total_rank() const { return (*ranks_)[ground()]; }

  // Integer view of rank(s); requires is_integral().
  std::int64_t int_rank(Subset s) const;

  bool is_integral() const { return integral_; }
  // Throws kNotIntegral naming `operation` unless is_integral().
  void require_integral(const char* operation) const;

  std::span<const Rational> table() const { return *ranks_; }

  // Elements of rank zero.
  Subset loops() const;
  // Largest singleton rank (0 for the empty polymatroid).
  Rational max_element_rank() const;

  friend bool operator==(const Polymatroid& a, const Polymatroid& b);

 private:
  Polymatroid(int n, std::shared_ptr<const std::vector<Rational>> ranks,
              bool integral);

  int n_ = 0;
  std::shared_ptr<const std::vector<Rational>> ranks_;
  bool integral_ = true;
};

// First axiom violated by a rank table. `a` and `b` form the witnessing pair:
// for kNotMonotone, a ⊂ b with rank(a) > rank(b); for kNotSubmodular,
// rank(a∪b) + rank(a∩b) > rank(a) + rank(b). kNegativeRank and
// kNotNormalized carry the offending set in `a`.
struct RankViolation {
  ErrorCode kind;
  Subset a = 0;
  Subset b = 0;

  std::string describe() const;
};

// Checks normalization, monotonicity and submodularity in that order and
// returns the first violation. Violations are searched in increasing mask
// order; submodularity is checked through its local form
// rank(S+i) + rank(S+j) >= rank(S+i+j) + rank(S), which is equivalent.
// Throws kMissingSubset if the table does not have 2^n entries.
std::optional<RankViolation> find_rank_violation(int n,
                                                 std::span<const Rational> ranks);

// Error thrown by validate(), carrying the structured violation.
class RankAxiomError : public Error {
 public:
  explicit RankAxiomError(const RankViolation& violation)
      : Error(violation.kind, violation.describe()), violation_(violation) {}
  const RankViolation& violation() const { return violation_; }

 private:
  RankViolation violation_;
};

Polymatroid validate(int n, std::vector<Rational> ranks);

// Deletes `deleted` and contracts `contracted`; the surviving elements are
// renumbered in increasing order.
Polymatroid minor(const Polymatroid& rho, Subset deleted, Subset contracted);

// rho*(X) = k|X| - rho(E) + rho(E - X). Requires rho(i) <= k for every i.
Polymatroid k_dual(const Polymatroid& rho, std::int64_t k);

// Elements of `second` are shifted up by first.size().
Polymatroid direct_sum(const Polymatroid& first, const Polymatroid& second);

// A nonempty proper subset S (containing element 0) with
// rho(S) + rho(E - S) = rho(E), which makes rho the direct sum of its
// restrictions to S and E - S. Requires size() >= 1.
std::optional<Subset> find_separator(const Polymatroid& rho);

// True iff rho is not a direct sum of two polymatroids on nonempty sets.
// A single element is connected. Throws kEmptyGroundSet when n = 0.
bool is_connected(const Polymatroid& rho);

}  // namespace polymat

#endif  // POLYMAT_POLYMATROID_H_
