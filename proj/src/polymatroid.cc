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

#include "polymat/polymatroid.h"

#include <cstdlib>
#include <string>

#include "polymat/error.h"
#include "polymat/limits.h"

namespace polymat {

std::vector<int> elements(Subset s) {
  std::vector<int> out;
  while (s != 0) {
    out.push_back(std::countr_zero(s));
    s &= s - 1;
  }
  return out;
}

std::string format_subset(Subset s) {
  std::string out = "{";
  bool first = true;
  for (int i : elements(s)) {
    if (!first) out += ',';
    out += std::to_string(i + 1);
    first = false;
  }
  return out + "}";
}

std::string_view error_code_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::kInvalidArgument: return "InvalidArgument";
    case ErrorCode::kParseError: return "ParseError";
    case ErrorCode::kCapacityExceeded: return "CapacityExceeded";
    case ErrorCode::kNotIntegral: return "NotIntegral";
    case ErrorCode::kMissingSubset: return "MissingSubset";
    case ErrorCode::kDuplicateSubset: return "DuplicateSubset";
    case ErrorCode::kNegativeRank: return "NegativeRank";
    case ErrorCode::kNotNormalized: return "NotNormalized";
    case ErrorCode::kNotMonotone: return "NotMonotone";
    case ErrorCode::kNotSubmodular: return "NotSubmodular";
    case ErrorCode::kOverlappingSets: return "OverlappingSets";
    case ErrorCode::kKTooSmall: return "KTooSmall";
    case ErrorCode::kEmptyGroundSet: return "EmptyGroundSet";
    case ErrorCode::kElementOutOfRange: return "ElementOutOfRange";
    case ErrorCode::kNotAMatroid: return "NotAMatroid";
    case ErrorCode::kUnknownElement: return "UnknownElement";
    case ErrorCode::kBlockSizeMismatch: return "BlockSizeMismatch";
    case ErrorCode::kGroundSetMismatch: return "GroundSetMismatch";
    case ErrorCode::kNotADecomposition: return "NotADecomposition";
    case ErrorCode::kEmptyFamily: return "EmptyFamily";
    case ErrorCode::kBoundsMismatch: return "BoundsMismatch";
    case ErrorCode::kAxiomsFailed: return "AxiomsFailed";
    case ErrorCode::kElementNotInSet: return "ElementNotInSet";
    case ErrorCode::kNotApplicable: return "NotApplicable";
    case ErrorCode::kRankDomainMismatch: return "RankDomainMismatch";
    case ErrorCode::kUnknownMatroidElement: return "UnknownMatroidElement";
    case ErrorCode::kMalformedDiagram: return "MalformedDiagram";
    case ErrorCode::kUnknownName: return "UnknownName";
  }
  return "Unknown";
}

namespace {

std::uint64_t env_cap(std::uint64_t fallback) {
  const char* value = std::getenv("POLYMAT_MAX_SUBSETS");
  if (value == nullptr || *value == '\0') return fallback;
  char* end = nullptr;
  unsigned long long parsed = std::strtoull(value, &end, 10);
  if (end == value || *end != '\0' || parsed == 0) return fallback;
  return parsed;
}

}  // namespace

std::uint64_t max_subsets() { return env_cap(kDefaultMaxSubsets); }
std::uint64_t max_vectors() { return env_cap(kDefaultMaxVectors); }

void require_table_capacity(int n, std::string_view what) {
  if (n < 0) throw Error(ErrorCode::kInvalidArgument, "negative ground set size");
  if (n > kMaskBits || (std::uint64_t{1} << n) > max_subsets()) {
    throw Error(ErrorCode::kCapacityExceeded,
                std::string(what) + " needs a table over " + std::to_string(n) +
                    " elements; the cap is " + std::to_string(max_subsets()) +
                    " subsets");
  }
}

Polymatroid::Polymatroid()
    : Polymatroid(0, std::make_shared<const std::vector<Rational>>(1, Rational(0)),
                  true) {}

Polymatroid::Polymatroid(int n, std::shared_ptr<const std::vector<Rational>> ranks,
                         bool integral)
    : n_(n), ranks_(std::move(ranks)), integral_(integral) {}

Polymatroid Polymatroid::from_table_unchecked(int n, std::vector<Rational> ranks) {
  require_table_capacity(n, "rank table");
  if (ranks.size() != (std::size_t{1} << n)) {
    throw Error(ErrorCode::kMissingSubset,
                "expected " + std::to_string(std::size_t{1} << n) +
                    " rank values, got " + std::to_string(ranks.size()));
  }
  bool integral = true;
  for (const auto& r : ranks) integral = integral && r.is_integer();
  return Polymatroid(n, std::make_shared<const std::vector<Rational>>(std::move(ranks)),
                     integral);
}

std::int64_t Polymatroid::int_rank(Subset s) const {
  const Rational& r = rank(s);
  if (!r.is_integer()) {
    throw Error(ErrorCode::kNotIntegral, "rank of " + format_subset(s) + " is " +
                                             r.to_string());
  }
  return r.num();
}

void Polymatroid::require_integral(const char* operation) const {
  if (!integral_) {
    throw Error(ErrorCode::kNotIntegral,
                std::string(operation) + " requires an integer polymatroid");
  }
}

Subset Polymatroid::loops() const {
  Subset out = 0;
  for (int i = 0; i < n_; ++i) {
    if (element_rank(i) == Rational(0)) out |= singleton(i);
  }
  return out;
}

Rational Polymatroid::max_element_rank() const {
  Rational best(0);
  for (int i = 0; i < n_; ++i) best = std::max(best, element_rank(i));
  return best;
}

bool operator==(const Polymatroid& a, const Polymatroid& b) {
  if (a.n_ != b.n_) return false;
  if (a.ranks_ == b.ranks_) return true;
  return *a.ranks_ == *b.ranks_;
}

std::string RankViolation::describe() const {
  switch (kind) {
    case ErrorCode::kNegativeRank:
      return "negative rank at " + format_subset(a);
    case ErrorCode::kNotNormalized:
      return "rank of {} is not 0";
    case ErrorCode::kNotMonotone:
      return "rank(" + format_subset(a) + ") > rank(" + format_subset(b) + ")";
    case ErrorCode::kNotSubmodular:
      return "rank(" + format_subset(a | b) + ") + rank(" + format_subset(a & b) +
             ") > rank(" + format_subset(a) + ") + rank(" + format_subset(b) + ")";
    default:
      return std::string(error_code_name(kind));
  }
}

namespace {

// rank(a) + rank(b) compared against rank(c) + rank(d), with an integer fast
// path.
bool sum_less(std::span<const Rational> r, Subset a, Subset b, Subset c, Subset d) {
  const Rational &ra = r[a], &rb = r[b], &rc = r[c], &rd = r[d];
  if (ra.is_integer() && rb.is_integer() && rc.is_integer() && rd.is_integer()) {
    return ra.num() + rb.num() < rc.num() + rd.num();
  }
  return ra + rb < rc + rd;
}

}  // namespace

std::optional<RankViolation> find_rank_violation(int n,
                                                 std::span<const Rational> ranks) {
  require_table_capacity(n, "rank table");
  if (ranks.size() != (std::size_t{1} << n)) {
    throw Error(ErrorCode::kMissingSubset,
                "expected " + std::to_string(std::size_t{1} << n) +
                    " rank values, got " + std::to_string(ranks.size()));
  }
  const Subset ground = full_set(n);
  for (Subset s = 0; s <= ground; ++s) {
    if (ranks[s] < Rational(0)) return RankViolation{ErrorCode::kNegativeRank, s, s};
  }
  if (ranks[0] != Rational(0)) return RankViolation{ErrorCode::kNotNormalized, 0, 0};
  for (Subset b = 1; b <= ground; ++b) {
    for (int i : elements(b)) {
      Subset a = b & ~singleton(i);
      if (ranks[a] > ranks[b]) return RankViolation{ErrorCode::kNotMonotone, a, b};
    }
  }
  for (Subset s = 0; s <= ground; ++s) {
    Subset outside = ground & ~s;
    for (int i : elements(outside)) {
      for (int j : elements(outside & ~full_set(i + 1))) {
        Subset si = s | singleton(i);
        Subset sj = s | singleton(j);
        if (sum_less(ranks, si, sj, si | sj, s)) {
          return RankViolation{ErrorCode::kNotSubmodular, si, sj};
        }
      }
    }
  }
  return std::nullopt;
}

Polymatroid validate(int n, std::vector<Rational> ranks) {
  if (auto violation = find_rank_violation(n, ranks)) {
    throw RankAxiomError(*violation);
  }
  return Polymatroid::from_table_unchecked(n, std::move(ranks));
}

Polymatroid minor(const Polymatroid& rho, Subset deleted, Subset contracted) {
  const Subset ground = rho.ground();
  if (!is_subset(deleted | contracted, ground)) {
    throw Error(ErrorCode::kElementOutOfRange,
                "minor sets must lie in the ground set");
  }
  if ((deleted & contracted) != 0) {
    throw Error(ErrorCode::kOverlappingSets,
                format_subset(deleted & contracted) + " is both deleted and contracted");
  }
  const Subset kept = ground & ~(deleted | contracted);
  const int m = cardinality(kept);
  const Rational base = rho(contracted);
  std::vector<Rational> ranks(std::size_t{1} << m);
  for (Subset t = 0; t < ranks.size(); ++t) {
    ranks[t] = rho(deposit_bits(t, kept) | contracted) - base;
  }
  return Polymatroid::from_table_unchecked(m, std::move(ranks));
}

Polymatroid k_dual(const Polymatroid& rho, std::int64_t k) {
  if (k <= 0) throw Error(ErrorCode::kInvalidArgument, "k must be positive");
  for (int i = 0; i < rho.size(); ++i) {
    if (rho.element_rank(i) > Rational(k)) {
      throw Error(ErrorCode::kKTooSmall,
                  "element " + std::to_string(i + 1) + " has rank " +
                      rho.element_rank(i).to_string() + " > k = " + std::to_string(k));
    }
  }
  const Subset ground = rho.ground();
  const Rational total = rho.total_rank();
  std::vector<Rational> ranks(std::size_t{1} << rho.size());
  for (Subset x = 0; x < ranks.size(); ++x) {
    ranks[x] = Rational(k * cardinality(x)) - total + rho(ground & ~x);
  }
  return Polymatroid::from_table_unchecked(rho.size(), std::move(ranks));
}

Polymatroid direct_sum(const Polymatroid& first, const Polymatroid& second) {
  const int n1 = first.size();
  const int n = n1 + second.size();
  require_table_capacity(n, "direct sum");
  const Subset low = first.ground();
  std::vector<Rational> ranks(std::size_t{1} << n);
  for (Subset x = 0; x < ranks.size(); ++x) {
    ranks[x] = first(x & low) + second(x >> n1);
  }
  return Polymatroid::from_table_unchecked(n, std::move(ranks));
}

std::optional<Subset> find_separator(const Polymatroid& rho) {
  const int n = rho.size();
  if (n == 0) throw Error(ErrorCode::kEmptyGroundSet, "connectivity of the empty set");
  const Subset ground = rho.ground();
  // Every split {S, E-S} is visited once, with element 0 in S.
  for (Subset rest = 0; rest < (Subset{1} << (n - 1)); ++rest) {
    Subset s = (rest << 1) | 1U;
    if (s == ground) continue;
    if (rho(s) + rho(ground & ~s) == rho.total_rank()) return s;
  }
  return std::nullopt;
}

bool is_connected(const Polymatroid& rho) { return !find_separator(rho).has_value(); }

}  // namespace polymat
