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

#include "polymat/zflats.h"

#include <algorithm>
#include <sstream>
#include <string>
#include <utility>

#include "polymat/error.h"
#include "polymat/limits.h"
#include "polymat/vectors.h"

namespace polymat {

bool is_flat(const Polymatroid& rho, Subset a) {
  for (int i = 0; i < rho.size(); ++i) {
    if (!contains(a, i) && rho(a | singleton(i)) == rho(a)) return false;
  }
  return true;
}

std::vector<Subset> flats(const Polymatroid& rho) {
  std::vector<Subset> out;
  for (Subset a = 0; a <= rho.ground(); ++a) {
    if (is_flat(rho, a)) out.push_back(a);
  }
  return out;
}

Subset closure(const Polymatroid& rho, Subset a) {
  Subset out = a;
  for (int i = 0; i < rho.size(); ++i) {
    if (rho(a | singleton(i)) == rho(a)) out |= singleton(i);
  }
  return out;
}

Subset closure_via_circuits(const Polymatroid& rho, const CircuitSystem& system, Subset a) {
  rho.require_integral("closure via circuits");
  Subset out = a | rho.loops();
  for (const auto& u : system.circuits) {
    for (int i = 0; i < rho.size(); ++i) {
      if (u[i] != 1) continue;
      bool inside = true;
      for (int j = 0; j < rho.size() && inside; ++j) {
        inside = u[j] == 0 || j == i || contains(a, j);
      }
      if (inside) out |= singleton(i);
    }
  }
  return out;
}

bool is_cyclic(const Polymatroid& rho, Subset a) { return cyclic_core(rho, a) == a; }

std::vector<Subset> cyclic_sets(const Polymatroid& rho) {
  std::vector<Subset> out;
  for (Subset a = 0; a <= rho.ground(); ++a) {
    if (is_cyclic(rho, a)) out.push_back(a);
  }
  return out;
}

Subset cyclic_core(const Polymatroid& rho, Subset a) {
  Subset out = a;
  for (int i = 0; i < rho.size(); ++i) {
    if (!contains(a, i)) continue;
    const Rational& own = rho.element_rank(i);
    if (own > Rational(0) && rho(a) == rho(a & ~singleton(i)) + own) out &= ~singleton(i);
  }
  return out;
}

std::vector<Subset> cyclic_flats(const Polymatroid& rho) {
  std::vector<Subset> out;
  for (Subset a = 0; a <= rho.ground(); ++a) {
    if (is_cyclic(rho, a) && is_flat(rho, a)) out.push_back(a);
  }
  return out;
}

CyclicFlatLattice::CyclicFlatLattice(Polymatroid rho)
    : rho_(std::move(rho)), elements_(cyclic_flats(rho_)) {}

bool CyclicFlatLattice::contains(Subset a) const {
  return std::binary_search(elements_.begin(), elements_.end(), a);
}

CyclicFlatLattice cyclic_flat_lattice(const Polymatroid& rho) { return CyclicFlatLattice(rho); }

std::optional<Rational> RankedCyclicFlatFamily::flat_rank(Subset a) const {
  for (std::size_t k = 0; k < flats.size(); ++k) {
    if (flats[k] == a) return flat_ranks[k];
  }
  return std::nullopt;
}

void RankedCyclicFlatFamily::normalize() {
  std::vector<std::pair<Subset, Rational>> rows;
  for (std::size_t k = 0; k < flats.size(); ++k) rows.emplace_back(flats[k], flat_ranks[k]);
  std::sort(rows.begin(), rows.end(),
            [](const auto& x, const auto& y) { return x.first < y.first; });
  for (std::size_t k = 0; k < rows.size(); ++k) {
    flats[k] = rows[k].first;
    flat_ranks[k] = rows[k].second;
  }
}

RankedCyclicFlatFamily ranked_cyclic_flats(const Polymatroid& rho) {
  RankedCyclicFlatFamily family;
  family.n = rho.size();
  family.flats = cyclic_flats(rho);
  for (Subset z : family.flats) family.flat_ranks.push_back(rho(z));
  for (int i = 0; i < rho.size(); ++i) family.element_ranks.emplace_back(rho.element_rank(i));
  return family;
}

namespace {

AxiomOutcome outcome(std::string axiom, AxiomOutcome::Status status, std::string witness = "") {
  return AxiomOutcome{std::move(axiom), status, std::move(witness)};
}

constexpr auto kHolds = AxiomOutcome::Status::kHolds;
constexpr auto kFails = AxiomOutcome::Status::kFails;
constexpr auto kSkipped = AxiomOutcome::Status::kSkipped;

// Inclusion order on a family of distinct sets, with the meet and join of
// every pair when they exist.
struct InclusionLattice {
  bool is_lattice = true;
  std::string witness;
  std::vector<std::vector<int>> join;
  std::vector<std::vector<int>> meet;
  std::optional<int> least;
};

// The member of `candidates` contained in (or containing) all others.
std::optional<int> extreme(const std::vector<Subset>& sets, const std::vector<int>& candidates,
                           bool smallest) {
  for (int c : candidates) {
    const bool all = std::all_of(candidates.begin(), candidates.end(), [&](int d) {
      return smallest ? is_subset(sets[c], sets[d]) : is_subset(sets[d], sets[c]);
    });
    if (all) return c;
  }
  return std::nullopt;
}

InclusionLattice inclusion_lattice(const std::vector<Subset>& sets) {
  const int size = static_cast<int>(sets.size());
  InclusionLattice lat;
  std::vector<int> everything(size);
  for (int k = 0; k < size; ++k) everything[k] = k;
  lat.least = extreme(sets, everything, true);
  if (size == 0) {
    lat.is_lattice = false;
    lat.witness = "the family is empty";
    return lat;
  }
  lat.join.assign(size, std::vector<int>(size, -1));
  lat.meet.assign(size, std::vector<int>(size, -1));
  for (int a = 0; a < size; ++a) {
    for (int b = 0; b < size; ++b) {
      std::vector<int> upper;
      std::vector<int> lower;
      for (int c = 0; c < size; ++c) {
        if (is_subset(sets[a] | sets[b], sets[c])) upper.push_back(c);
        if (is_subset(sets[c], sets[a] & sets[b])) lower.push_back(c);
      }
      const auto up = extreme(sets, upper, true);
      const auto down = extreme(sets, lower, false);
      if (lat.is_lattice && (!up || !down)) {
        lat.is_lattice = false;
        lat.witness = format_subset(sets[a]) + " and " + format_subset(sets[b]) + " have no " +
                      (up ? "meet" : "join");
      }
      lat.join[a][b] = up.value_or(-1);
      lat.meet[a][b] = down.value_or(-1);
    }
  }
  return lat;
}

Rational weight(const RankedCyclicFlatFamily& family, Subset s, ZMode mode) {
  if (mode == ZMode::kMatroid) return Rational(cardinality(s));
  Rational total;
  for (int i : elements(s)) total += *family.element_ranks[i];
  return total;
}

void require_domain(const RankedCyclicFlatFamily& family, ZMode mode) {
  if (family.flats.size() != family.flat_ranks.size()) {
    throw Error(ErrorCode::kInvalidArgument, "flat and rank lists differ in length");
  }
  if (family.n < 0 || family.n > kMaskBits) {
    throw Error(ErrorCode::kInvalidArgument, "ground set size out of range");
  }
  std::vector<Subset> sorted = family.flats;
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
    throw Error(ErrorCode::kDuplicateSubset, "a set appears twice in the family");
  }
  for (Subset z : family.flats) {
    if (!is_subset(z, full_set(family.n))) {
      throw Error(ErrorCode::kElementOutOfRange, format_subset(z) + " leaves the ground set");
    }
  }
  for (const Rational& r : family.flat_ranks) {
    if (r < Rational(0)) throw Error(ErrorCode::kNegativeRank, "negative rank " + r.to_string());
    if (mode == ZMode::kMatroid && !r.is_integer()) {
      throw Error(ErrorCode::kRankDomainMismatch, "fractional rank " + r.to_string() +
                                                      " in matroid mode");
    }
  }
  if (mode == ZMode::kPolymatroid) {
    if (static_cast<int>(family.element_ranks.size()) != family.n) {
      throw Error(ErrorCode::kRankDomainMismatch, "singleton ranks do not cover the ground set");
    }
    for (int i = 0; i < family.n; ++i) {
      if (!family.element_ranks[i]) {
        throw Error(ErrorCode::kRankDomainMismatch,
                    "missing rank of element " + std::to_string(i + 1));
      }
      if (*family.element_ranks[i] < Rational(0)) {
        throw Error(ErrorCode::kNegativeRank, "negative rank of element " + std::to_string(i + 1));
      }
    }
  }
}

}  // namespace

CheckReport check_z_axioms(const RankedCyclicFlatFamily& family, ZMode mode) {
  require_domain(family, mode);
  const bool poly = mode == ZMode::kPolymatroid;
  const std::string p = poly ? "(PZ" : "(Z";
  const auto& sets = family.flats;
  const auto& r = family.flat_ranks;
  const int size = static_cast<int>(sets.size());
  const InclusionLattice lat = inclusion_lattice(sets);
  CheckReport report;

  report.outcomes.push_back(lat.is_lattice ? outcome(p + "0)", kHolds)
                                           : outcome(p + "0)", kFails, lat.witness));

  if (!lat.least) {
    report.outcomes.push_back(outcome(p + "1)", kSkipped, "no least element"));
  } else {
    const Subset bottom = sets[*lat.least];
    std::string witness;
    if (poly) {
      Subset zeros = 0;
      for (int i = 0; i < family.n; ++i) {
        if (*family.element_ranks[i] == Rational(0)) zeros |= singleton(i);
      }
      if (zeros != bottom) {
        witness = "least element " + format_subset(bottom) + " but rank-zero elements " +
                  format_subset(zeros);
      }
    }
    if (witness.empty() && r[*lat.least] != Rational(0)) {
      witness = "least element " + format_subset(bottom) + " has rank " +
                r[*lat.least].to_string();
    }
    report.outcomes.push_back(witness.empty() ? outcome(p + "1)", kHolds)
                                              : outcome(p + "1)", kFails, witness));
  }

  AxiomOutcome gaps = outcome(p + "2)", kHolds);
  for (int a = 0; a < size && gaps.holds(); ++a) {
    for (int b = 0; b < size && gaps.holds(); ++b) {
      if (sets[a] == sets[b] || !is_subset(sets[a], sets[b])) continue;
      const Rational diff = r[b] - r[a];
      const Rational room = weight(family, sets[b] & ~sets[a], mode);
      if (!(Rational(0) < diff) || !(diff < room)) {
        gaps = outcome(p + "2)", kFails,
                       "A=" + format_subset(sets[a]) + " B=" + format_subset(sets[b]) +
                           " rank difference " + diff.to_string() + " outside (0, " +
                           room.to_string() + ")");
      }
    }
  }
  report.outcomes.push_back(gaps);

  if (!lat.is_lattice) {
    report.outcomes.push_back(outcome(p + "3)", kSkipped, "not a lattice"));
  } else {
    AxiomOutcome semi = outcome(p + "3)", kHolds);
    for (int a = 0; a < size && semi.holds(); ++a) {
      for (int b = a + 1; b < size && semi.holds(); ++b) {
        const int j = lat.join[a][b];
        const int m = lat.meet[a][b];
        const Rational lhs =
            r[j] + r[m] + weight(family, (sets[a] & sets[b]) & ~sets[m], mode);
        if (r[a] + r[b] < lhs) {
          semi = outcome(p + "3)", kFails,
                         "A=" + format_subset(sets[a]) + " B=" + format_subset(sets[b]) + ": " +
                             lhs.to_string() + " > " + (r[a] + r[b]).to_string());
        }
      }
    }
    report.outcomes.push_back(semi);
  }

  if (poly) {
    AxiomOutcome bounded = outcome("(PZ4)", kHolds);
    for (int a = 0; a < size && bounded.holds(); ++a) {
      for (int i : elements(sets[a])) {
        if (r[a] < *family.element_ranks[i]) {
          bounded = outcome("(PZ4)", kFails,
                            "element " + std::to_string(i + 1) + " of " +
                                format_subset(sets[a]) + " has larger rank");
          break;
        }
      }
    }
    report.outcomes.push_back(bounded);
  }
  return report;
}

namespace {

Polymatroid from_min_formula(const RankedCyclicFlatFamily& family, ZMode mode) {
  const CheckReport report = check_z_axioms(family, mode);
  if (!report.holds()) throw Error(ErrorCode::kAxiomsFailed, report.to_string());
  const int n = family.n;
  require_table_capacity(n, "rank table");
  const std::size_t count = std::size_t{1} << n;
  std::vector<Rational> w(count);
  for (Subset s = 1; s < count; ++s) {
    const int low = std::countr_zero(s);
    const Rational unit =
        mode == ZMode::kMatroid ? Rational(1) : *family.element_ranks[low];
    w[s] = w[s & (s - 1)] + unit;
  }
  std::vector<Rational> ranks(count);
  for (Subset a = 0; a < count; ++a) {
    std::optional<Rational> best;
    for (std::size_t k = 0; k < family.flats.size(); ++k) {
      const Rational value = family.flat_ranks[k] + w[a] - w[a & family.flats[k]];
      if (!best || value < *best) best = value;
    }
    ranks[a] = *best;
  }
  return Polymatroid::from_table_unchecked(n, std::move(ranks));
}

}  // namespace

Polymatroid polymatroid_from_cyclic_flats(const RankedCyclicFlatFamily& family) {
  return from_min_formula(family, ZMode::kPolymatroid);
}

Polymatroid matroid_from_cyclic_flats(const RankedCyclicFlatFamily& family) {
  return from_min_formula(family, ZMode::kMatroid);
}

bool is_modular_pair(const Polymatroid& rho, Subset a, Subset b) {
  return rho(a) + rho(b) == rho(a | b) + rho(a & b);
}

std::string RSetReport::to_string() const {
  std::ostringstream out;
  auto yes = [](bool b) { return b ? "yes" : "no"; };
  out << "R(" << format_subset(set) << ") =";
  for (Subset b : members) out << ' ' << format_subset(b);
  out << "\nminimum: " << minimum.to_string() << (minimum_is_rank ? " (equals rank)" : " (differs from rank)")
      << "\nlower: " << format_subset(lower) << "\nupper: " << format_subset(upper)
      << "\n(I) bounds are members: " << yes(bounds_are_members)
      << "\n(II) members within bounds: " << yes(members_within_bounds)
      << "\n(III) closed under meet and join: " << yes(closed_under_meet_join)
      << "\n(IV) pairwise modular: " << yes(pairwise_modular)
      << "\ninterval: " << yes(is_interval) << '\n';
  return out.str();
}

RSetReport r_set(const Polymatroid& rho, Subset a) {
  if (!is_subset(a, rho.ground())) {
    throw Error(ErrorCode::kElementOutOfRange, format_subset(a) + " leaves the ground set");
  }
  const CyclicFlatLattice lattice(rho);
  auto excess = [&](Subset b) {
    Rational total = rho(b);
    for (int i : elements(a & ~b)) total += rho.element_rank(i);
    return total;
  };
  RSetReport report;
  report.set = a;
  report.minimum = excess(lattice.elements().front());
  for (Subset b : lattice.elements()) report.minimum = std::min(report.minimum, excess(b));
  for (Subset b : lattice.elements()) {
    if (excess(b) == report.minimum) report.members.push_back(b);
  }
  std::sort(report.members.begin(), report.members.end(), [](Subset x, Subset y) {
    return std::make_pair(cardinality(x), x) < std::make_pair(cardinality(y), y);
  });
  auto member = [&](Subset b) {
    return std::find(report.members.begin(), report.members.end(), b) != report.members.end();
  };
  report.minimum_is_rank = report.minimum == rho(a);
  report.lower = closure(rho, cyclic_core(rho, a));
  report.upper = cyclic_core(rho, closure(rho, a));
  report.bounds_are_members = member(report.lower) && member(report.upper);
  report.members_within_bounds = std::all_of(
      report.members.begin(), report.members.end(), [&](Subset b) {
        return is_subset(report.lower, b) && is_subset(b, report.upper);
      });
  report.closed_under_meet_join = true;
  report.pairwise_modular = true;
  for (Subset b : report.members) {
    for (Subset c : report.members) {
      if (!member(lattice.meet(b, c)) || !member(lattice.join(b, c))) {
        report.closed_under_meet_join = false;
      }
      if (!is_modular_pair(rho, b, c)) report.pairwise_modular = false;
    }
  }
  std::vector<Subset> between;
  for (Subset z : lattice.elements()) {
    if (is_subset(report.lower, z) && is_subset(z, report.upper)) between.push_back(z);
  }
  report.is_interval = between.size() == report.members.size() &&
                       std::all_of(between.begin(), between.end(), member);
  return report;
}

RecastOutcome recast_r_test(const Polymatroid& rho, Subset a, Subset b) {
  RecastOutcome out;
  Rational total = rho(b);
  out.splits_off = true;
  for (int i : elements(a & ~b)) {
    total += rho.element_rank(i);
    if (rho(a) != rho(a & ~singleton(i)) + rho.element_rank(i)) out.splits_off = false;
  }
  out.equality = rho(a) == total;
  out.intersection_spans = rho(a & b) == rho(b);
  return out;
}

}  // namespace polymat
