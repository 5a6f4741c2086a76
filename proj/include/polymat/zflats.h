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

// Flats, closure, cyclic sets, the cyclic operator, and the lattice of cyclic
// flats of a polymatroid, together with the axiom checkers for ranked
// cyclic-flat families and rank reconstruction from them.
//
// Everything here accepts fractional ranks unless stated otherwise.

#ifndef POLYMAT_ZFLATS_H_
#define POLYMAT_ZFLATS_H_

#include <optional>
#include <vector>

#include "polymat/polymatroid.h"
#include "polymat/rational.h"
#include "polymat/report.h"
#include "polymat/subset.h"

namespace polymat {

struct CircuitSystem;

// rank(A ∪ i) > rank(A) for every i outside A.
bool is_flat(const Polymatroid& rho, Subset a);
std::vector<Subset> flats(const Polymatroid& rho);

// {i : rank(A ∪ i) = rank(A)}, the least flat containing A.
Subset closure(const Polymatroid& rho, Subset a);

// Closure of an integer polymatroid read off its circuits:
// A ∪ loops ∪ {i : some circuit u has u_i = 1 and support in A ∪ i}.
Subset closure_via_circuits(const Polymatroid& rho, const CircuitSystem& circuits,
                            Subset a);

// rank(A) < rank(A - i) + rank(i) for every i in A of positive rank.
bool is_cyclic(const Polymatroid& rho, Subset a);
std::vector<Subset> cyclic_sets(const Polymatroid& rho);

// Largest cyclic subset of A: A minus the elements i of positive rank with
// rank(A) = rank(A - i) + rank(i).
Subset cyclic_core(const Polymatroid& rho, Subset a);

// Cyclic flats of rho, in increasing mask order.
std::vector<Subset> cyclic_flats(const Polymatroid& rho);

// The lattice of cyclic flats. Meet and join are computed from rho
// (cyclic core of the intersection, closure of the union) rather than by
// searching the element list.
class CyclicFlatLattice {
 public:
  explicit CyclicFlatLattice(Polymatroid rho);

  const Polymatroid& polymatroid() const { return rho_; }
  const std::vector<Subset>& elements() const { return elements_; }
  bool contains(Subset a) const;
  const Rational& rank(Subset a) const { return rho_(a); }
  Subset bottom() const { return elements_.front(); }
  Subset top() const { return elements_.back(); }
  Subset meet(Subset a, Subset b) const { return cyclic_core(rho_, a & b); }
  Subset join(Subset a, Subset b) const { return closure(rho_, a | b); }

 private:
  Polymatroid rho_;
  std::vector<Subset> elements_;
};

CyclicFlatLattice cyclic_flat_lattice(const Polymatroid& rho);

// A family Z of subsets with ranks on Z and, optionally, on singletons.
struct RankedCyclicFlatFamily {
  int n = 0;
  std::vector<Subset> flats;                         // increasing mask order
  std::vector<Rational> flat_ranks;                  // parallel to flats
  std::vector<std::optional<Rational>> element_ranks;  // size n

  // Rank recorded for a member of Z; nullopt if a is not in Z.
  std::optional<Rational> flat_rank(Subset a) const;
  // Puts flats in increasing mask order, keeping ranks aligned.
  void normalize();
};

// The cyclic flats of rho with their ranks, and every singleton rank.
RankedCyclicFlatFamily ranked_cyclic_flats(const Polymatroid& rho);

enum class ZMode {
  kMatroid,      // (Z0)-(Z3); integer ranks on Z only
  kPolymatroid,  // (PZ0)-(PZ4); ranks on Z and on every singleton
};

// Throws kRankDomainMismatch if polymatroid mode lacks a singleton rank or
// matroid mode is given a fractional rank.
CheckReport check_z_axioms(const RankedCyclicFlatFamily& family, ZMode mode);

// rank(A) = min over X in Z of rank'(X) + sum_{i in A-X} rank'(i).
// Throws kAxiomsFailed unless the (PZ) axioms hold.
Polymatroid polymatroid_from_cyclic_flats(const RankedCyclicFlatFamily& family);

// r(Y) = min over Z in Z of r(Z) + |Y - Z|. Throws kAxiomsFailed unless the
// (Z) axioms hold.
Polymatroid matroid_from_cyclic_flats(const RankedCyclicFlatFamily& family);

// R(A): the cyclic flats B attaining rank(A) = rank(B) + sum_{i in A-B} rank(i),
// together with the structural facts established about it.
struct RSetReport {
  Subset set = 0;
  std::vector<Subset> members;  // by (cardinality, mask)
  Rational minimum;             // min over cyclic flats of the expression
  bool minimum_is_rank = false;  // minimum == rank(A)
  Subset lower = 0;             // closure(cyclic_core(A))
  Subset upper = 0;             // cyclic_core(closure(A))
  bool bounds_are_members = false;        // (I)
  bool members_within_bounds = false;     // (II)
  bool closed_under_meet_join = false;    // (III)
  bool pairwise_modular = false;          // (IV)
  // Whether members equal every cyclic flat between lower and upper.
  bool is_interval = false;

  bool structure_holds() const {
    return minimum_is_rank && bounds_are_members && members_within_bounds &&
           closed_under_meet_join && pairwise_modular;
  }
  std::string to_string() const;
};

RSetReport r_set(const Polymatroid& rho, Subset a);

// rank(A) = rank(B) + sum_{i in A-B} rank(i) compared with its two-part
// characterization.
struct RecastOutcome {
  bool equality = false;
  bool splits_off = false;        // rank(A) = rank(A-i) + rank(i), all i in A-B
  bool intersection_spans = false;  // rank(A ∩ B) = rank(B)
  bool agrees() const { return equality == (splits_off && intersection_spans); }
};

RecastOutcome recast_r_test(const Polymatroid& rho, Subset a, Subset b);

// Whether rank(a) + rank(b) = rank(a ∪ b) + rank(a ∩ b).
bool is_modular_pair(const Polymatroid& rho, Subset a, Subset b);

}  // namespace polymat

#endif  // POLYMAT_ZFLATS_H_
