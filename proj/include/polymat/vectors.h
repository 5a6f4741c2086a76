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

// Independent vectors, bases and circuits of integer polymatroids, the
// vector-side axiom checkers, and conversions between vector families and
// rank tables.
//
// Vectors are indexed by 0-based element. Families are sorted
// lexicographically without duplicates; every function returning a family
// returns it in that form, and checkers report the lexicographically least
// witness.

#ifndef POLYMAT_VECTORS_H_
#define POLYMAT_VECTORS_H_

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "polymat/natural.h"
#include "polymat/polymatroid.h"
#include "polymat/report.h"
#include "polymat/subset.h"

namespace polymat {

using VectorFamily = std::vector<IntVector>;

std::int64_t norm(const IntVector& u);
// |u|_X, the sum of the entries indexed by X.
std::int64_t norm_on(const IntVector& u, Subset x);
bool leq(const IntVector& u, const IntVector& v);
// u <= v and u != v.
bool strictly_less(const IntVector& u, const IntVector& v);
IntVector join(const IntVector& u, const IntVector& v);
IntVector meet(const IntVector& u, const IntVector& v);
// "(2,1,0)".
std::string format_vector(const IntVector& u);
// Sorts and removes duplicates.
void canonicalize(VectorFamily& family);

// All u with |u|_X <= rho(X) for every X. Throws kCapacityExceeded when the
// box of candidate vectors exceeds max_vectors().
VectorFamily independent_vectors(const Polymatroid& rho);
// Maximal independent vectors.
VectorFamily bases(const Polymatroid& rho);
// Whether |u|_X <= rho(X) for every X.
bool is_independent_vector(const Polymatroid& rho, const IntVector& u);

// max over the family of |u|_X. Throws kEmptyFamily for an empty family.
std::int64_t rank_from_vectors(const VectorFamily& family, Subset x);
// The full rank table of a basis or independent-vector family on n elements.
Polymatroid polymatroid_from_vectors(const VectorFamily& family, int n);

// (I1) downward closure and (I2) augmentation. An empty family yields a
// single failing "(nonempty)" outcome.
CheckReport check_independence_axioms(const VectorFamily& family);

enum class BasisAxiom {
  kExchange,           // (B)
  kSymmetricExchange,  // (B')
  kMiddle,             // antichain + middle-basis property
};

CheckReport check_basis_axioms(const VectorFamily& family, BasisAxiom axiom);

// {(k,...,k) - u}. Throws kKTooSmall if an entry exceeds k.
VectorFamily dual_bases(const VectorFamily& family, int k);

// Bounds m_i (the box U = [m_1]_0 x ... x [m_n]_0) and the circuit antichain.
struct CircuitSystem {
  IntVector bounds;
  VectorFamily circuits;

  int size() const { return static_cast<int>(bounds.size()); }
  friend bool operator==(const CircuitSystem&, const CircuitSystem&) = default;
};

// Minimal dependent vectors of the box [rho(1)]_0 x ... x [rho(n)]_0.
CircuitSystem circuits(const Polymatroid& rho);

// (C1)-(C4), each evaluated independently. Throws kBoundsMismatch when a
// circuit leaves the box or a bound disagrees with the largest entry in its
// coordinate.
CheckReport check_circuit_axioms(const CircuitSystem& system);

// Independent vectors are those in the box lying above no circuit. Throws
// kAxiomsFailed (with the report text) unless check_circuit_axioms passes.
Polymatroid polymatroid_from_circuits(const CircuitSystem& system);

// Relation between an element, the rank drop it causes in A, and circuits.
struct ElementDiagnosis {
  int element = 0;
  Subset set = 0;
  // rank(A) < rank(A - i) + rank(i).
  bool strict = false;
  // Least circuit u with u_i > 0 and support inside A.
  std::optional<IntVector> witness;
  // For A = E: whether X_i lies inside a circuit of the natural matroid, and
  // max{c_i} over all circuits (0 when no circuit touches i).
  std::optional<bool> block_in_circuit;
  std::optional<int> max_circuit_entry;

  // strict iff a witness exists, and for A = E also iff X_i lies in a
  // circuit, in which case max_circuit_entry equals rank(i).
  bool consistent = false;
};

// Throws kElementNotInSet if i is not in A, kNotApplicable if i is a loop.
ElementDiagnosis diagnose_element(const Polymatroid& rho, int i, Subset a);
ElementDiagnosis diagnose_element(const CircuitSystem& system, int i, Subset a);

// Circuits of rho/i computed from the circuits of rho: drop coordinate i,
// keep vectors inside the contracted box [rho({i,j}) - rho(i)]_0, and take
// the minimal ones with at least two positive entries.
CircuitSystem contraction_circuits(const CircuitSystem& system, const Polymatroid& rho,
                                   int i);

// For n > 1: every pair of elements shares a circuit. One element counts as
// connected. Throws kEmptyGroundSet for n = 0.
bool connected_via_circuits(const CircuitSystem& system);

}  // namespace polymat

#endif  // POLYMAT_VECTORS_H_
