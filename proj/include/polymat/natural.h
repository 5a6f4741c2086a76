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

// Matroids with block structure, natural matroids of integer polymatroids,
// and matroid unions.
//
// The natural matroid of an integer polymatroid rho on {0..n-1} lives on
// E' = X_0 ∪ ... ∪ X_{n-1}, where block X_i holds rho(i) fresh elements.
// Blocks built here are consecutive: element (i, t), t = 1..rho(i), sits at
// position offset(i) + t - 1, so E' is ordered lexicographically by (i, t).
// Its rank function is
//
//   r(Y) = min over A ⊆ E of rho(A) + |Y - X_A|.

#ifndef POLYMAT_NATURAL_H_
#define POLYMAT_NATURAL_H_

#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "polymat/polymatroid.h"
#include "polymat/subset.h"

namespace polymat {

using IntVector = std::vector<int>;

// A partition of a matroid ground set into labelled blocks X_0..X_{k-1}.
// Blocks may be empty. They need not be contiguous, which lets callers
// relabel blocks of an existing matroid.
class BlockMap {
 public:
  BlockMap() = default;
  // Blocks must be pairwise disjoint and cover {0..ground_size-1}.
  BlockMap(int ground_size, std::vector<Subset> blocks);
  // Consecutive blocks of the given sizes.
  static BlockMap consecutive(std::span<const int> sizes);

  int num_blocks() const { return static_cast<int>(blocks_.size()); }
  int ground_size() const { return ground_size_; }
  Subset block(int i) const { return blocks_[i]; }
  int block_size(int i) const { return cardinality(blocks_[i]); }
  // X_A for a subset A of block labels.
  Subset blocks_of(Subset labels) const;
  // Label of the block holding matroid element e.
  int owner(int e) const { return owner_[e]; }
  // (i, t), 1-based, for matroid element e.
  std::pair<int, int> name(int e) const;
  // "(i,t)" with 1-based labels.
  std::string format_element(int e) const;

  friend bool operator==(const BlockMap&, const BlockMap&) = default;

 private:
  int ground_size_ = 0;
  std::vector<Subset> blocks_;
  std::vector<int> owner_;
};

// A polymatroid whose singleton ranks are at most 1, optionally with block
// structure.
class Matroid {
 public:
  Matroid() = default;
  // Throws kNotAMatroid if some singleton has rank above 1.
  explicit Matroid(Polymatroid rank);
  // Also throws kInvalidArgument if blocks do not cover the ground set.
  Matroid(Polymatroid rank, BlockMap blocks);

  const Polymatroid& rank_function() const { return rank_; }
  std::int64_t rank(Subset s) const { return rank_.int_rank(s); }
  int size() const { return rank_.size(); }
  bool is_independent(Subset s) const { return rank(s) == cardinality(s); }
  const std::optional<BlockMap>& blocks() const { return blocks_; }

  friend bool operator==(const Matroid& a, const Matroid& b) {
    return a.rank_ == b.rank_;
  }

 private:
  Polymatroid rank_;
  std::optional<BlockMap> blocks_;
};

// Natural matroid of an integer polymatroid, with consecutive blocks.
// Throws kCapacityExceeded when the sum of singleton ranks exceeds the table
// cap.
Matroid build_natural_matroid(const Polymatroid& rho);

// Independence in the natural matroid by the block-count criterion
// |I ∩ X_A| <= rho(A) for all A, without building the matroid.
// `independent` is a subset of E' in the consecutive block layout.
bool natural_independent(const Polymatroid& rho, Subset independent);

// Block counts |V ∩ X_i|.
IntVector type_vector(const BlockMap& blocks, Subset v);

// Circuits of a matroid as element sets, increasing mask order.
std::vector<Subset> matroid_circuits(const Matroid& m);

// Connectivity through shared circuits (union-find over circuit members).
// The empty matroid counts as connected.
bool matroid_connected(const Matroid& m);

// Connectivity of rho judged through its natural matroid: for n > 1, rho
// has no loops and M_rho is connected. A single element is connected.
bool natural_connected(const Polymatroid& rho);

// Whether every two elements of `elements` are clones in m, i.e. swapping
// them preserves the rank function. Returns the first non-clone pair found.
std::optional<std::pair<int, int>> find_non_clones(const Matroid& m, Subset elements);

struct NaturalCertificate {
  // Criterion 1: every cyclic flat is some X_A and has rank rho(A).
  bool cyclic_flat_criterion = false;
  // Criterion 2: every block is a set of clones and r(X_A) = rho(A) for
  // every cyclic flat X_A.
  bool clone_criterion = false;
  // First cyclic flat (increasing mask order) that is not a union of blocks
  // or has the wrong rank.
  std::optional<Subset> offending_flat;
  // First pair of block mates that are not clones.
  std::optional<std::pair<int, int>> non_clones;

  bool is_natural() const { return cyclic_flat_criterion; }
  bool criteria_agree() const { return cyclic_flat_criterion == clone_criterion; }
};

// Decides whether m, with its blocks, is the natural matroid of rho.
// Throws kBlockSizeMismatch if m has no blocks or |X_i| != rho(i).
NaturalCertificate verify_natural(const Matroid& m, const Polymatroid& rho);

// Union of matroids on a common ground set:
// r(Y) = min over X ⊆ Y of sum_j r_j(X) + |Y - X|.
Matroid matroid_union(std::span<const Matroid> matroids);

struct DecompositionUnion {
  Matroid matroid;        // union of the parallel extensions M'_j, with blocks
  bool equals_natural;    // rank table identical to build_natural_matroid(rho)
};

// Verifies that rho = r_1 + ... + r_k and builds M'_1 ∨ ... ∨ M'_k, where
// M'_j replaces each element i by |X_i| parallel copies (loops when
// r_j(i) = 0). Throws kNotADecomposition naming the first set where the sum
// differs from rho.
DecompositionUnion natural_from_decomposition(std::span<const Matroid> matroids,
                                              const Polymatroid& rho);

// Searches bijections that map each block of `a` onto the same-labelled block
// of `b` for one that carries a's rank function to b's. Block sizes must
// match.
bool block_isomorphic(const Matroid& a, const Matroid& b);

}  // namespace polymat

#endif  // POLYMAT_NATURAL_H_
