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

// Builders for the polymatroid families used throughout the library: matroids
// from GF(2) vectors, polymatroids induced by a matroid, Boolean polymatroids
// of bipartite graphs, lattice path polymatroids, named fixtures, and random
// integer polymatroids.

#ifndef POLYMAT_CONSTRUCTIONS_H_
#define POLYMAT_CONSTRUCTIONS_H_

#include <cstdint>
#include <random>
#include <span>
#include <string_view>
#include <utility>
#include <vector>

#include "polymat/natural.h"
#include "polymat/polymatroid.h"
#include "polymat/subset.h"

namespace polymat {

// U_{r,n}. Throws kInvalidArgument unless 0 <= r <= n.
Matroid uniform_matroid(int r, int n);

// Column matroid over GF(2); column j is the bit vector columns[j].
Matroid binary_matroid(std::span<const std::uint32_t> columns);

// The Fano plane: element j is the nonzero vector j+1 of GF(2)^3.
Matroid fano_matroid();

// rho(A) = r_M(union of phi(e) over e in A). Throws kUnknownMatroidElement
// if some phi(e) leaves the ground set of m.
Polymatroid induced_polymatroid(const Matroid& m, std::span<const Subset> phi);

// Bipartite graph on E = {0..n-1} and [k] = {0..k-1}.
struct BipartiteGraph {
  int n = 0;
  int k = 0;
  std::vector<std::pair<int, int>> edges;  // (e, h)

  // Throws kElementOutOfRange for an edge outside E x [k].
  void validate() const;
  // Right-hand neighbours of e, as a mask over [k].
  Subset neighbors(int e) const;
};

// rho(A) = |N(A)|.
Polymatroid boolean_polymatroid(const BipartiteGraph& graph);

// The k rank-1 matroids on E, where r_h(A) = 1 iff A meets a neighbour of h.
// Their sum is boolean_polymatroid(graph).
std::vector<Matroid> boolean_decomposition(const BipartiteGraph& graph);

// Rows h = 1..k cover the intervals [a_h, b_h] of {1..n}.
struct LatticePathDiagram {
  int n = 0;
  std::vector<std::pair<int, int>> rows;  // (a_h, b_h), 1-based

  // Throws kMalformedDiagram unless both endpoint sequences are
  // non-decreasing and 1 <= a_h <= b_h <= n.
  void validate() const;
};

// Element e (0-based) is adjacent to row h iff a_h <= e + 1 <= b_h.
BipartiteGraph lattice_path_graph(const LatticePathDiagram& diagram);
Polymatroid lattice_path_polymatroid(const LatticePathDiagram& diagram);

// "uniform(r,n)", "fano", "pg22_lines", "vamos2poly", or "fig2poly".
// Throws kUnknownName.
Polymatroid builtin(std::string_view name);

// A random integer polymatroid induced from a random binary matroid of rank
// at most 5 on at most 10 elements, with 1 <= n <= max_n and every singleton
// rank at most max_element_rank.
Polymatroid random_polymatroid(std::mt19937_64& rng, int max_n = 5, int max_element_rank = 3);

}  // namespace polymat

#endif  // POLYMAT_CONSTRUCTIONS_H_
