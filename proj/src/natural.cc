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

#include "polymat/natural.h"

#include <algorithm>
#include <numeric>
#include <string>

#include "polymat/error.h"
#include "polymat/limits.h"
#include "polymat/zflats.h"

namespace polymat {

BlockMap::BlockMap(int ground_size, std::vector<Subset> blocks)
    : ground_size_(ground_size), blocks_(std::move(blocks)), owner_(ground_size, -1) {
  if (ground_size < 0 || ground_size > kMaskBits) {
    throw Error(ErrorCode::kInvalidArgument, "block ground set size out of range");
  }
  Subset seen = 0;
  for (int i = 0; i < num_blocks(); ++i) {
    if (!is_subset(blocks_[i], full_set(ground_size)) || (blocks_[i] & seen) != 0) {
      throw Error(ErrorCode::kInvalidArgument,
                  "block " + std::to_string(i + 1) + " overlaps another or leaves E'");
    }
    seen |= blocks_[i];
    for (int e : elements(blocks_[i])) owner_[e] = i;
  }
  if (seen != full_set(ground_size)) {
    throw Error(ErrorCode::kInvalidArgument, "blocks do not cover the ground set");
  }
}

BlockMap BlockMap::consecutive(std::span<const int> sizes) {
  int total = 0;
  std::vector<Subset> blocks;
  for (int size : sizes) {
    if (size < 0) throw Error(ErrorCode::kInvalidArgument, "negative block size");
    if (total + size > kMaskBits) {
      throw Error(ErrorCode::kCapacityExceeded, "blocks exceed the mask width");
    }
    blocks.push_back(full_set(size) << total);
    total += size;
  }
  return BlockMap(total, std::move(blocks));
}

Subset BlockMap::blocks_of(Subset labels) const {
  Subset out = 0;
  for (int i : elements(labels)) out |= blocks_[i];
  return out;
}

std::pair<int, int> BlockMap::name(int e) const {
  const int i = owner_[e];
  const int t = cardinality(blocks_[i] & full_set(e)) + 1;
  return {i + 1, t};
}

std::string BlockMap::format_element(int e) const {
  auto [i, t] = name(e);
  return "(" + std::to_string(i) + "," + std::to_string(t) + ")";
}

Matroid::Matroid(Polymatroid rank) : rank_(std::move(rank)) {
  rank_.require_integral("matroid");
  for (int i = 0; i < rank_.size(); ++i) {
    if (rank_.int_rank(singleton(i)) > 1) {
      throw Error(ErrorCode::kNotAMatroid,
                  "element " + std::to_string(i + 1) + " has rank above 1");
    }
  }
}

Matroid::Matroid(Polymatroid rank, BlockMap blocks) : Matroid(std::move(rank)) {
  if (blocks.ground_size() != rank_.size()) {
    throw Error(ErrorCode::kInvalidArgument, "blocks do not match the ground set");
  }
  blocks_ = std::move(blocks);
}

namespace {

std::vector<int> element_ranks(const Polymatroid& rho) {
  std::vector<int> sizes(rho.size());
  for (int i = 0; i < rho.size(); ++i) {
    sizes[i] = static_cast<int>(rho.int_rank(singleton(i)));
  }
  return sizes;
}

// Block labels met by y.
Subset support(const BlockMap& blocks, Subset y) {
  Subset labels = 0;
  for (int i = 0; i < blocks.num_blocks(); ++i) {
    if ((blocks.block(i) & y) != 0) labels |= singleton(i);
  }
  return labels;
}

}  // namespace

Matroid build_natural_matroid(const Polymatroid& rho) {
  rho.require_integral("natural matroid");
  const std::vector<int> sizes = element_ranks(rho);
  const int total = std::accumulate(sizes.begin(), sizes.end(), 0);
  require_table_capacity(total, "natural matroid");
  BlockMap blocks = BlockMap::consecutive(sizes);

  std::vector<Rational> ranks(std::size_t{1} << total);
  std::vector<int> counts(rho.size());
  for (Subset y = 0; y < ranks.size(); ++y) {
    Subset labels = 0;
    for (int i = 0; i < rho.size(); ++i) {
      counts[i] = cardinality(blocks.block(i) & y);
      if (counts[i] > 0) labels |= singleton(i);
    }
    // Adding a block that misses y only raises rho(A), so A ranges over the
    // blocks that y meets.
    std::int64_t best = cardinality(y);
    for_each_submask(labels, [&](Subset a) {
      std::int64_t value = rho.int_rank(a);
      for (int i : elements(labels & ~a)) value += counts[i];
      best = std::min(best, value);
    });
    ranks[y] = Rational(best);
  }
  return Matroid(Polymatroid::from_table_unchecked(total, std::move(ranks)),
                 std::move(blocks));
}

bool natural_independent(const Polymatroid& rho, Subset independent) {
  rho.require_integral("natural matroid");
  const std::vector<int> sizes = element_ranks(rho);
  const int total = std::accumulate(sizes.begin(), sizes.end(), 0);
  if (total > kMaskBits || !is_subset(independent, full_set(total))) {
    throw Error(ErrorCode::kUnknownElement, "set is not inside E'");
  }
  const BlockMap blocks = BlockMap::consecutive(sizes);
  for (Subset a = 0; a <= rho.ground(); ++a) {
    if (cardinality(independent & blocks.blocks_of(a)) > rho.int_rank(a)) return false;
  }
  return true;
}

IntVector type_vector(const BlockMap& blocks, Subset v) {
  if (!is_subset(v, full_set(blocks.ground_size()))) {
    throw Error(ErrorCode::kUnknownElement, "set is not inside E'");
  }
  IntVector out(blocks.num_blocks());
  for (int i = 0; i < blocks.num_blocks(); ++i) {
    out[i] = cardinality(blocks.block(i) & v);
  }
  return out;
}

std::vector<Subset> matroid_circuits(const Matroid& m) {
  std::vector<Subset> out;
  const Subset ground = full_set(m.size());
  for (Subset c = 1; c <= ground; ++c) {
    if (m.is_independent(c)) continue;
    bool minimal = true;
    for (int e : elements(c)) {
      if (!m.is_independent(c & ~singleton(e))) {
        minimal = false;
        break;
      }
    }
    if (minimal) out.push_back(c);
  }
  return out;
}

bool matroid_connected(const Matroid& m) {
  const int size = m.size();
  if (size <= 1) return true;
  std::vector<int> parent(size);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (Subset c : matroid_circuits(m)) {
    const int first = std::countr_zero(c);
    for (int e : elements(c)) parent[find(e)] = find(first);
  }
  const int root = find(0);
  for (int e = 1; e < size; ++e) {
    if (find(e) != root) return false;
  }
  return true;
}

bool natural_connected(const Polymatroid& rho) {
  if (rho.size() == 0) {
    throw Error(ErrorCode::kEmptyGroundSet, "connectivity of the empty set");
  }
  if (rho.size() == 1) return true;
  if (rho.loops() != 0) return false;
  return matroid_connected(build_natural_matroid(rho));
}

std::optional<std::pair<int, int>> find_non_clones(const Matroid& m,
                                                   Subset members) {
  const Polymatroid& r = m.rank_function();
  const std::vector<int> list = elements(members);
  for (std::size_t x = 0; x < list.size(); ++x) {
    for (std::size_t y = x + 1; y < list.size(); ++y) {
      const Subset pair = singleton(list[x]) | singleton(list[y]);
      for (Subset s = 0; s <= r.ground(); ++s) {
        const Subset hit = s & pair;
        if (hit == 0 || hit == pair) continue;
        if (r(s) != r(s ^ pair)) return std::make_pair(list[x], list[y]);
      }
    }
  }
  return std::nullopt;
}

NaturalCertificate verify_natural(const Matroid& m, const Polymatroid& rho) {
  rho.require_integral("natural matroid check");
  if (!m.blocks() || m.blocks()->num_blocks() != rho.size()) {
    throw Error(ErrorCode::kBlockSizeMismatch,
                "matroid needs one block per polymatroid element");
  }
  const BlockMap& blocks = *m.blocks();
  for (int i = 0; i < rho.size(); ++i) {
    if (blocks.block_size(i) != rho.int_rank(singleton(i))) {
      throw Error(ErrorCode::kBlockSizeMismatch,
                  "block " + std::to_string(i + 1) + " has " +
                      std::to_string(blocks.block_size(i)) + " elements, rank is " +
                      rho.element_rank(i).to_string());
    }
  }

  NaturalCertificate cert;
  bool flat_ranks_match = true;
  bool flats_are_unions = true;
  for (Subset z : cyclic_flats(m.rank_function())) {
    const Subset labels = support(blocks, z);
    const bool union_of_blocks = blocks.blocks_of(labels) == z;
    const bool rank_matches = union_of_blocks && m.rank(z) == rho.int_rank(labels);
    if (!union_of_blocks) flats_are_unions = false;
    if (union_of_blocks && !rank_matches) flat_ranks_match = false;
    if ((!union_of_blocks || !rank_matches) && !cert.offending_flat) {
      cert.offending_flat = z;
    }
  }
  cert.cyclic_flat_criterion = flats_are_unions && flat_ranks_match;

  bool clones = true;
  for (int i = 0; i < rho.size() && clones; ++i) {
    if (auto pair = find_non_clones(m, blocks.block(i))) {
      cert.non_clones = pair;
      clones = false;
    }
  }
  cert.clone_criterion = clones && flat_ranks_match;
  return cert;
}

Matroid matroid_union(std::span<const Matroid> matroids) {
  if (matroids.empty()) {
    throw Error(ErrorCode::kGroundSetMismatch, "union of no matroids");
  }
  const int size = matroids.front().size();
  for (const Matroid& m : matroids) {
    if (m.size() != size) {
      throw Error(ErrorCode::kGroundSetMismatch,
                  "matroids on " + std::to_string(size) + " and " +
                      std::to_string(m.size()) + " elements");
    }
  }
  require_table_capacity(size, "matroid union");
  const std::size_t count = std::size_t{1} << size;
  // best[Y] = min over X ⊆ Y of sum_j r_j(X) - |X|, by a subset-minimum sweep.
  std::vector<std::int64_t> best(count);
  for (Subset x = 0; x < count; ++x) {
    std::int64_t sum = -cardinality(x);
    for (const Matroid& m : matroids) sum += m.rank(x);
    best[x] = sum;
  }
  for (int bit = 0; bit < size; ++bit) {
    for (Subset y = 0; y < count; ++y) {
      if (contains(y, bit)) best[y] = std::min(best[y], best[y ^ singleton(bit)]);
    }
  }
  std::vector<Rational> ranks(count);
  for (Subset y = 0; y < count; ++y) ranks[y] = Rational(cardinality(y) + best[y]);
  return Matroid(Polymatroid::from_table_unchecked(size, std::move(ranks)));
}

DecompositionUnion natural_from_decomposition(std::span<const Matroid> matroids,
                                              const Polymatroid& rho) {
  rho.require_integral("decomposition");
  for (const Matroid& m : matroids) {
    if (m.size() != rho.size()) {
      throw Error(ErrorCode::kGroundSetMismatch,
                  "decomposition matroids must share the polymatroid's ground set");
    }
  }
  for (Subset a = 0; a <= rho.ground(); ++a) {
    std::int64_t sum = 0;
    for (const Matroid& m : matroids) sum += m.rank(a);
    if (sum != rho.int_rank(a)) {
      throw Error(ErrorCode::kNotADecomposition,
                  "ranks sum to " + std::to_string(sum) + " on " + format_subset(a) +
                      " but rho is " + rho(a).to_string());
    }
  }
  const std::vector<int> sizes = element_ranks(rho);
  const int total = std::accumulate(sizes.begin(), sizes.end(), 0);
  require_table_capacity(total, "natural matroid");
  BlockMap blocks = BlockMap::consecutive(sizes);

  std::vector<Matroid> extended;
  extended.reserve(matroids.size());
  std::vector<Subset> labels(std::size_t{1} << total);
  for (Subset y = 0; y < labels.size(); ++y) labels[y] = support(blocks, y);
  for (const Matroid& m : matroids) {
    std::vector<Rational> ranks(labels.size());
    for (Subset y = 0; y < labels.size(); ++y) ranks[y] = Rational(m.rank(labels[y]));
    extended.emplace_back(Polymatroid::from_table_unchecked(total, std::move(ranks)));
  }
  if (extended.empty()) {
    extended.emplace_back(Polymatroid::from_table_unchecked(
        total, std::vector<Rational>(labels.size(), Rational(0))));
  }
  Matroid joined = matroid_union(extended);
  Matroid result(joined.rank_function(), blocks);
  const bool same = result == build_natural_matroid(rho);
  return DecompositionUnion{std::move(result), same};
}

namespace {

bool same_under(const Polymatroid& a, const Polymatroid& b, const std::vector<int>& image) {
  for (Subset s = 0; s <= a.ground(); ++s) {
    Subset mapped = 0;
    for (int e : elements(s)) mapped |= singleton(image[e]);
    if (a(s) != b(mapped)) return false;
  }
  return true;
}

bool search_bijections(const Matroid& a, const Matroid& b, int block,
                       std::vector<int>& image) {
  const BlockMap& ba = *a.blocks();
  const BlockMap& bb = *b.blocks();
  if (block == ba.num_blocks()) {
    return same_under(a.rank_function(), b.rank_function(), image);
  }
  const std::vector<int> from = elements(ba.block(block));
  std::vector<int> to = elements(bb.block(block));
  do {
    for (std::size_t k = 0; k < from.size(); ++k) image[from[k]] = to[k];
    if (search_bijections(a, b, block + 1, image)) return true;
  } while (std::next_permutation(to.begin(), to.end()));
  return false;
}

}  // namespace

bool block_isomorphic(const Matroid& a, const Matroid& b) {
  if (!a.blocks() || !b.blocks()) {
    throw Error(ErrorCode::kInvalidArgument, "block isomorphism needs blocks");
  }
  const BlockMap& ba = *a.blocks();
  const BlockMap& bb = *b.blocks();
  if (a.size() != b.size() || ba.num_blocks() != bb.num_blocks()) return false;
  double bijections = 1;
  for (int i = 0; i < ba.num_blocks(); ++i) {
    if (ba.block_size(i) != bb.block_size(i)) return false;
    for (int k = 2; k <= ba.block_size(i); ++k) bijections *= k;
  }
  if (bijections > static_cast<double>(max_vectors())) {
    throw Error(ErrorCode::kCapacityExceeded, "too many block-preserving bijections");
  }
  std::vector<int> image(a.size());
  return search_bijections(a, b, 0, image);
}

}  // namespace polymat
