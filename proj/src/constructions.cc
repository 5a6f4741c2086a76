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

#include "polymat/constructions.h"

#include <algorithm>
#include <charconv>
#include <string>

#include "polymat/error.h"
#include "polymat/limits.h"
#include "polymat/vectors.h"

namespace polymat {

namespace {

Polymatroid table_of(int n, const auto& rank) {
  require_table_capacity(n, "rank table");
  std::vector<Rational> ranks(std::size_t{1} << n);
  for (Subset s = 0; s < ranks.size(); ++s) ranks[s] = Rational(rank(s));
  return Polymatroid::from_table_unchecked(n, std::move(ranks));
}

// Rank over GF(2) of the vectors selected by s.
int gf2_rank(std::span<const std::uint32_t> columns, Subset s) {
  std::vector<std::uint32_t> basis;  // kept with distinct leading bits
  for (int j : elements(s)) {
    std::uint32_t v = columns[j];
    for (std::uint32_t b : basis) v = std::min(v, v ^ b);
    if (v != 0) basis.push_back(v);
  }
  return static_cast<int>(basis.size());
}

}  // namespace

Matroid uniform_matroid(int r, int n) {
  if (n < 0 || r < 0 || r > n) {
    throw Error(ErrorCode::kInvalidArgument, "uniform matroid needs 0 <= r <= n");
  }
  return Matroid(table_of(n, [r](Subset s) { return std::min(cardinality(s), r); }));
}

Matroid binary_matroid(std::span<const std::uint32_t> columns) {
  const int n = static_cast<int>(columns.size());
  return Matroid(table_of(n, [&](Subset s) { return gf2_rank(columns, s); }));
}

Matroid fano_matroid() {
  const std::uint32_t columns[] = {1, 2, 3, 4, 5, 6, 7};
  return binary_matroid(columns);
}

Polymatroid induced_polymatroid(const Matroid& m, std::span<const Subset> phi) {
  const Subset ground = full_set(m.size());
  for (std::size_t e = 0; e < phi.size(); ++e) {
    if (!is_subset(phi[e], ground)) {
      throw Error(ErrorCode::kUnknownMatroidElement,
                  "image of element " + std::to_string(e + 1) + " leaves the matroid");
    }
  }
  const int n = static_cast<int>(phi.size());
  require_table_capacity(n, "rank table");
  std::vector<Subset> image(std::size_t{1} << n, 0);
  for (Subset s = 1; s < image.size(); ++s) {
    image[s] = image[s & (s - 1)] | phi[std::countr_zero(s)];
  }
  return table_of(n, [&](Subset s) { return m.rank(image[s]); });
}

void BipartiteGraph::validate() const {
  if (n < 0 || n > kMaskBits || k < 0 || k > kMaskBits) {
    throw Error(ErrorCode::kInvalidArgument, "graph sides out of range");
  }
  for (const auto& [e, h] : edges) {
    if (e < 0 || e >= n || h < 0 || h >= k) {
      throw Error(ErrorCode::kElementOutOfRange, "edge (" + std::to_string(e + 1) + "," +
                                                     std::to_string(h + 1) + ") out of range");
    }
  }
}

Subset BipartiteGraph::neighbors(int e) const {
  Subset out = 0;
  for (const auto& [f, h] : edges) {
    if (f == e) out |= singleton(h);
  }
  return out;
}

Polymatroid boolean_polymatroid(const BipartiteGraph& graph) {
  graph.validate();
  std::vector<Subset> hood(graph.n);
  for (int e = 0; e < graph.n; ++e) hood[e] = graph.neighbors(e);
  require_table_capacity(graph.n, "rank table");
  std::vector<Subset> reach(std::size_t{1} << graph.n, 0);
  for (Subset s = 1; s < reach.size(); ++s) {
    reach[s] = reach[s & (s - 1)] | hood[std::countr_zero(s)];
  }
  return table_of(graph.n, [&](Subset s) { return cardinality(reach[s]); });
}

std::vector<Matroid> boolean_decomposition(const BipartiteGraph& graph) {
  graph.validate();
  std::vector<Matroid> out;
  for (int h = 0; h < graph.k; ++h) {
    Subset side = 0;
    for (const auto& [e, g] : graph.edges) {
      if (g == h) side |= singleton(e);
    }
    out.emplace_back(table_of(graph.n, [side](Subset s) { return (s & side) ? 1 : 0; }));
  }
  return out;
}

void LatticePathDiagram::validate() const {
  if (n < 0 || n > kMaskBits) throw Error(ErrorCode::kMalformedDiagram, "n out of range");
  for (std::size_t h = 0; h < rows.size(); ++h) {
    const auto [a, b] = rows[h];
    const std::string row = "row " + std::to_string(h + 1);
    if (a < 1 || a > b || b > n) {
      throw Error(ErrorCode::kMalformedDiagram, row + " needs 1 <= a <= b <= n");
    }
    if (h > 0 && (a < rows[h - 1].first || b < rows[h - 1].second)) {
      throw Error(ErrorCode::kMalformedDiagram, row + " breaks the monotone endpoints");
    }
  }
}

BipartiteGraph lattice_path_graph(const LatticePathDiagram& diagram) {
  diagram.validate();
  BipartiteGraph graph;
  graph.n = diagram.n;
  graph.k = static_cast<int>(diagram.rows.size());
  for (int e = 0; e < diagram.n; ++e) {
    for (int h = 0; h < graph.k; ++h) {
      if (diagram.rows[h].first <= e + 1 && e + 1 <= diagram.rows[h].second) {
        graph.edges.emplace_back(e, h);
      }
    }
  }
  return graph;
}

Polymatroid lattice_path_polymatroid(const LatticePathDiagram& diagram) {
  return boolean_polymatroid(lattice_path_graph(diagram));
}

namespace {

Polymatroid pg22_lines() {
  const Matroid fano = fano_matroid();
  std::vector<Subset> lines;
  for (std::uint32_t x = 1; x <= 7; ++x) {
    for (std::uint32_t y = x + 1; y <= 7; ++y) {
      const std::uint32_t z = x ^ y;
      if (z > y) lines.push_back(singleton(x - 1) | singleton(y - 1) | singleton(z - 1));
    }
  }
  std::sort(lines.begin(), lines.end());
  return induced_polymatroid(fano, lines);
}

Polymatroid vamos2poly() {
  constexpr Subset kAD = 0b1001;
  return table_of(4, [](Subset s) {
    const int size = cardinality(s);
    if (size == 0) return 0;
    if (size == 1) return 2;
    if (size == 2) return s == kAD ? 4 : 3;
    return 4;
  });
}

Polymatroid fig2poly() {
  return polymatroid_from_circuits(CircuitSystem{{2, 1, 2}, {{0, 1, 2}, {2, 0, 2}, {2, 1, 1}}});
}

bool parse_int(std::string_view text, int& out) {
  const auto [end, ec] = std::from_chars(text.data(), text.data() + text.size(), out);
  return ec == std::errc() && end == text.data() + text.size();
}

}  // namespace

Polymatroid builtin(std::string_view name) {
  if (name == "fano") return fano_matroid().rank_function();
  if (name == "pg22_lines") return pg22_lines();
  if (name == "vamos2poly") return vamos2poly();
  if (name == "fig2poly") return fig2poly();
  constexpr std::string_view kUniform = "uniform(";
  if (name.starts_with(kUniform) && name.ends_with(")")) {
    const std::string_view args = name.substr(kUniform.size(), name.size() - kUniform.size() - 1);
    const auto comma = args.find(',');
    int r = 0;
    int n = 0;
    if (comma != std::string_view::npos && parse_int(args.substr(0, comma), r) &&
        parse_int(args.substr(comma + 1), n)) {
      return uniform_matroid(r, n).rank_function();
    }
  }
  throw Error(ErrorCode::kUnknownName, "unknown construction '" + std::string(name) + "'");
}

Polymatroid random_polymatroid(std::mt19937_64& rng, int max_n, int max_element_rank) {
  if (max_n < 1 || max_element_rank < 1) {
    throw Error(ErrorCode::kInvalidArgument, "random polymatroid bounds must be positive");
  }
  std::uniform_int_distribution<int> n_dist(1, max_n);
  std::uniform_int_distribution<int> size_dist(1, 10);
  std::uniform_int_distribution<int> rank_dist(1, 5);
  for (;;) {
    const int dim = rank_dist(rng);
    const int m = size_dist(rng);
    std::uniform_int_distribution<std::uint32_t> vec_dist(0, (1u << dim) - 1);
    std::vector<std::uint32_t> columns(m);
    for (auto& c : columns) c = vec_dist(rng);
    const Matroid matroid = binary_matroid(columns);
    const int n = n_dist(rng);
    std::uniform_int_distribution<Subset> phi_dist(0, full_set(m));
    std::vector<Subset> phi(n);
    for (auto& p : phi) p = phi_dist(rng);
    Polymatroid rho = induced_polymatroid(matroid, phi);
    if (rho.max_element_rank() <= Rational(max_element_rank)) return rho;
  }
}

}  // namespace polymat
