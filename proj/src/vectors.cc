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

#include "polymat/vectors.h"

#include <algorithm>
#include <string>

#include "polymat/error.h"
#include "polymat/limits.h"

namespace polymat {

std::int64_t norm(const IntVector& u) {
  std::int64_t total = 0;
  for (int x : u) total += x;
  return total;
}

std::int64_t norm_on(const IntVector& u, Subset x) {
  std::int64_t total = 0;
  for (int i : elements(x)) total += u[i];
  return total;
}

bool leq(const IntVector& u, const IntVector& v) {
  for (std::size_t i = 0; i < u.size(); ++i) {
    if (u[i] > v[i]) return false;
  }
  return true;
}

bool strictly_less(const IntVector& u, const IntVector& v) { return u != v && leq(u, v); }

IntVector join(const IntVector& u, const IntVector& v) {
  IntVector out(u.size());
  for (std::size_t i = 0; i < u.size(); ++i) out[i] = std::max(u[i], v[i]);
  return out;
}

IntVector meet(const IntVector& u, const IntVector& v) {
  IntVector out(u.size());
  for (std::size_t i = 0; i < u.size(); ++i) out[i] = std::min(u[i], v[i]);
  return out;
}

std::string format_vector(const IntVector& u) {
  std::string out = "(";
  for (std::size_t i = 0; i < u.size(); ++i) {
    if (i > 0) out += ',';
    out += std::to_string(u[i]);
  }
  return out + ")";
}

void canonicalize(VectorFamily& family) {
  std::sort(family.begin(), family.end());
  family.erase(std::unique(family.begin(), family.end()), family.end());
}

namespace {

// The integer box [b_0]_0 x ... x [b_{n-1}]_0 with a mixed-radix index in
// which coordinate 0 is most significant, so index order is lexicographic.
class Box {
 public:
  explicit Box(IntVector bounds) : bounds_(std::move(bounds)), strides_(bounds_.size()) {
    std::uint64_t size = 1;
    for (std::size_t k = bounds_.size(); k-- > 0;) {
      if (bounds_[k] < 0) throw Error(ErrorCode::kInvalidArgument, "negative bound");
      strides_[k] = size;
      size *= static_cast<std::uint64_t>(bounds_[k]) + 1;
      if (size > max_vectors()) {
        throw Error(ErrorCode::kCapacityExceeded,
                    "vector box exceeds " + std::to_string(max_vectors()) + " points");
      }
    }
    size_ = size;
  }

  std::size_t size() const { return size_; }
  int dimension() const { return static_cast<int>(bounds_.size()); }
  const IntVector& bounds() const { return bounds_; }

  bool inside(const IntVector& u) const {
    if (u.size() != bounds_.size()) return false;
    for (std::size_t k = 0; k < u.size(); ++k) {
      if (u[k] < 0 || u[k] > bounds_[k]) return false;
    }
    return true;
  }
  std::size_t index(const IntVector& u) const {
    std::size_t idx = 0;
    for (std::size_t k = 0; k < u.size(); ++k) idx += u[k] * strides_[k];
    return idx;
  }
  IntVector at(std::size_t idx) const {
    IntVector u(bounds_.size());
    for (std::size_t k = 0; k < u.size(); ++k) {
      u[k] = static_cast<int>(idx / strides_[k]);
      idx %= strides_[k];
    }
    return u;
  }
  std::size_t stride(int k) const { return strides_[k]; }

 private:
  IntVector bounds_;
  std::vector<std::size_t> strides_;
  std::size_t size_ = 1;
};

IntVector element_bounds(const Polymatroid& rho) {
  IntVector bounds(rho.size());
  for (int i = 0; i < rho.size(); ++i) {
    bounds[i] = static_cast<int>(rho.int_rank(singleton(i)));
  }
  return bounds;
}

Subset support_of(const IntVector& u) {
  Subset s = 0;
  for (std::size_t i = 0; i < u.size(); ++i) {
    if (u[i] > 0) s |= singleton(static_cast<int>(i));
  }
  return s;
}

// Independence flags over the box of singleton ranks.
std::vector<char> independence_flags(const Polymatroid& rho, const Box& box) {
  std::vector<char> flags(box.size());
  for (std::size_t idx = 0; idx < box.size(); ++idx) {
    flags[idx] = is_independent_vector(rho, box.at(idx));
  }
  return flags;
}

int family_dimension(const VectorFamily& family) {
  const std::size_t n = family.front().size();
  for (const auto& u : family) {
    if (u.size() != n) {
      throw Error(ErrorCode::kInvalidArgument, "vectors of different lengths");
    }
    for (int x : u) {
      if (x < 0) throw Error(ErrorCode::kInvalidArgument, "negative vector entry");
    }
  }
  return static_cast<int>(n);
}

IntVector coordinate_maxima(const VectorFamily& family, int n) {
  IntVector top(n, 0);
  for (const auto& u : family) top = join(top, u);
  return top;
}

// Membership of a canonical family inside the box spanned by its maxima.
class Membership {
 public:
  explicit Membership(const VectorFamily& family)
      : box_(coordinate_maxima(family, family_dimension(family))), flags_(box_.size()) {
    for (const auto& u : family) flags_[box_.index(u)] = 1;
  }
  bool contains(const IntVector& u) const {
    return box_.inside(u) && flags_[box_.index(u)];
  }
  const Box& box() const { return box_; }

 private:
  Box box_;
  std::vector<char> flags_;
};

AxiomOutcome holds(const char* axiom) { return AxiomOutcome{axiom, AxiomOutcome::Status::kHolds, ""}; }
AxiomOutcome fails(const char* axiom, std::string witness) {
  return AxiomOutcome{axiom, AxiomOutcome::Status::kFails, std::move(witness)};
}

IntVector shifted(IntVector u, int minus, int plus) {
  if (minus >= 0) --u[minus];
  if (plus >= 0) ++u[plus];
  return u;
}

std::string idx1(int i) { return std::to_string(i + 1); }

}  // namespace

bool is_independent_vector(const Polymatroid& rho, const IntVector& u) {
  if (static_cast<int>(u.size()) != rho.size()) {
    throw Error(ErrorCode::kInvalidArgument, "vector length differs from ground set");
  }
  bool ok = true;
  for_each_submask(support_of(u), [&](Subset x) {
    if (ok && norm_on(u, x) > rho.int_rank(x)) ok = false;
  });
  return ok;
}

VectorFamily independent_vectors(const Polymatroid& rho) {
  rho.require_integral("independent vectors");
  const Box box(element_bounds(rho));
  VectorFamily out;
  for (std::size_t idx = 0; idx < box.size(); ++idx) {
    IntVector u = box.at(idx);
    if (is_independent_vector(rho, u)) out.push_back(std::move(u));
  }
  return out;
}

VectorFamily bases(const Polymatroid& rho) {
  rho.require_integral("bases");
  const Box box(element_bounds(rho));
  const std::vector<char> flags = independence_flags(rho, box);
  VectorFamily out;
  for (std::size_t idx = 0; idx < box.size(); ++idx) {
    if (!flags[idx]) continue;
    const IntVector u = box.at(idx);
    bool maximal = true;
    for (int i = 0; i < box.dimension() && maximal; ++i) {
      if (u[i] < box.bounds()[i] && flags[idx + box.stride(i)]) maximal = false;
    }
    if (maximal) out.push_back(u);
  }
  return out;
}

std::int64_t rank_from_vectors(const VectorFamily& family, Subset x) {
  if (family.empty()) throw Error(ErrorCode::kEmptyFamily, "no vectors");
  std::int64_t best = 0;
  for (const auto& u : family) best = std::max(best, norm_on(u, x));
  return best;
}

Polymatroid polymatroid_from_vectors(const VectorFamily& family, int n) {
  if (family.empty()) throw Error(ErrorCode::kEmptyFamily, "no vectors");
  if (family_dimension(family) != n) {
    throw Error(ErrorCode::kInvalidArgument, "vector length differs from ground set");
  }
  require_table_capacity(n, "rank table");
  std::vector<Rational> ranks(std::size_t{1} << n);
  for (Subset x = 0; x < ranks.size(); ++x) ranks[x] = Rational(rank_from_vectors(family, x));
  return Polymatroid::from_table_unchecked(n, std::move(ranks));
}

CheckReport check_independence_axioms(const VectorFamily& input) {
  CheckReport report;
  if (input.empty()) {
    report.outcomes.push_back(fails("(nonempty)", "the family is empty"));
    return report;
  }
  VectorFamily family = input;
  canonicalize(family);
  const int n = family_dimension(family);
  const Membership members(family);

  AxiomOutcome down = holds("(I1)");
  for (const auto& v : family) {
    for (int i = 0; i < n && down.holds(); ++i) {
      if (v[i] == 0) continue;
      IntVector below = shifted(v, i, -1);
      if (!members.contains(below)) {
        down = fails("(I1)", "v=" + format_vector(v) + " but " + format_vector(below) +
                                 " is missing");
      }
    }
    if (!down.holds()) break;
  }
  report.outcomes.push_back(down);

  AxiomOutcome augment = holds("(I2)");
  for (const auto& u : family) {
    for (const auto& v : family) {
      if (norm(u) >= norm(v)) continue;
      bool found = false;
      if (down.holds()) {
        // Downward closure reduces the search to single-step augmentations.
        for (int j = 0; j < n && !found; ++j) {
          found = u[j] < v[j] && members.contains(shifted(u, -1, j));
        }
      } else {
        const IntVector top = join(u, v);
        for (const auto& w : family) {
          if (strictly_less(u, w) && leq(w, top)) {
            found = true;
            break;
          }
        }
      }
      if (!found) {
        augment = fails("(I2)", "u=" + format_vector(u) + " v=" + format_vector(v));
        break;
      }
    }
    if (!augment.holds()) break;
  }
  report.outcomes.push_back(augment);
  return report;
}

namespace {

AxiomOutcome exchange(const VectorFamily& family, const Membership& members,
                      bool symmetric) {
  const char* name = symmetric ? "(B')" : "(B)";
  const int n = static_cast<int>(family.front().size());
  for (const auto& u : family) {
    for (const auto& v : family) {
      for (int i = 0; i < n; ++i) {
        if (u[i] <= v[i]) continue;
        bool found = false;
        for (int j = 0; j < n && !found; ++j) {
          if (u[j] >= v[j]) continue;
          found = members.contains(shifted(u, i, j)) &&
                  (!symmetric || members.contains(shifted(v, j, i)));
        }
        if (!found) {
          return fails(name, "u=" + format_vector(u) + " v=" + format_vector(v) +
                                 " i=" + idx1(i));
        }
      }
    }
  }
  return holds(name);
}

AxiomOutcome antichain(const VectorFamily& family) {
  for (const auto& u : family) {
    for (const auto& v : family) {
      if (strictly_less(u, v)) {
        return fails("(antichain)", "u=" + format_vector(u) + " < v=" + format_vector(v));
      }
    }
  }
  return holds("(antichain)");
}

// For x below some basis and y above some basis with x <= y there is a basis
// between them. Clipping y to the box of coordinate maxima loses nothing, and
// it suffices to test y = x ∨ v for bases v.
AxiomOutcome middle(const VectorFamily& family, const Membership& members) {
  const Box& box = members.box();
  std::vector<char> below(box.size());
  for (std::size_t idx = box.size(); idx-- > 0;) {
    const IntVector x = box.at(idx);
    if (members.contains(x)) {
      below[idx] = 1;
      continue;
    }
    for (int i = 0; i < box.dimension(); ++i) {
      if (x[i] < box.bounds()[i] && below[idx + box.stride(i)]) {
        below[idx] = 1;
        break;
      }
    }
  }
  for (std::size_t idx = 0; idx < box.size(); ++idx) {
    if (!below[idx]) continue;
    const IntVector x = box.at(idx);
    VectorFamily above;
    for (const auto& w : family) {
      if (leq(x, w)) above.push_back(w);
    }
    for (const auto& v : family) {
      const IntVector y = join(x, v);
      const bool found = std::any_of(above.begin(), above.end(),
                                     [&](const IntVector& w) { return leq(w, y); });
      if (!found) {
        return fails("(middle)", "x=" + format_vector(x) + " y=" + format_vector(y));
      }
    }
  }
  return holds("(middle)");
}

}  // namespace

CheckReport check_basis_axioms(const VectorFamily& input, BasisAxiom axiom) {
  CheckReport report;
  if (input.empty()) {
    report.outcomes.push_back(fails("(nonempty)", "the family is empty"));
    return report;
  }
  VectorFamily family = input;
  canonicalize(family);
  const Membership members(family);
  switch (axiom) {
    case BasisAxiom::kExchange:
      report.outcomes.push_back(exchange(family, members, false));
      break;
    case BasisAxiom::kSymmetricExchange:
      report.outcomes.push_back(exchange(family, members, true));
      break;
    case BasisAxiom::kMiddle:
      report.outcomes.push_back(antichain(family));
      report.outcomes.push_back(middle(family, members));
      break;
  }
  return report;
}

VectorFamily dual_bases(const VectorFamily& family, int k) {
  if (k <= 0) throw Error(ErrorCode::kInvalidArgument, "k must be positive");
  VectorFamily out;
  out.reserve(family.size());
  for (const auto& u : family) {
    IntVector dual(u.size());
    for (std::size_t i = 0; i < u.size(); ++i) {
      if (u[i] > k) {
        throw Error(ErrorCode::kKTooSmall, format_vector(u) + " has an entry above k = " +
                                               std::to_string(k));
      }
      dual[i] = k - u[i];
    }
    out.push_back(std::move(dual));
  }
  canonicalize(out);
  return out;
}

CircuitSystem circuits(const Polymatroid& rho) {
  rho.require_integral("circuits");
  const Box box(element_bounds(rho));
  const std::vector<char> flags = independence_flags(rho, box);
  CircuitSystem system{box.bounds(), {}};
  for (std::size_t idx = 0; idx < box.size(); ++idx) {
    if (flags[idx]) continue;
    const IntVector u = box.at(idx);
    bool minimal = true;
    for (int i = 0; i < box.dimension() && minimal; ++i) {
      if (u[i] > 0 && !flags[idx - box.stride(i)]) minimal = false;
    }
    if (minimal) system.circuits.push_back(u);
  }
  return system;
}

namespace {

void check_bounds(const CircuitSystem& system) {
  const int n = system.size();
  IntVector largest(n, 0);
  for (const auto& c : system.circuits) {
    if (static_cast<int>(c.size()) != n) {
      throw Error(ErrorCode::kInvalidArgument, "circuit length differs from bounds");
    }
    for (int i = 0; i < n; ++i) {
      if (c[i] < 0 || c[i] > system.bounds[i]) {
        throw Error(ErrorCode::kBoundsMismatch, format_vector(c) + " leaves the box at " +
                                                    "element " + idx1(i));
      }
      largest[i] = std::max(largest[i], c[i]);
    }
  }
  for (int i = 0; i < n; ++i) {
    if (system.bounds[i] < 0) throw Error(ErrorCode::kInvalidArgument, "negative bound");
    if (largest[i] > 0 && largest[i] != system.bounds[i]) {
      throw Error(ErrorCode::kBoundsMismatch,
                  "bound " + std::to_string(system.bounds[i]) + " of element " + idx1(i) +
                      " differs from the largest circuit entry " +
                      std::to_string(largest[i]));
    }
  }
}

int positive_entries(const IntVector& u) {
  return static_cast<int>(std::count_if(u.begin(), u.end(), [](int x) { return x > 0; }));
}

}  // namespace

CheckReport check_circuit_axioms(const CircuitSystem& input) {
  check_bounds(input);
  VectorFamily family = input.circuits;
  canonicalize(family);
  const int n = input.size();
  const IntVector& m = input.bounds;
  CheckReport report;

  AxiomOutcome c1 = holds("(C1)");
  for (const auto& u : family) {
    if (positive_entries(u) < 2) {
      c1 = fails("(C1)", "u=" + format_vector(u));
      break;
    }
  }
  report.outcomes.push_back(c1);

  AxiomOutcome c2 = holds("(C2)");
  for (const auto& u : family) {
    for (const auto& v : family) {
      if (c2.holds() && strictly_less(u, v)) {
        c2 = fails("(C2)", "u=" + format_vector(u) + " < v=" + format_vector(v));
      }
    }
  }
  report.outcomes.push_back(c2);

  AxiomOutcome c3 = holds("(C3)");
  for (std::size_t a = 0; a < family.size() && c3.holds(); ++a) {
    for (std::size_t b = a + 1; b < family.size() && c3.holds(); ++b) {
      const IntVector& u = family[a];
      const IntVector& v = family[b];
      const IntVector top = join(u, v);
      for (int i = 0; i < n && c3.holds(); ++i) {
        if (u[i] == 0 || v[i] == 0) continue;
        const bool found = std::any_of(family.begin(), family.end(), [&](const IntVector& z) {
          return strictly_less(z, top) && z[i] < top[i];
        });
        if (!found) {
          c3 = fails("(C3)", "u=" + format_vector(u) + " v=" + format_vector(v) +
                                 " i=" + idx1(i));
        }
      }
    }
  }
  report.outcomes.push_back(c3);

  AxiomOutcome c4 = holds("(C4)");
  for (std::size_t a = 0; a < family.size() && c4.holds(); ++a) {
    const IntVector& u = family[a];
    for (int i = 0; i < n && c4.holds(); ++i) {
      if (u[i] == 0 || u[i] >= m[i]) continue;
      for (int j = 0; j < n && c4.holds(); ++j) {
        if (j == i || u[j] == 0) continue;
        const bool found = std::any_of(family.begin(), family.end(), [&](const IntVector& v) {
          if (v[i] != u[i] + 1 || v[j] >= u[j]) return false;
          for (int h = 0; h < n; ++h) {
            if (h != i && v[h] > u[h]) return false;
          }
          return true;
        });
        if (!found) {
          c4 = fails("(C4)", "u=" + format_vector(u) + " i=" + idx1(i) + " j=" + idx1(j));
        }
      }
    }
  }
  report.outcomes.push_back(c4);
  return report;
}

Polymatroid polymatroid_from_circuits(const CircuitSystem& system) {
  const CheckReport report = check_circuit_axioms(system);
  if (!report.holds()) throw Error(ErrorCode::kAxiomsFailed, report.to_string());
  const int n = system.size();
  require_table_capacity(n, "rank table");
  const Box box(system.bounds);
  // best[S]: largest norm of an independent vector with support exactly S.
  std::vector<std::int64_t> best(std::size_t{1} << n, 0);
  for (std::size_t idx = 0; idx < box.size(); ++idx) {
    const IntVector u = box.at(idx);
    const bool dependent = std::any_of(system.circuits.begin(), system.circuits.end(),
                                       [&](const IntVector& c) { return leq(c, u); });
    if (dependent) continue;
    const Subset s = support_of(u);
    best[s] = std::max(best[s], norm(u));
  }
  // A vector restricted to X stays independent, so rank(X) is the best over
  // supports inside X.
  for (int bit = 0; bit < n; ++bit) {
    for (Subset x = 0; x < best.size(); ++x) {
      if (contains(x, bit)) best[x] = std::max(best[x], best[x ^ singleton(bit)]);
    }
  }
  std::vector<Rational> ranks(best.size());
  for (Subset x = 0; x < best.size(); ++x) ranks[x] = Rational(best[x]);
  return Polymatroid::from_table_unchecked(n, std::move(ranks));
}

ElementDiagnosis diagnose_element(const Polymatroid& rho, int i, Subset a) {
  rho.require_integral("element diagnosis");
  if (!is_subset(a, rho.ground())) {
    throw Error(ErrorCode::kElementOutOfRange, format_subset(a) + " leaves the ground set");
  }
  if (i < 0 || i >= rho.size() || !contains(a, i)) {
    throw Error(ErrorCode::kElementNotInSet,
                "element " + idx1(i) + " is not in " + format_subset(a));
  }
  const std::int64_t own = rho.int_rank(singleton(i));
  if (own == 0) {
    throw Error(ErrorCode::kNotApplicable, "element " + idx1(i) + " is a loop");
  }
  ElementDiagnosis d;
  d.element = i;
  d.set = a;
  d.strict = rho.int_rank(a) < rho.int_rank(a & ~singleton(i)) + own;
  const CircuitSystem system = circuits(rho);
  for (const auto& c : system.circuits) {
    if (c[i] > 0 && is_subset(support_of(c), a)) {
      d.witness = c;
      break;
    }
  }
  d.consistent = d.strict == d.witness.has_value();
  if (a == rho.ground()) {
    int largest = 0;
    for (const auto& c : system.circuits) largest = std::max(largest, c[i]);
    d.max_circuit_entry = largest;
    const Matroid natural = build_natural_matroid(rho);
    const Subset block = natural.blocks()->block(i);
    bool inside = false;
    for (Subset c : matroid_circuits(natural)) {
      if (is_subset(block, c)) {
        inside = true;
        break;
      }
    }
    d.block_in_circuit = inside;
    d.consistent = d.consistent && inside == d.strict && (!d.strict || largest == own);
  }
  return d;
}

ElementDiagnosis diagnose_element(const CircuitSystem& system, int i, Subset a) {
  return diagnose_element(polymatroid_from_circuits(system), i, a);
}

CircuitSystem contraction_circuits(const CircuitSystem& system, const Polymatroid& rho,
                                   int i) {
  rho.require_integral("contraction circuits");
  if (i < 0 || i >= rho.size()) {
    throw Error(ErrorCode::kElementOutOfRange, "element " + idx1(i) + " is not in E");
  }
  if (system.size() != rho.size()) {
    throw Error(ErrorCode::kInvalidArgument, "circuit system and polymatroid differ in size");
  }
  const int n = rho.size();
  const std::int64_t own = rho.int_rank(singleton(i));
  CircuitSystem out;
  for (int j = 0; j < n; ++j) {
    if (j == i) continue;
    out.bounds.push_back(
        static_cast<int>(rho.int_rank(singleton(i) | singleton(j)) - own));
  }
  VectorFamily candidates;
  for (const auto& c : system.circuits) {
    IntVector dropped;
    for (int j = 0; j < n; ++j) {
      if (j != i) dropped.push_back(c[j]);
    }
    bool inside = true;
    for (std::size_t k = 0; k < dropped.size(); ++k) inside = inside && dropped[k] <= out.bounds[k];
    if (inside && positive_entries(dropped) >= 2) candidates.push_back(std::move(dropped));
  }
  canonicalize(candidates);
  for (const auto& u : candidates) {
    const bool minimal = std::none_of(candidates.begin(), candidates.end(),
                                      [&](const IntVector& v) { return strictly_less(v, u); });
    if (minimal) out.circuits.push_back(u);
  }
  return out;
}

bool connected_via_circuits(const CircuitSystem& system) {
  const int n = system.size();
  if (n == 0) throw Error(ErrorCode::kEmptyGroundSet, "connectivity of the empty set");
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      const bool covered = std::any_of(system.circuits.begin(), system.circuits.end(),
                                       [&](const IntVector& c) { return c[i] > 0 && c[j] > 0; });
      if (!covered) return false;
    }
  }
  return true;
}

}  // namespace polymat
