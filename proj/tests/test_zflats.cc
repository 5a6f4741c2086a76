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

#include "doctest.h"
#include "oracles.h"
#include "polymat/error.h"
#include "polymat/natural.h"
#include "polymat/vectors.h"
#include "polymat/zflats.h"

namespace polymat {
namespace {

// Elements of vamos2poly.
constexpr Subset kA = 1, kB = 2, kC = 4, kD = 8;

// Interval graph elements e1..e7.
constexpr Subset e(int i) { return singleton(i - 1); }

std::vector<Polymatroid> sample() {
  std::vector<Polymatroid> out = oracle::generator_instances(100, 71);
  out.push_back(oracle::fig2_table());
  out.push_back(builtin("vamos2poly"));
  out.push_back(builtin("fano"));
  out.push_back(boolean_polymatroid(oracle::interval_graph()));
  return out;
}

std::vector<Subset> complements(const std::vector<Subset>& family, Subset ground) {
  std::vector<Subset> out;
  for (Subset z : family) out.push_back(ground & ~z);
  std::sort(out.begin(), out.end());
  return out;
}

TEST_SUITE("zflats") {
  TEST_CASE("flats and closure of fig2poly") {
    const Polymatroid rho = oracle::fig2_table();
    CHECK(is_flat(rho, 0b110));
    CHECK_FALSE(is_flat(rho, 0b100));
    CHECK(is_flat(rho, rho.ground()));
    CHECK(closure(rho, rho.ground()) == rho.ground());
  }

  TEST_CASE("closure in the interval graph polymatroid") {
    const Polymatroid rho = boolean_polymatroid(oracle::interval_graph());
    CHECK(closure(rho, e(3)) == (e(1) | e(2) | e(3) | e(4)));
    CHECK_FALSE(is_flat(rho, e(3)));
    CHECK(contains(closure(rho, e(3)), 1));
    CHECK_FALSE(contains(closure(rho, e(2)), 2));
    CHECK(closure(rho, e(2)) == (e(1) | e(2)));
    CHECK_FALSE(contains(closure(rho, 0), 1));
  }

  TEST_CASE("closure of the empty set is the set of loops") {
    for (const auto& rho : sample()) CHECK(closure(rho, 0) == rho.loops());
  }

  TEST_CASE("closure and cyclic operators match their definitions") {
    for (const auto& rho : sample()) {
      if (rho.size() > 7) continue;
      std::vector<Subset> flat_list;
      for (Subset a = 0; a <= rho.ground(); ++a) {
        REQUIRE(closure(rho, a) == oracle::closure(rho, a));
        REQUIRE(cyclic_core(rho, a) == oracle::cyclic_interior(rho, a));
        REQUIRE(is_flat(rho, a) == oracle::flat(rho, a));
        REQUIRE(is_cyclic(rho, a) == oracle::cyclic(rho, a));
        if (oracle::flat(rho, a)) flat_list.push_back(a);
      }
      CHECK(flats(rho) == flat_list);
      CHECK(cyclic_flats(rho) == oracle::cyclic_flat_scan(rho));
    }
  }

  TEST_CASE("closure is a closure operator and cy an interior operator") {
    for (const auto& rho : sample()) {
      if (rho.size() > 6) continue;
      for (Subset a = 0; a <= rho.ground(); ++a) {
        const Subset cl = closure(rho, a);
        const Subset cy = cyclic_core(rho, a);
        CHECK(is_subset(a, cl));
        CHECK(closure(rho, cl) == cl);
        CHECK(rho(cl) == rho(a));
        CHECK(is_subset(cy, a));
        CHECK(cyclic_core(rho, cy) == cy);
        Rational sum = rho(cy);
        for (int i : elements(a & ~cy)) sum += rho.element_rank(i);
        CHECK(rho(a) == sum);
        for_each_submask(a, [&](Subset b) {
          REQUIRE(is_subset(closure(rho, b), cl));
          REQUIRE(is_subset(cyclic_core(rho, b), cy));
        });
        if (is_cyclic(rho, a)) CHECK(is_cyclic(rho, cl));
        if (is_flat(rho, a)) CHECK(is_flat(rho, cy));
      }
      const auto cyc = cyclic_sets(rho);
      for (Subset x : cyc) {
        for (Subset y : cyc) CHECK(is_cyclic(rho, x | y));
      }
      const auto fl = flats(rho);
      for (Subset x : fl) {
        for (Subset y : fl) CHECK(is_flat(rho, x & y));
      }
    }
  }

  TEST_CASE("closure through circuits") {
    for (const auto& rho : oracle::generator_instances(60, 73)) {
      const CircuitSystem s = circuits(rho);
      for (Subset a = 0; a <= rho.ground(); ++a) {
        REQUIRE(closure_via_circuits(rho, s, a) == closure(rho, a));
      }
    }
  }

  TEST_CASE("MacLane-Steinitz exchange fails in the interval graph polymatroid") {
    const Polymatroid rho = boolean_polymatroid(oracle::interval_graph());
    CHECK(contains(closure(rho, e(3)), 1));
    CHECK_FALSE(contains(closure(rho, 0), 1));
    CHECK_FALSE(contains(closure(rho, e(2)), 2));
  }

  TEST_CASE("cyclic sets of vamos2poly") {
    const Polymatroid rho = builtin("vamos2poly");
    std::vector<Subset> expected;
    for (Subset a = 0; a <= 0b1111; ++a) {
      if (cardinality(a) == 1 || a == (kA | kD)) continue;
      expected.push_back(a);
    }
    CHECK(cyclic_sets(rho) == expected);
    CHECK(cyclic_core(rho, kA | kD) == 0);
    CHECK(cyclic_core(rho, kA | kB) == (kA | kB));
    CHECK(cyclic_core(rho, 0) == 0);
  }

  TEST_CASE("cyclic flat lattices") {
    const CyclicFlatLattice fig2(oracle::fig2_table());
    CHECK(fig2.elements() == std::vector<Subset>{0, 0b110, 0b111});
    CHECK(fig2.rank(0b110) == Rational(2));
    CHECK(fig2.rank(0b111) == Rational(3));

    const Polymatroid free = oracle::table(2, [](Subset s) { return cardinality(s); });
    CHECK(cyclic_flats(free) == std::vector<Subset>{0});

    const CyclicFlatLattice fano(builtin("fano"));
    CHECK(fano.elements().size() == 9);
    int lines = 0;
    for (Subset z : fano.elements()) {
      if (z == 0) CHECK(fano.rank(z) == Rational(0));
      else if (z == 0b1111111) CHECK(fano.rank(z) == Rational(3));
      else {
        CHECK(fano.rank(z) == Rational(2));
        CHECK(cardinality(z) == 3);
        ++lines;
      }
    }
    CHECK(lines == 7);
  }

  TEST_CASE("meet and join are lattice operations") {
    for (const auto& rho : sample()) {
      const CyclicFlatLattice lat(rho);
      const auto& z = lat.elements();
      for (Subset a : z) {
        CHECK(lat.meet(a, a) == a);
        CHECK(lat.join(a, a) == a);
        for (Subset b : z) {
          const Subset m = lat.meet(a, b);
          const Subset j = lat.join(a, b);
          CHECK(lat.contains(m));
          CHECK(lat.contains(j));
          CHECK(m == lat.meet(b, a));
          CHECK(j == lat.join(b, a));
          CHECK(is_subset(m, a & b));
          CHECK(is_subset(a | b, j));
          // Greatest lower and least upper bounds within Z.
          for (Subset c : z) {
            if (is_subset(c, a) && is_subset(c, b)) CHECK(is_subset(c, m));
            if (is_subset(a, c) && is_subset(b, c)) CHECK(is_subset(j, c));
          }
        }
      }
      if (z.size() <= 12) {
        for (Subset a : z) {
          for (Subset b : z) {
            for (Subset c : z) {
              CHECK(lat.meet(lat.meet(a, b), c) == lat.meet(a, lat.meet(b, c)));
              CHECK(lat.join(lat.join(a, b), c) == lat.join(a, lat.join(b, c)));
            }
          }
        }
      }
    }
  }

  TEST_CASE("flats, cyclic sets, and cyclic flats lift to the natural matroid") {
    for (const auto& rho : oracle::generator_instances(60, 75)) {
      const Matroid m = build_natural_matroid(rho);
      const Polymatroid& r = m.rank_function();
      const Subset loops = rho.loops();
      for (Subset a = 0; a <= rho.ground(); ++a) {
        const Subset xa = m.blocks()->blocks_of(a);
        const bool with_loops = is_subset(loops, a);
        REQUIRE(is_flat(rho, a) == (with_loops && is_flat(r, xa)));
        REQUIRE(is_cyclic(rho, a) == is_cyclic(r, xa));
        REQUIRE((is_flat(rho, a) && is_cyclic(rho, a)) ==
                (with_loops && is_flat(r, xa) && is_cyclic(r, xa)));
      }
    }
  }

  TEST_CASE("Z axioms on genuine families") {
    const RankedCyclicFlatFamily fano = ranked_cyclic_flats(builtin("fano"));
    CHECK(check_z_axioms(fano, ZMode::kMatroid).holds());
    CHECK(check_z_axioms(fano, ZMode::kPolymatroid).holds());

    RankedCyclicFlatFamily fig2;
    fig2.n = 3;
    fig2.flats = {0, 0b110, 0b111};
    fig2.flat_ranks = {0, 2, 3};
    fig2.element_ranks = {Rational(2), Rational(1), Rational(2)};
    CHECK(check_z_axioms(fig2, ZMode::kPolymatroid).holds());
    CHECK(polymatroid_from_cyclic_flats(fig2) == oracle::fig2_table());

    for (const auto& rho : sample()) {
      CHECK(check_z_axioms(ranked_cyclic_flats(rho), ZMode::kPolymatroid).holds());
    }
  }

  TEST_CASE("Z axiom failures") {
    RankedCyclicFlatFamily fano = ranked_cyclic_flats(builtin("fano"));
    fano.flat_ranks[1] = Rational(3);
    const CheckReport raised = check_z_axioms(fano, ZMode::kMatroid);
    CHECK(raised.failed() == std::vector<std::string>{"(Z2)"});
    CHECK(raised.find("(Z2)")->witness.find("A={} B=" + format_subset(fano.flats[1])) == 0);

    RankedCyclicFlatFamily two_tops;
    two_tops.n = 2;
    two_tops.flats = {0, 0b01, 0b10};
    two_tops.flat_ranks = {0, 1, 1};
    two_tops.element_ranks = {Rational(1), Rational(1)};
    const CheckReport no_join = check_z_axioms(two_tops, ZMode::kPolymatroid);
    CHECK(no_join.find("(PZ0)")->fails());
    CHECK(no_join.find("(PZ3)")->status == AxiomOutcome::Status::kSkipped);

    RankedCyclicFlatFamily bottom;
    bottom.n = 2;
    bottom.flats = {0, 0b11};
    bottom.flat_ranks = {0, 1};
    bottom.element_ranks = {Rational(0), Rational(1)};
    CHECK(check_z_axioms(bottom, ZMode::kPolymatroid).find("(PZ1)")->fails());

    RankedCyclicFlatFamily heavy;
    heavy.n = 2;
    heavy.flats = {0, 0b11};
    heavy.flat_ranks = {0, 2};
    heavy.element_ranks = {Rational(3), Rational(3)};
    CHECK(check_z_axioms(heavy, ZMode::kPolymatroid).find("(PZ4)")->fails());

    RankedCyclicFlatFamily missing = heavy;
    missing.element_ranks = {Rational(1), std::nullopt};
    CHECK_THROWS_AS(check_z_axioms(missing, ZMode::kPolymatroid), Error);
    try {
      check_z_axioms(missing, ZMode::kPolymatroid);
    } catch (const Error& err) {
      CHECK(err.code() == ErrorCode::kRankDomainMismatch);
    }
    RankedCyclicFlatFamily fractional = heavy;
    fractional.flat_ranks = {0, Rational(3, 2)};
    try {
      check_z_axioms(fractional, ZMode::kMatroid);
      FAIL("expected an error");
    } catch (const Error& err) {
      CHECK(err.code() == ErrorCode::kRankDomainMismatch);
    }
    try {
      polymatroid_from_cyclic_flats(heavy);
      FAIL("expected an error");
    } catch (const Error& err) {
      CHECK(err.code() == ErrorCode::kAxiomsFailed);
    }
  }

  TEST_CASE("Z3 and PZ3 detect a non-semimodular family") {
    // Two rank-2 triples sharing two elements, with join of rank 4.
    RankedCyclicFlatFamily fam;
    fam.n = 4;
    fam.flats = {0, 0b0111, 0b1110, 0b1111};
    fam.flat_ranks = {0, 2, 2, 4};
    fam.element_ranks = {Rational(1), Rational(1), Rational(1), Rational(1)};
    // A ∩ B = {2,3} and A ∧ B = {} so the left side is 4 + 0 + 2 > 4.
    CHECK(check_z_axioms(fam, ZMode::kMatroid).find("(Z3)")->fails());
    CHECK(check_z_axioms(fam, ZMode::kPolymatroid).find("(PZ3)")->fails());
  }

  TEST_CASE("rank reconstruction from cyclic flats") {
    RankedCyclicFlatFamily free;
    free.n = 2;
    free.flats = {0};
    free.flat_ranks = {0};
    free.element_ranks = {Rational(1), Rational(1)};
    CHECK(polymatroid_from_cyclic_flats(free) == uniform_matroid(2, 2).rank_function());
    CHECK(polymatroid_from_cyclic_flats(free)(0b01) == Rational(1));

    const Polymatroid fano = builtin("fano");
    CHECK(matroid_from_cyclic_flats(ranked_cyclic_flats(fano)) == fano);
    CHECK(polymatroid_from_cyclic_flats(ranked_cyclic_flats(fano)) == fano);

    for (const auto& rho : sample()) {
      const RankedCyclicFlatFamily fam = ranked_cyclic_flats(rho);
      const Polymatroid back = polymatroid_from_cyclic_flats(fam);
      CHECK(back == rho);
      CHECK(ranked_cyclic_flats(back).flats == fam.flats);
    }
  }

  TEST_CASE("rational ranks") {
    for (const auto& rho : oracle::generator_instances(40, 77)) {
      for (Rational factor : {Rational(1, 2), Rational(3, 2)}) {
        const Polymatroid scaled = oracle::scale(rho, factor);
        CHECK(cyclic_flats(scaled) == cyclic_flats(rho));
        CHECK(flats(scaled) == flats(rho));
        const RankedCyclicFlatFamily fam = ranked_cyclic_flats(scaled);
        CHECK(check_z_axioms(fam, ZMode::kPolymatroid).holds());
        CHECK(polymatroid_from_cyclic_flats(fam) == scaled);
        for (Subset a = 0; a <= rho.ground(); ++a) {
          CHECK(r_set(scaled, a).members == r_set(rho, a).members);
        }
      }
    }
  }

  TEST_CASE("R-set examples") {
    const Polymatroid fig2 = oracle::fig2_table();
    const RSetReport one = r_set(fig2, 0b001);
    CHECK(one.members == std::vector<Subset>{0});
    CHECK(one.minimum == Rational(2));

    const Polymatroid fano = builtin("fano");
    const Subset basis = 0b1011;  // points 1, 2, 4: vectors 001, 010, 100
    const RSetReport r = r_set(fano, basis);
    CHECK(r.structure_holds());
    CHECK_FALSE(r.is_interval);
    REQUIRE(r.members.size() == 5);
    CHECK(r.members.front() == 0);
    CHECK(r.members.back() == 0b1111111);
    for (std::size_t k = 1; k < 4; ++k) {
      CHECK(cardinality(r.members[k]) == 3);
      CHECK(cardinality(r.members[k] & basis) == 2);
    }
  }

  TEST_CASE("R-set structure on every instance and set") {
    for (const auto& rho : sample()) {
      for (Subset a = 0; a <= rho.ground(); ++a) {
        const RSetReport r = r_set(rho, a);
        REQUIRE(r.structure_holds());
        for (Subset b : r.members) {
          const RecastOutcome o = recast_r_test(rho, a, b);
          CHECK(o.equality);
          CHECK(o.agrees());
        }
      }
      for (Subset z : cyclic_flats(rho)) CHECK(r_set(rho, z).members == std::vector<Subset>{z});
    }
  }

  TEST_CASE("recast R test") {
    for (const auto& rho : oracle::generator_instances(40, 79)) {
      for (Subset a = 0; a <= rho.ground(); ++a) {
        const RecastOutcome core = recast_r_test(rho, a, cyclic_core(rho, a));
        CHECK(core.equality);
        CHECK(core.splits_off);
        CHECK(core.intersection_spans);
        CHECK(recast_r_test(rho, a, a).equality);
        for (Subset b = 0; b <= rho.ground(); ++b) REQUIRE(recast_r_test(rho, a, b).agrees());
      }
    }
    const Polymatroid fano = builtin("fano");
    const Subset basis = 0b1011;
    // Line {3,4,7} (vectors 011, 100, 111) meets the basis in point 4.
    const Subset line = 0b1001100;
    REQUIRE(is_cyclic(fano, line));
    const RecastOutcome o = recast_r_test(fano, basis, line);
    CHECK_FALSE(o.equality);
    CHECK(o.splits_off);
    CHECK_FALSE(o.intersection_spans);
    CHECK(o.agrees());
  }

  TEST_CASE("cyclic flats of k-duals are not complements of cyclic flats") {
    const Polymatroid fig2 = oracle::fig2_table();
    const Polymatroid fig2_dual = k_dual(fig2, 2);
    const auto z = cyclic_flats(fig2);
    const auto z_dual = cyclic_flats(fig2_dual);
    CHECK(z == std::vector<Subset>{0, 0b110, 0b111});
    CHECK(z_dual == std::vector<Subset>{0, 0b101, 0b111});
    CHECK(complements(z, 0b111) == std::vector<Subset>{0, 0b001, 0b111});

    const Polymatroid vamos = builtin("vamos2poly");
    const auto vz = cyclic_flats(vamos);
    const auto vz_dual = cyclic_flats(k_dual(vamos, 2));
    CHECK(complements(vz, 0b1111) == vz_dual);
  }

  TEST_CASE("cyclic flat membership through the natural matroid") {
    for (const auto& rho : oracle::generator_instances(40, 81)) {
      const Matroid m = build_natural_matroid(rho);
      const auto natural_z = cyclic_flats(m.rank_function());
      for (Subset a = 0; a <= rho.ground(); ++a) {
        const Subset xa = m.blocks()->blocks_of(a);
        const bool in_natural = std::binary_search(natural_z.begin(), natural_z.end(), xa);
        CHECK(cyclic_flat_lattice(rho).contains(a) == (is_subset(rho.loops(), a) && in_natural));
      }
    }
  }
}

}  // namespace
}  // namespace polymat
