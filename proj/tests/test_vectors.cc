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
#include "polymat/vectors.h"

namespace polymat {
namespace {

bool throws_code(const std::function<void()>& f, ErrorCode code) {
  try {
    f();
  } catch (const Error& e) {
    return e.code() == code;
  }
  return false;
}

const CircuitSystem kFig2Circuits{{2, 1, 2}, {{0, 1, 2}, {2, 0, 2}, {2, 1, 1}}};

std::vector<std::string> failed(const CheckReport& r) { return r.failed(); }

TEST_SUITE("vectors") {
  TEST_CASE("vector helpers") {
    CHECK(norm({2, 1, 0}) == 3);
    CHECK(norm_on({2, 1, 0}, 0b110) == 1);
    CHECK(join({2, 0}, {1, 3}) == IntVector{2, 3});
    CHECK(meet({2, 0}, {1, 3}) == IntVector{1, 0});
    CHECK(strictly_less({1, 0}, {1, 1}));
    CHECK_FALSE(strictly_less({1, 1}, {1, 1}));
    CHECK(format_vector({2, 1, 0}) == "(2,1,0)");
  }

  TEST_CASE("independent vectors of fig2poly") {
    const Polymatroid rho = oracle::fig2_table();
    const VectorFamily ind = independent_vectors(rho);
    CHECK(ind == oracle::independents(rho));
    auto has = [&](const IntVector& u) { return std::find(ind.begin(), ind.end(), u) != ind.end(); };
    CHECK(has({2, 1, 0}));
    CHECK(has({1, 1, 1}));
    CHECK_FALSE(has({0, 1, 2}));
  }

  TEST_CASE("trivial independent sets and bases") {
    const Polymatroid zero = validate(2, std::vector<Rational>(4));
    CHECK(independent_vectors(zero) == VectorFamily{{0, 0}});
    CHECK(bases(zero) == VectorFamily{{0, 0}});
    const Polymatroid u23 = uniform_matroid(2, 3).rank_function();
    CHECK(independent_vectors(u23) ==
          VectorFamily{{0, 0, 0}, {0, 0, 1}, {0, 1, 0}, {0, 1, 1}, {1, 0, 0}, {1, 0, 1}, {1, 1, 0}});
  }

  TEST_CASE("bases of fig2poly and the lattice path example") {
    CHECK(bases(oracle::fig2_table()) == VectorFamily{{1, 0, 2}, {1, 1, 1}, {2, 0, 1}, {2, 1, 0}});
    const VectorFamily b3 = bases(lattice_path_polymatroid(oracle::staircase_diagram()));
    CHECK(std::find(b3.begin(), b3.end(), IntVector{0, 0, 0, 2, 0, 1, 0}) != b3.end());
  }

  TEST_CASE("rank from vectors") {
    const VectorFamily b = {{2, 1, 0}, {2, 0, 1}, {1, 1, 1}, {1, 0, 2}};
    CHECK(rank_from_vectors(b, 0b110) == 2);
    CHECK(rank_from_vectors(b, 0) == 0);
    CHECK(rank_from_vectors(b, 0b111) == 3);
    CHECK(throws_code([] { rank_from_vectors({}, 0); }, ErrorCode::kEmptyFamily));
    CHECK(polymatroid_from_vectors(b, 3) == oracle::fig2_table());
  }

  TEST_CASE("vector enumeration matches the oracles on random instances") {
    for (const auto& rho : oracle::generator_instances(100, 41)) {
      CHECK(independent_vectors(rho) == oracle::independents(rho));
      const VectorFamily b = bases(rho);
      CHECK(b == oracle::bases(rho));
      for (const auto& u : b) CHECK(norm(u) == rho.int_rank(rho.ground()));
      CHECK(circuits(rho).circuits == oracle::circuits(rho));
      CHECK(circuits(rho).bounds == oracle::singleton_ranks(rho));
    }
  }

  TEST_CASE("independence axioms") {
    for (const auto& rho : oracle::generator_instances(100, 43)) {
      CHECK(check_independence_axioms(independent_vectors(rho)).holds());
    }
    const CheckReport gap = check_independence_axioms({{0, 0}, {2, 0}});
    CHECK(failed(gap) == std::vector<std::string>{"(I1)"});
    CHECK(gap.find("(I1)")->witness.find("(1,0)") != std::string::npos);
    CHECK(check_independence_axioms({{0, 0}, {1, 0}, {0, 1}}).holds());
    const CheckReport stuck = check_independence_axioms({{0, 0}, {1, 0}, {0, 1}, {0, 2}});
    CHECK(failed(stuck) == std::vector<std::string>{"(I2)"});
    CHECK(failed(check_independence_axioms({})) == std::vector<std::string>{"(nonempty)"});
  }

  TEST_CASE("basis axioms") {
    for (const auto& rho : oracle::generator_instances(100, 47)) {
      const VectorFamily b = bases(rho);
      CHECK(check_basis_axioms(b, BasisAxiom::kExchange).holds());
      CHECK(check_basis_axioms(b, BasisAxiom::kSymmetricExchange).holds());
      CHECK(check_basis_axioms(b, BasisAxiom::kMiddle).holds());
    }
    const CheckReport bad = check_basis_axioms({{2, 0}, {0, 1}}, BasisAxiom::kExchange);
    CHECK(failed(bad) == std::vector<std::string>{"(B)"});
    CHECK(bad.find("(B)")->witness == "u=(0,1) v=(2,0) i=2");
    CHECK(check_basis_axioms({{1, 0}, {0, 1}}, BasisAxiom::kExchange).holds());
    CHECK(check_basis_axioms({{1, 0}, {0, 1}}, BasisAxiom::kSymmetricExchange).holds());
    CHECK(failed(check_basis_axioms({{1, 0}, {1, 1}}, BasisAxiom::kMiddle)).front() == "(antichain)");
    CHECK(failed(check_basis_axioms({}, BasisAxiom::kMiddle)) == std::vector<std::string>{"(nonempty)"});
  }

  TEST_CASE("symmetric exchange implies exchange") {
    std::vector<VectorFamily> fixtures = {
        {{2, 0}, {0, 1}}, {{1, 0}, {0, 1}}, {{2, 0}, {1, 1}, {0, 2}}, {{2, 0}, {0, 2}},
        {{1, 1, 0}, {0, 1, 1}}, {{1, 0, 2}, {1, 1, 1}, {2, 0, 1}, {2, 1, 0}}};
    for (const auto& rho : oracle::generator_instances(30, 49)) fixtures.push_back(bases(rho));
    // Deleting one basis of each instance gives further families of both kinds.
    for (const auto& rho : oracle::generator_instances(30, 51)) {
      VectorFamily b = bases(rho);
      if (b.size() > 1) {
        b.erase(b.begin() + static_cast<long>(b.size() / 2));
        fixtures.push_back(b);
      }
    }
    int symmetric = 0;
    for (const auto& f : fixtures) {
      if (check_basis_axioms(f, BasisAxiom::kSymmetricExchange).holds()) {
        ++symmetric;
        CHECK(check_basis_axioms(f, BasisAxiom::kExchange).holds());
      }
    }
    CHECK(symmetric > 30);
  }

  TEST_CASE("dual bases") {
    const VectorFamily b = bases(oracle::fig2_table());
    CHECK(dual_bases(b, 2) == VectorFamily{{0, 1, 2}, {0, 2, 1}, {1, 1, 1}, {1, 2, 0}});
    CHECK(dual_bases(dual_bases(b, 2), 2) == b);
    CHECK(throws_code([&] { dual_bases(b, 1); }, ErrorCode::kKTooSmall));
    const VectorFamily u23 = bases(uniform_matroid(2, 3).rank_function());
    CHECK(dual_bases(u23, 1) == bases(uniform_matroid(1, 3).rank_function()));
    for (const auto& rho : oracle::generator_instances(100, 53)) {
      for (int k : {3, 4}) CHECK(dual_bases(bases(rho), k) == bases(k_dual(rho, k)));
    }
  }

  TEST_CASE("circuits") {
    CHECK(circuits(oracle::fig2_table()) == kFig2Circuits);
    const Polymatroid free = oracle::table(2, [](Subset s) { return 2 * ((s & 1) != 0) + ((s & 2) != 0); });
    CHECK(circuits(free).circuits.empty());
    CHECK(circuits(uniform_matroid(2, 3).rank_function()).circuits == VectorFamily{{1, 1, 1}});
  }

  TEST_CASE("circuit axioms") {
    CHECK(check_circuit_axioms(kFig2Circuits).holds());
    const CheckReport c4 = check_circuit_axioms(CircuitSystem{{4, 2}, {{4, 1}, {2, 2}}});
    CHECK(failed(c4) == std::vector<std::string>{"(C4)"});
    const CheckReport dual = check_circuit_axioms(
        CircuitSystem{{2, 2, 2}, {{2, 1, 0}, {0, 2, 2}, {1, 1, 2}, {1, 2, 1}}});
    CHECK(failed(dual) == std::vector<std::string>{"(C3)", "(C4)"});
    CHECK(failed(check_circuit_axioms(CircuitSystem{{1, 1}, {{1, 0}}})) ==
          std::vector<std::string>{"(C1)"});
    CHECK(failed(check_circuit_axioms(CircuitSystem{{1, 1, 1}, {{1, 1, 0}, {1, 1, 1}}})).front() ==
          "(C2)");
    CHECK(throws_code([] { check_circuit_axioms(CircuitSystem{{3, 2}, {{2, 2}}}); },
                      ErrorCode::kBoundsMismatch));
    CHECK(throws_code([] { check_circuit_axioms(CircuitSystem{{1, 2}, {{2, 2}}}); },
                      ErrorCode::kBoundsMismatch));
    for (const auto& rho : oracle::generator_instances(100, 55)) {
      CHECK(check_circuit_axioms(circuits(rho)).holds());
    }
  }

  TEST_CASE("polymatroid from circuits") {
    const Polymatroid fig2 = polymatroid_from_circuits(kFig2Circuits);
    CHECK(fig2(0b110) == Rational(2));
    CHECK(fig2(0b011) == Rational(3));
    CHECK(fig2(0b111) == Rational(3));
    CHECK(fig2 == oracle::fig2_table());
    const Polymatroid free = polymatroid_from_circuits(CircuitSystem{{2, 1}, {}});
    CHECK(free(0b11) == Rational(3));
    CHECK(polymatroid_from_circuits(CircuitSystem{{1, 1, 1}, {{1, 1, 1}}}) ==
          uniform_matroid(2, 3).rank_function());
    CHECK(throws_code([] { polymatroid_from_circuits(CircuitSystem{{4, 2}, {{4, 1}, {2, 2}}}); },
                      ErrorCode::kAxiomsFailed));
    for (const auto& rho : oracle::generator_instances(100, 57)) {
      const CircuitSystem s = circuits(rho);
      CHECK(polymatroid_from_circuits(s) == rho);
      CHECK(circuits(polymatroid_from_circuits(s)) == s);
    }
  }

  TEST_CASE("element diagnosis") {
    const Polymatroid rho = oracle::fig2_table();
    const ElementDiagnosis d = diagnose_element(rho, 0, 0b111);
    CHECK(d.strict);
    REQUIRE(d.witness.has_value());
    CHECK(*d.witness == IntVector{2, 0, 2});
    CHECK(d.block_in_circuit == true);
    CHECK(d.max_circuit_entry == 2);
    CHECK(d.consistent);
    const ElementDiagnosis via = diagnose_element(kFig2Circuits, 0, 0b111);
    CHECK(via.strict == d.strict);

    const Polymatroid free = oracle::table(2, [](Subset s) { return 2 * ((s & 1) != 0) + ((s & 2) != 0); });
    const ElementDiagnosis f = diagnose_element(free, 1, 0b11);
    CHECK_FALSE(f.strict);
    CHECK_FALSE(f.witness.has_value());
    CHECK(f.consistent);

    const Polymatroid with_loop = direct_sum(rho, validate(1, {0, 0}));
    CHECK(throws_code([&] { diagnose_element(with_loop, 3, 0b1111); }, ErrorCode::kNotApplicable));
    CHECK(throws_code([&] { diagnose_element(rho, 0, 0b110); }, ErrorCode::kElementNotInSet));

    for (const auto& r : oracle::generator_instances(60, 59)) {
      for (Subset a = 1; a <= r.ground(); ++a) {
        for (int i : elements(a)) {
          if (r.int_rank(singleton(i)) == 0) continue;
          REQUIRE(diagnose_element(r, i, a).consistent);
        }
      }
    }
  }

  TEST_CASE("element rank is the largest circuit entry in that coordinate") {
    for (const auto& rho : oracle::generator_instances(60, 61)) {
      const CircuitSystem s = circuits(rho);
      for (int i = 0; i < rho.size(); ++i) {
        int largest = 0;
        for (const auto& c : s.circuits) largest = std::max(largest, c[i]);
        if (largest > 0) CHECK(largest == rho.int_rank(singleton(i)));
      }
    }
  }

  TEST_CASE("contraction circuits") {
    const CircuitSystem c = contraction_circuits(kFig2Circuits, oracle::fig2_table(), 1);
    CHECK(c.bounds == IntVector{2, 1});
    CHECK(c.circuits == VectorFamily{{2, 1}});
    CHECK(throws_code([&] { contraction_circuits(kFig2Circuits, oracle::fig2_table(), 3); },
                      ErrorCode::kElementOutOfRange));
    const Polymatroid free = oracle::table(2, [](Subset s) { return 2 * ((s & 1) != 0) + ((s & 2) != 0); });
    CHECK(contraction_circuits(circuits(free), free, 0).circuits.empty());
    for (const auto& rho : oracle::generator_instances(100, 63)) {
      const CircuitSystem s = circuits(rho);
      for (int i = 0; i < rho.size(); ++i) {
        CHECK(contraction_circuits(s, rho, i) == circuits(minor(rho, 0, singleton(i))));
      }
    }
  }

  TEST_CASE("contracting a loop drops its coordinate") {
    const Polymatroid rho = direct_sum(validate(1, {0, 0}), oracle::fig2_table());
    const CircuitSystem s = circuits(rho);
    const CircuitSystem c = contraction_circuits(s, rho, 0);
    CHECK(c == kFig2Circuits);
  }

  TEST_CASE("connectivity through circuits") {
    CHECK(connected_via_circuits(kFig2Circuits));
    CHECK_FALSE(connected_via_circuits(CircuitSystem{{1, 1}, {}}));
    CHECK(connected_via_circuits(CircuitSystem{{1}, {}}));
    CHECK(throws_code([] { connected_via_circuits(CircuitSystem{}); }, ErrorCode::kEmptyGroundSet));
  }

  TEST_CASE("vector enumeration respects the cap") {
    const Polymatroid big = uniform_matroid(20, 20).rank_function();
    CHECK(throws_code([&] { independent_vectors(k_dual(big, 2)); }, ErrorCode::kCapacityExceeded));
  }
}

}  // namespace
}  // namespace polymat
