#include <random>

#include "doctest.h"
#include "hullcover/errors.hpp"
#include "hullcover/hull.hpp"
#include "hullcover/zoo.hpp"
#include "oracles.hpp"
#include "test_util.hpp"

using namespace hullcover;
using testing::id;
using testing::ids;

namespace {

MatroidInstance f2_plane() {
  VectorMatroidSpec spec;
  spec.prime = 2;
  spec.full_space_dimension = 2;
  return build_vector_matroid(spec);
}

MatroidInstance complete_graph(std::uint32_t n) {
  GraphSpec g;
  g.vertices = n;
  g.complete = true;
  return build_graphic_matroid(g);
}

// Ground {0,1,2}: <{1}> = {0,1} but <{0}> = {0}, any two of {0,1} span all.
MatroidInstance lopsided(bool flagged) {
  HullOracle o;
  o.member = [](Element x, std::span<const Element> f) {
    if (contains(f, x)) return true;
    if (contains(f, 0) && contains(f, 1)) return true;
    return x == 0 && contains(f, 1);
  };
  o.matroid = flagged;
  return MatroidInstance(GroundSet({"a", "b", "c"}), o);
}

std::vector<MatroidInstance> matroid_suite() {
  std::vector<MatroidInstance> out;
  out.push_back(f2_plane());
  VectorMatroidSpec f3;
  f3.prime = 3;
  f3.full_space_dimension = 2;
  out.push_back(build_vector_matroid(f3));
  out.push_back(complete_graph(4));
  out.push_back(build_abelian_linear_matroid(FiniteAbelianGroup({2, 2, 2})));
  out.push_back(build_abelian_linear_matroid(FiniteAbelianGroup({9})));
  out.push_back(build_integer_hull({4, IntegerHullVariant::Linear}));
  return out;
}

}  // namespace

TEST_CASE("closure materializes the hull over the ground set") {
  const auto m = f2_plane();
  CHECK(closure(m, {}) == ids(m, {"(0,0)"}));
  CHECK(closure(m, ids(m, {"(1,0)"})) == ids(m, {"(0,0)", "(1,0)"}));

  const auto k3 = complete_graph(3);
  const ElementSet f = ids(k3, {"e0-1", "e1-2"});
  // Connectivity oracle: every pair of K_3 is joined by the path 0-1-2.
  ElementSet expected;
  for (auto [u, v] : complete_graph_edges(3))
    if (oracle::connected_in(3, {{0, 1}, {1, 2}}, u, v))
      expected.push_back(id(k3, "e" + std::to_string(u) + "-" + std::to_string(v)));
  CHECK(expected.size() == 3);
  CHECK(closure(k3, f) == expected);

  const Element bad[] = {7};
  CHECK_THROWS_AS(closure(m, bad), InputError);
}

TEST_CASE("is_independent follows the definition") {
  const auto m = f2_plane();
  CHECK(is_independent(m, {}));
  CHECK(is_independent(m, ids(m, {"(0,1)", "(1,0)"})));
  CHECK_FALSE(is_independent(m, ids(m, {"(0,0)"})));

  const auto sub = build_integer_hull({3, IntegerHullVariant::Subgroup});
  const auto lin = build_integer_hull({3, IntegerHullVariant::Linear});
  CHECK(is_independent(sub, ids(sub, {"2", "3"})));
  CHECK_FALSE(is_independent(lin, ids(lin, {"2", "3"})));

  const Element bad[] = {0, 99};
  CHECK_THROWS_AS(is_independent(m, bad), InputError);
}

TEST_CASE("find_circuit_within returns minimal dependent subsets") {
  const auto k3 = complete_graph(3);
  CHECK(find_circuit_within(k3, k3.ground().all()) == k3.ground().all());

  const auto k4 = complete_graph(4);
  CHECK_FALSE(find_circuit_within(k4, ids(k4, {"e0-1", "e1-2", "e2-3"})).has_value());

  const auto m = f2_plane();
  const auto triple = ids(m, {"(0,1)", "(1,0)", "(1,1)"});
  // Each pair of distinct nonzero vectors of F_2^2 is independent.
  for (Element drop : triple) CHECK(is_independent(m, without(triple, drop)));
  CHECK(find_circuit_within(m, triple) == triple);

  SUBCASE("property: dependent iff a circuit exists; circuits are minimal") {
    for (const auto& inst : matroid_suite()) {
      for_each_small_subset(inst.size(), std::min<std::size_t>(inst.size(), 4),
                            [&](const ElementSet& a) {
                              const auto c = find_circuit_within(inst, a);
                              REQUIRE(is_independent(inst, a) == !c.has_value());
                              if (c) {
                                CHECK(is_subset(*c, a));
                                CHECK_FALSE(is_independent(inst, *c));
                                for (Element x : *c) {
                                  CHECK(is_independent(inst, without(*c, x)));
                                  CHECK(inst.member(x, without(*c, x)));
                                }
                              }
                              return true;
                            });
    }
  }
}

TEST_CASE("greedy_basis is maximal and spans on matroids") {
  CHECK(greedy_basis(f2_plane()).size() == 2);
  for (std::uint32_t n = 2; n <= 6; ++n) CHECK(greedy_basis(complete_graph(n)).size() == n - 1);

  // <1> is all of Z_4, so [{1}] is too.
  const FiniteAbelianGroup z4({4});
  const auto a = build_abelian_linear_matroid(z4);
  const auto basis = greedy_basis(a);
  CHECK(basis == std::vector<Element>{1});
  CHECK(linear_hull(z4, std::vector<Element>{1}).size() == 4);

  for (const auto& inst : matroid_suite()) {
    const auto b = greedy_basis(inst);
    const ElementSet bs = make_set(b);
    CHECK(is_independent(inst, bs));
    for (Element x = 0; x < inst.size(); ++x) CHECK(inst.member(x, bs));
    CHECK(closure(inst, bs).size() == inst.size());
  }

  SUBCASE("custom orders") {
    const auto k4 = complete_graph(4);
    std::vector<Element> order = {5, 4, 3, 2, 1, 0};
    const auto b = greedy_basis(k4, order);
    CHECK(b == std::vector<Element>{5, 4, 2});
    std::vector<Element> short_order = {0, 1};
    CHECK_THROWS_AS(greedy_basis(k4, short_order), InputError);
    std::vector<Element> repeated = {0, 0, 1, 2, 3, 4};
    CHECK_THROWS_AS(greedy_basis(k4, repeated), InputError);
  }
}

TEST_CASE("axiom checks on matroids hold exhaustively") {
  const ExhaustiveBudget budget{2};
  const auto m = f2_plane();
  CHECK(check_exchange(m, budget).holds());
  CHECK(check_hull_axioms(m, ExhaustiveBudget{3}).holds());

  const auto k4 = complete_graph(4);
  const auto idem = check_idempotent(k4, ExhaustiveBudget{3});
  CHECK(idem.holds());
  // 1 + 6 + 15 + 20 subsets of size <= 3.
  CHECK(idem.tuples_checked == 42);

  for (const auto& inst : matroid_suite()) {
    CHECK(check_hull_axioms(inst, ExhaustiveBudget{3}).holds());
    CHECK(check_idempotent(inst, ExhaustiveBudget{3}).holds());
    CHECK(check_exchange(inst, ExhaustiveBudget{3}).holds());
  }
}

TEST_CASE("the integer subgroup hull violates exchange at (∅, 2, 1)") {
  for (std::int64_t window : {3, 5, 10}) {
    const auto m = build_integer_hull({window, IntegerHullVariant::Subgroup});
    const auto r = check_exchange(m, ExhaustiveBudget{3});
    REQUIRE(r.verdict == Verdict::Violated);
    REQUIRE(r.witness);
    CHECK(r.witness->a.empty());
    CHECK(integer_value(*r.witness->x) == 2);
    CHECK(integer_value(*r.witness->y) == 1);
    CHECK(reproduces(m, r));
    // The witness as stated: 2 ∈ <1> but 1 ∉ <2>.
    const Element one[] = {integer_element(1)}, two[] = {integer_element(2)};
    CHECK(m.member(integer_element(2), one));
    CHECK_FALSE(m.member(integer_element(1), two));
    // Subgroup hulls are idempotent and monotone all the same.
    CHECK(check_idempotent(m, ExhaustiveBudget{2}).holds());
    CHECK(check_hull_axioms(m, ExhaustiveBudget{2}).holds());
  }
}

TEST_CASE("violations of the other axioms come with reproducible witnesses") {
  SUBCASE("not extensive") {
    HullOracle o;
    o.member = [](Element x, std::span<const Element>) { return x == 0; };
    const MatroidInstance m(GroundSet({"z", "p", "q"}), o);
    const auto r = check_hull_axioms(m, ExhaustiveBudget{2});
    REQUIRE_FALSE(r.holds());
    CHECK(r.witness->a == ElementSet{1});
    CHECK(r.witness->x == Element{1});
    CHECK(reproduces(m, r));
  }
  SUBCASE("not monotone") {
    HullOracle o;
    o.member = [](Element x, std::span<const Element> f) {
      return contains(f, x) || (x == 2 && f.size() == 1 && f[0] == 0);
    };
    const MatroidInstance m(GroundSet({"a", "b", "c"}), o);
    const auto r = check_hull_axioms(m, ExhaustiveBudget{2});
    REQUIRE_FALSE(r.holds());
    CHECK(r.witness->a == ElementSet{0});
    CHECK(r.witness->x == Element{2});
    CHECK(r.witness->y == Element{1});
    CHECK(reproduces(m, r));
  }
  SUBCASE("not idempotent") {
    // A path closure that only reaches one step: <{0}> = {0,1}, <{0,1}> ∋ 2.
    HullOracle o;
    o.member = [](Element x, std::span<const Element> f) {
      if (contains(f, x)) return true;
      return x > 0 && contains(f, x - 1);
    };
    const MatroidInstance m(GroundSet({"0", "1", "2", "3"}), o);
    const auto r = check_idempotent(m, ExhaustiveBudget{1});
    REQUIRE_FALSE(r.holds());
    CHECK(r.witness->a == ElementSet{0});
    CHECK(r.witness->x == Element{2});
    CHECK(reproduces(m, r));
  }
  SUBCASE("lopsided exchange") {
    const auto m = lopsided(false);
    const auto r = check_exchange(m, ExhaustiveBudget{1});
    REQUIRE_FALSE(r.holds());
    CHECK(r.witness->a.empty());
    CHECK(r.witness->x == Element{0});
    CHECK(r.witness->y == Element{1});
  }
}

TEST_CASE("sampled budgets are deterministic and still find violations") {
  const auto m = build_integer_hull({10, IntegerHullVariant::Subgroup});
  const SampledBudget budget{42, 2000, 3};
  const auto r1 = check_exchange(m, budget);
  const auto r2 = check_exchange(m, budget);
  CHECK(r1.verdict == r2.verdict);
  CHECK(r1.witness == r2.witness);
  CHECK(r1.tuples_checked == r2.tuples_checked);
  REQUIRE_FALSE(r1.holds());
  CHECK(reproduces(m, r1));
  CHECK(describe(budget) == "sampled seed=42 count=2000 |A|<=3");

  const auto f2 = f2_plane();
  CHECK(check_exchange(f2, SampledBudget{7, 500, 2}).holds());
}

TEST_CASE("oversized exhaustive budgets are refused with an estimate") {
  VectorMatroidSpec spec;
  spec.prime = 3;
  spec.full_space_dimension = 6;
  const auto m = build_vector_matroid(spec);
  try {
    check_exchange(m, ExhaustiveBudget{3});
    FAIL("expected refusal");
  } catch (const InputError& e) {
    CHECK(std::string(e.what()).find("oracle evaluations") != std::string::npos);
  }
  CHECK_NOTHROW(check_exchange(m, SampledBudget{1, 20, 3}));
}

TEST_CASE("hull invariants: extensive and monotone on random pairs") {
  std::mt19937_64 rng(2024);
  for (const auto& inst : matroid_suite()) {
    const std::size_t n = inst.size();
    for (int trial = 0; trial < 50; ++trial) {
      ElementSet f, g;
      for (Element x = 0; x < n; ++x) {
        const bool in_f = rng() % 4 == 0;
        if (in_f) f.push_back(x);
        if (in_f || rng() % 3 == 0) g.push_back(x);
      }
      const auto cf = closure(inst, f);
      CHECK(is_subset(set_union(f, inst.loops()), cf));
      CHECK(is_subset(cf, closure(inst, g)));
    }
  }
}
