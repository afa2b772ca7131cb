#include <cmath>
#include <set>

#include "doctest.h"
#include "hullcover/errors.hpp"
#include "hullcover/partition.hpp"
#include "hullcover/zoo.hpp"
#include "oracles.hpp"
#include "test_util.hpp"

using namespace hullcover;
using testing::ids;
using testing::labels_of;

namespace {

MatroidInstance full_space(std::uint64_t p, std::size_t d) {
  VectorMatroidSpec spec;
  spec.prime = p;
  spec.full_space_dimension = d;
  return build_vector_matroid(spec);
}

MatroidInstance complete(std::uint32_t n) { return build_graphic_matroid({n, {}, true}); }

MatroidInstance all_loops(std::size_t n) {
  HullOracle o;
  o.member = [](Element, std::span<const Element>) { return true; };
  o.matroid = true;
  return MatroidInstance(GroundSet(std::vector<std::string>(n, "z")), o);
}

// Violates exchange: <{b}> = {a, b} but <{a}> = {a}.
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

void check_structure(const MatroidInstance& m, const IndependentPartition& p) {
  const auto& ld = p.layers;
  // Layer monotonicity and disjointness against materialized closures.
  for (std::size_t alpha = 0; alpha < ld.layers.size(); ++alpha) {
    const ElementSet before = closure(m, make_set({ld.basis.begin(), ld.basis.begin() + alpha}));
    const ElementSet after = closure(m, make_set({ld.basis.begin(), ld.basis.begin() + alpha + 1}));
    REQUIRE(is_subset(before, after));
    REQUIRE(ld.layers[alpha] == set_difference(after, before));
  }
  // Each class has at most one element per layer.
  for (const auto& cls : p.classes)
    for (const auto& layer : ld.layers) {
      std::size_t hits = 0;
      for (Element e : cls) hits += contains(layer, e);
      REQUIRE(hits <= 1);
    }
  ElementSet covered;
  std::size_t total = 0;
  for (const auto& cls : p.classes) {
    covered = set_union(covered, cls);
    total += cls.size();
  }
  REQUIRE(total == covered.size());
  REQUIRE(covered == set_difference(m.ground().all(), m.loops()));
  REQUIRE(p.classes.size() == ld.max_layer_size());
  for (Element e = 0; e < m.size(); ++e) {
    if (contains(m.loops(), e))
      REQUIRE(p.class_of[e] == kUnassigned);
    else
      REQUIRE(contains(p.classes[p.class_of[e]], e));
  }
}

}  // namespace

TEST_CASE("layer decomposition") {
  SUBCASE("F_2 plane") {
    const auto m = full_space(2, 2);
    const auto ld = layer_decomposition(m, ids(m, {"(0,1)", "(1,0)"}));
    REQUIRE(ld.layers.size() == 2);
    CHECK(labels_of(m, ld.layers[0]) == std::vector<std::string>{"(0,1)"});
    CHECK(labels_of(m, ld.layers[1]) == std::vector<std::string>{"(1,0)", "(1,1)"});
    CHECK(ld.loops == ids(m, {"(0,0)"}));
  }
  SUBCASE("K_4 star") {
    const auto m = complete(4);
    const auto ld = layer_decomposition(m, std::vector<Element>{0, 1, 2});
    CHECK(ld.layer_sizes() == std::vector<std::size_t>{1, 2, 3});
    CHECK(ld.max_layer_size() == 3);
  }
  SUBCASE("all loops") {
    const auto m = all_loops(3);
    const auto ld = layer_decomposition(m);
    CHECK(ld.layers.empty());
    CHECK(ld.basis.empty());
    CHECK(ld.loops == m.ground().all());
    CHECK(ld.max_layer_size() == 0);
  }
  SUBCASE("default basis is greedy") {
    const auto m = complete(5);
    CHECK(layer_decomposition(m).basis == greedy_basis(m));
  }
  SUBCASE("bad bases") {
    const auto m = complete(4);
    try {
      layer_decomposition(m, std::vector<Element>{0, 1, 3});
      FAIL("dependent basis accepted");
    } catch (const InputError& e) {
      CHECK(std::string(e.what()).find("{0,1,3}") != std::string::npos);
    }
    CHECK_THROWS_AS(layer_decomposition(m, std::vector<Element>{0, 1}), InputError);
    CHECK_THROWS_AS(layer_decomposition(m, std::vector<Element>{0, 0, 1}), InputError);
    CHECK_THROWS_AS(layer_decomposition(m, std::vector<Element>{0, 1, 9}), InputError);
  }
}

TEST_CASE("partitions into independent classes") {
  SUBCASE("F_2 plane") {
    const auto m = full_space(2, 2);
    const auto p = theorem1_partition(m, ids(m, {"(0,1)", "(1,0)"}));
    REQUIRE(p.classes.size() == 2);
    CHECK(labels_of(m, p.classes[0]) == std::vector<std::string>{"(0,1)", "(1,0)"});
    CHECK(labels_of(m, p.classes[1]) == std::vector<std::string>{"(1,1)"});
    CHECK(p.all_certified());
    CHECK(verify_partition(m, p).ok);
  }
  SUBCASE("K_4 star gives stair forests") {
    const auto m = complete(4);
    const auto p = theorem1_partition(m, std::vector<Element>{0, 1, 2});
    REQUIRE(p.classes.size() == 3);
    CHECK(labels_of(m, p.classes[0]) == std::vector<std::string>{"e0-1", "e0-2", "e0-3"});
    CHECK(labels_of(m, p.classes[1]) == std::vector<std::string>{"e1-2", "e1-3"});
    CHECK(labels_of(m, p.classes[2]) == std::vector<std::string>{"e2-3"});
    const auto edges = complete_graph_edges(4);
    for (const auto& cls : p.classes) {
      oracle::EdgeList sub;
      for (Element e : cls) sub.push_back(edges[e]);
      CHECK(oracle::acyclic(4, sub));
    }
  }
  SUBCASE("single non-loop") {
    VectorMatroidSpec s;
    s.vectors = {{mpq_class(0)}, {mpq_class(3)}, {mpq_class(0)}};
    const auto m = build_vector_matroid(s);
    const auto p = theorem1_partition(m);
    REQUIRE(p.classes.size() == 1);
    CHECK(p.classes[0] == ElementSet{1});
  }
  SUBCASE("a different basis order gives a different valid partition") {
    const auto m = complete(4);
    const auto a = theorem1_partition(m);
    const auto b = theorem1_partition(m, std::vector<Element>{5, 4, 2});
    CHECK(a.classes != b.classes);
    CHECK(verify_partition(m, a).ok);
    CHECK(verify_partition(m, b).ok);
  }
  SUBCASE("non-matroid instances report in-band or throw when flagged") {
    const auto loose = theorem1_partition(lopsided(false));
    CHECK_FALSE(loose.all_certified());
    CHECK_FALSE(verify_partition(lopsided(false), loose).ok);
    CHECK_THROWS_AS(theorem1_partition(lopsided(true)), InternalInconsistency);
  }
}

TEST_CASE("class count is the largest layer of F_p^d") {
  for (std::uint64_t p : {2, 3})
    for (std::size_t d = 1; d <= 3; ++d) {
      CAPTURE(p);
      CAPTURE(d);
      const auto m = full_space(p, d);
      const auto part = theorem1_partition(m);
      const auto expected = static_cast<std::size_t>(std::pow(p, d) - std::pow(p, d - 1));
      CHECK(part.classes.size() == expected);
      check_structure(m, part);
    }
}

TEST_CASE("no class contains a circuit, by brute force") {
  // Rank from enumerated spans and acyclicity from DFS, independent of the oracles.
  for (std::size_t d = 2; d <= 3; ++d) {
    const auto m = full_space(2, d);
    const auto vecs = oracle::all_vectors(2, d);
    const auto part = theorem1_partition(m);
    check_structure(m, part);
    for (const auto& cls : part.classes) {
      std::vector<oracle::Vec> gens;
      for (Element e : cls) gens.push_back(vecs[e]);
      CHECK(oracle::span_by_enumeration(2, d, gens).size() == (std::size_t{1} << cls.size()));
    }
  }
  for (std::uint32_t n = 2; n <= 5; ++n) {
    const auto m = complete(n);
    if (m.size() > 12) break;
    const auto edges = complete_graph_edges(n);
    std::vector<Element> reversed(m.size());
    for (Element i = 0; i < m.size(); ++i) reversed[i] = static_cast<Element>(m.size() - 1 - i);
    const std::vector<std::optional<std::vector<Element>>> bases = {std::nullopt,
                                                                    greedy_basis(m, reversed)};
    for (const auto& basis : bases) {
      const auto part = theorem1_partition(m, basis);
      check_structure(m, part);
      for (const auto& cls : part.classes) {
        oracle::EdgeList sub;
        for (Element e : cls) sub.push_back(edges[e]);
        CHECK(oracle::acyclic(n, sub));
      }
    }
  }
}

TEST_CASE("verify_partition") {
  const auto k3 = complete(3);
  const auto r = verify_partition(k3, std::vector<ElementSet>{{0, 1, 2}});
  CHECK_FALSE(r.ok);
  CHECK(r.disjoint);
  CHECK(r.covers);
  CHECK_FALSE(r.classes_independent);
  CHECK(r.failing_class == std::size_t{0});
  CHECK(r.circuit == ElementSet{0, 1, 2});

  CHECK(verify_partition(all_loops(4), std::vector<ElementSet>{}).ok);

  const auto overlap = verify_partition(k3, std::vector<ElementSet>{{0, 1}, {1, 2}});
  CHECK_FALSE(overlap.ok);
  CHECK_FALSE(overlap.disjoint);
  const auto gap = verify_partition(k3, std::vector<ElementSet>{{0, 1}});
  CHECK_FALSE(gap.ok);
  CHECK_FALSE(gap.covers);

  for (const auto& m : {full_space(3, 2), complete(5),
                        build_abelian_linear_matroid(FiniteAbelianGroup({2, 4})),
                        build_integer_hull({4, IntegerHullVariant::Linear})}) {
    const auto p = theorem1_partition(m);
    CHECK(verify_partition(m, p).ok);
    check_structure(m, p);
  }
}
