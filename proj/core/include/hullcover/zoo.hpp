#pragma once

// Concrete hull operators: vector matroids over F_p and Q, graphic
// matroids, the linear hull [·] of a finite abelian group, and the subgroup
// and linear hulls on a window of the integers.

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include <gmpxx.h>

#include "hullcover/abelian.hpp"
#include "hullcover/hull.hpp"

namespace hullcover {

struct VectorMatroidSpec {
  // Prime modulus; nullopt selects exact rational arithmetic.
  std::optional<std::uint64_t> prime;
  // Explicit ground vectors. Repeats are allowed and stay distinct elements.
  std::vector<std::vector<mpq_class>> vectors;
  // F_p only: use all p^d vectors of F_p^d in lexicographic order instead.
  std::optional<std::size_t> full_space_dimension;
};

inline constexpr std::uint64_t kMaxPrime = (1ull << 31) - 1;
inline constexpr std::uint64_t kMaxFullSpace = 1u << 16;

MatroidInstance build_vector_matroid(const VectorMatroidSpec& spec);

using Edge = std::pair<std::uint32_t, std::uint32_t>;

struct GraphSpec {
  std::uint32_t vertices = 0;
  std::vector<Edge> edges;
  bool complete = false;
};

// Ground order of the edges: the given list (endpoints normalized u < v), or
// lexicographic (u, v) for complete graphs.
std::vector<Edge> graph_edges(const GraphSpec& spec);
std::vector<Edge> complete_graph_edges(std::uint32_t n);

MatroidInstance build_graphic_matroid(const GraphSpec& spec);

MatroidInstance build_abelian_linear_matroid(const FiniteAbelianGroup& g);

enum class IntegerHullVariant { Subgroup, Linear };

struct IntegerHullSpec {
  std::int64_t window = 3;
  IntegerHullVariant variant = IntegerHullVariant::Subgroup;
};

// The window's ground order is 0, 1, -1, 2, -2, ..., N, -N.
std::int64_t integer_value(Element x);
Element integer_element(std::int64_t value);

MatroidInstance build_integer_hull(const IntegerHullSpec& spec);

}  // namespace hullcover
