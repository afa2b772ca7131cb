#pragma once

// Monochrome structures forced by pigeonhole arguments, and verifiers for
// edge colorings of complete graphs.

#include <cstdint>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "hullcover/element_set.hpp"
#include "hullcover/group.hpp"

namespace hullcover {

enum class ColoringFormula { Constant, Mod, SeededUniform };

std::string to_string(ColoringFormula f);
ColoringFormula parse_coloring_formula(const std::string& name);

struct ColoringGenerator {
  ColoringFormula formula = ColoringFormula::Constant;
  std::uint64_t seed = 0;
};

// Deterministic 64-bit mix used by the seeded-uniform formula.
std::uint64_t splitmix64(std::uint64_t x);

// χ : X × Y -> {0..colors-1}. Explicit tables are indexed [x][y]; the
// generator formulas are constant (0), mod ((x + y) mod c) and
// seeded-uniform (hash of seed, x, y).
class ProductColoring {
 public:
  ProductColoring(std::uint32_t x_size, std::uint32_t y_size, std::uint32_t colors,
                  ColoringGenerator generator);
  ProductColoring(std::uint32_t colors, std::vector<std::vector<std::uint32_t>> table);

  std::uint32_t x_size() const { return x_size_; }
  std::uint32_t y_size() const { return y_size_; }
  std::uint32_t colors() const { return colors_; }
  const std::optional<ColoringGenerator>& generator() const { return generator_; }
  std::uint32_t color(std::uint32_t x, std::uint32_t y) const;

 private:
  std::uint32_t x_size_ = 0, y_size_ = 0, colors_ = 1;
  std::optional<ColoringGenerator> generator_;
  std::vector<std::uint32_t> table_;  // [x * y_size + y]
};

struct Rectangle {
  ElementSet a;  // subset of X
  ElementSet z;  // subset of Y
  std::uint32_t color = 0;
};

// Smallest |X| for which every row holds λ cells of one color.
std::uint64_t rectangle_row_threshold(std::uint32_t colors, std::uint32_t lambda);
// Guaranteed fiber size ⌈|Y| / (C(|X|, λ)·c)⌉.
std::uint64_t rectangle_fiber_bound(std::uint32_t x_size, std::uint32_t y_size,
                                    std::uint32_t colors, std::uint32_t lambda);

// Every fiber {y : (A(y), t(y)) = key}, where A(y) is the least λ-subset of
// X monochrome in row y and t(y) its color. Sorted by fiber size descending,
// ties by (A, color) ascending. Throws PremiseError below the row threshold.
std::vector<Rectangle> rectangle_fibers(const ProductColoring& c, std::uint32_t lambda);

// The first entry of rectangle_fibers.
Rectangle monochrome_rectangle(const ProductColoring& c, std::uint32_t lambda);

bool verify_rectangle(const ProductColoring& c, const Rectangle& r);

// ---- dependent monochrome quadruples in groups -----------------------------

class GroupColoring {
 public:
  GroupColoring(std::uint32_t colors, ColoringGenerator generator);
  // table[g] for every element; the identity's entry is ignored.
  GroupColoring(std::uint32_t colors, std::vector<std::uint32_t> table);

  std::uint32_t colors() const { return colors_; }
  const std::optional<ColoringGenerator>& generator() const { return generator_; }
  const std::vector<std::uint32_t>& table() const { return table_; }
  std::uint32_t color(Element g) const;

 private:
  std::uint32_t colors_ = 1;
  std::optional<ColoringGenerator> generator_;
  std::vector<std::uint32_t> table_;
};

struct QuadCertificate {
  Element a = 0, b = 0, x = 0, y = 0;
  // ax, bx, ay, by
  std::vector<Element> elements;
  std::uint32_t color = 0;
  bool relation_holds = false;  // ax = ay·(by)^{-1}·bx
};

// Required |G \ {e}| for a c-coloring: with |X| = c + 1 we need room for X,
// for X^{-1}, and for a Y of size 3·C(c+1, 2)·c + 1 so that some fiber has
// at least 4 elements.
std::uint64_t quad_threshold(std::uint32_t colors);

// Throws PremiseError when the group is below quad_threshold.
QuadCertificate theorem2_quad(const FiniteGroup& g, const GroupColoring& chi);

bool verify_quad(const FiniteGroup& g, const GroupColoring& chi, const QuadCertificate& q);

// ---- edge colorings of complete graphs -------------------------------------

class EdgeColoring {
 public:
  EdgeColoring(std::uint32_t vertices, std::uint32_t colors, std::vector<std::uint32_t> pair_colors);

  std::uint32_t vertices() const { return n_; }
  std::uint32_t colors() const { return colors_; }
  std::uint32_t color(std::uint32_t u, std::uint32_t v) const;
  std::size_t pair_index(std::uint32_t u, std::uint32_t v) const;
  const std::vector<std::uint32_t>& pair_colors() const { return pairs_; }
  std::vector<std::uint32_t> colors_used() const;

 private:
  std::uint32_t n_ = 0;
  std::uint32_t colors_ = 0;
  std::vector<std::uint32_t> pairs_;  // lexicographic (u, v), u < v
};

inline constexpr std::uint32_t kPrefixColoringLimit = 12;

// Vertices are the binary strings of length k, read as integers with the
// first character most significant; an edge gets the position of the first
// character where its endpoints differ.
EdgeColoring prefix_coloring(std::uint32_t k, std::uint32_t limit = kPrefixColoringLimit);

struct CycleReport {
  bool ok = true;
  std::optional<std::uint32_t> color;
  std::vector<std::uint32_t> cycle;  // closed walk without the repeated start
};

// Each color class must be bipartite; reports an odd monochrome cycle.
CycleReport verify_no_monochrome_odd_cycle(const EdgeColoring& e);

// Each color class must be a forest; reports a monochrome cycle.
CycleReport verify_forest_classes(const EdgeColoring& e);

// Rectangle over the vertex halves X = first ⌈n/2⌉ vertices, Y = the rest;
// a and z hold vertex numbers.
Rectangle monochrome_bipartite(const EdgeColoring& e, std::uint32_t lambda);

// Alternates a_0 z_0 a_1 z_1 ... through the rectangle; 2 <= m <= min(|A|, |Z|).
std::vector<std::uint32_t> even_cycle(const Rectangle& r, std::uint32_t m);

// A 4-cycle u w1 v w2 inside one color class, searched in canonical order.
std::optional<std::vector<std::uint32_t>> find_monochrome_four_cycle(const EdgeColoring& e,
                                                                     std::uint32_t color);

// Distinct vertices, at least 3, every consecutive edge (and the closing
// one) of the same color. Returns that color.
std::optional<std::uint32_t> monochrome_cycle_color(const EdgeColoring& e,
                                                    const std::vector<std::uint32_t>& cycle);

}  // namespace hullcover
