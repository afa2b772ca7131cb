#pragma once

// Finite abelian groups presented as direct sums Z_{n_1} ⊕ ... ⊕ Z_{n_k}.
//
// Elements are residue tuples; each tuple also has a canonical index
// (mixed radix, last coordinate fastest) which doubles as its identifier
// when the group is used as a matroid ground set.

#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "hullcover/element_set.hpp"

namespace hullcover {

using Residues = std::vector<std::uint64_t>;

class FiniteAbelianGroup {
 public:
  // Throws InputError unless every order is at least 2 and the group has at
  // most kMaxOrder elements.
  explicit FiniteAbelianGroup(std::vector<std::uint64_t> orders);

  static constexpr std::uint64_t kMaxOrder = 1u << 20;

  const std::vector<std::uint64_t>& orders() const { return orders_; }
  std::uint64_t order() const { return order_; }
  std::uint64_t exponent() const { return exponent_; }
  std::size_t rank() const { return orders_.size(); }

  Element zero() const { return 0; }
  Element index_of(const Residues& tuple) const;
  Residues tuple_of(Element x) const;
  std::string label(Element x) const;
  void validate(std::span<const Element> elements) const;

  Element add(Element x, Element y) const;
  Element negate(Element x) const;
  Element subtract(Element x, Element y) const { return add(x, negate(y)); }
  Element scale(std::uint64_t n, Element x) const;
  std::uint64_t order_of(Element x) const;

  bool operator==(const FiniteAbelianGroup&) const = default;

 private:
  std::vector<std::uint64_t> orders_;
  std::uint64_t order_ = 1;
  std::uint64_t exponent_ = 1;
};

// Every group of order <= max_order written in invariant-factor form
// n_1 | n_2 | ... | n_k, ordered by group order then factor list.
std::vector<FiniteAbelianGroup> invariant_factor_groups(std::uint64_t max_order);

// The subgroup generated by b; <∅> = {0}.
ElementSet subgroup_closure(const FiniteAbelianGroup& g, std::span<const Element> b);

// [B] = {0} ∪ {x : n·x ∈ <B> \ {0} for some n ≥ 1}. Scanning n up to the
// group exponent is complete since n·x only depends on n mod order(x).
ElementSet linear_hull(const FiniteAbelianGroup& g, std::span<const Element> b);

// G[n] = {x : n·x = 0}.
ElementSet n_torsion(const FiniteAbelianGroup& g, std::uint64_t n);

struct PrimaryComponent {
  std::uint64_t prime = 0;
  ElementSet elements;
};

struct TorsionReport {
  std::vector<PrimaryComponent> components;
  bool sizes_multiply = false;
  bool trivial_intersections = false;
  bool direct_sum = false;  // every element has exactly one decomposition
};

TorsionReport primary_decomposition(const FiniteAbelianGroup& g);

// Direct-definition path is limited to this many elements.
inline constexpr std::size_t kDirectIndependenceLimit = 6;

// λ_1 a_1 + ... + λ_n a_n = 0 forces every λ_i a_i = 0. Sets containing 0
// are dependent. Uses the coefficient scan for |a| <= 6, the hull
// characterization beyond that.
bool is_linearly_independent(const FiniteAbelianGroup& g, std::span<const Element> a);

// Coefficient scan with 0 <= λ_i < order(a_i). Throws InputError above
// kDirectIndependenceLimit elements.
bool is_linearly_independent_direct(const FiniteAbelianGroup& g, std::span<const Element> a);

// a ∉ [A \ {a}] for every a.
bool is_linearly_independent_by_hull(const FiniteAbelianGroup& g, std::span<const Element> a);

// Witnesses that {a+x, a+y} is linearly dependent when a lies outside
// G[p^n] and x != y lie inside it: p^n(a+x) = p^n(a+y) = p^n·a != 0.
struct CosetPairCertificate {
  std::uint64_t prime = 0;
  std::uint64_t power = 0;      // n
  std::uint64_t multiplier = 0; // p^n
  Element a = 0, x = 0, y = 0;
  Element first = 0;   // a + x
  Element second = 0;  // a + y
  Element image = 0;   // p^n·a
  bool valid = false;
};

CosetPairCertificate dependent_coset_pair(const FiniteAbelianGroup& g, std::uint64_t p,
                                          std::uint64_t n, Element a, Element x, Element y);

// True when [·] is known to be a matroid on g: g = G[p] (then [B] = <B>) or
// g is a cyclic p-group (then [B] = G for every B with <B> != {0}). Other
// groups, Z_6 and Z_2 ⊕ Z_4 among them, have [[B]] != [B] for some B.
bool linear_hull_is_matroid(const FiniteAbelianGroup& g);

bool is_prime(std::uint64_t n);
std::vector<std::uint64_t> prime_divisors(std::uint64_t n);

}  // namespace hullcover
