#pragma once

// Hull operators over finite ground sets.
//
// A hull operator is given as a membership oracle member(x, F) deciding
// x ∈ <F>. Closures are only ever materialized over the finite ground set,
// so oracles for infinite structures (the integers) stay usable.

#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <variant>
#include <vector>

#include "hullcover/element_set.hpp"

namespace hullcover {

class GroundSet {
 public:
  GroundSet() = default;
  explicit GroundSet(std::vector<std::string> labels);

  std::size_t size() const { return labels_.size(); }
  const std::string& label(Element x) const;
  const std::vector<std::string>& labels() const { return labels_; }
  ElementSet all() const;

  // Throws InputError for identifiers outside 0..size()-1.
  void validate(std::span<const Element> elements) const;

 private:
  std::vector<std::string> labels_;
};

enum class OracleKind {
  VectorFp,
  VectorQ,
  Graphic,
  Abelian,
  IntegerSubgroup,
  IntegerLinear,
  Custom,
};

std::string to_string(OracleKind kind);

struct HullOracle {
  using Membership = std::function<bool(Element, std::span<const Element>)>;

  Membership member;
  OracleKind kind = OracleKind::Custom;
  // Set for instances known (or verified) to satisfy idempotence and
  // exchange; certificate failures on them are internal errors.
  bool matroid = false;
};

class MatroidInstance {
 public:
  MatroidInstance(GroundSet ground, HullOracle oracle);

  const GroundSet& ground() const { return ground_; }
  const HullOracle& oracle() const { return oracle_; }
  const ElementSet& loops() const { return loops_; }
  std::size_t size() const { return ground_.size(); }
  bool is_matroid() const { return oracle_.matroid; }
  OracleKind kind() const { return oracle_.kind; }

  // Unvalidated oracle call; F must be sorted.
  bool member(Element x, std::span<const Element> f) const { return oracle_.member(x, f); }

 private:
  GroundSet ground_;
  HullOracle oracle_;
  ElementSet loops_;
};

ElementSet closure(const MatroidInstance& m, std::span<const Element> f);

bool is_independent(const MatroidInstance& m, std::span<const Element> a);

// A minimal dependent subset of a, or nullopt when a is independent.
// Elements are dropped in canonical order while the remainder stays
// dependent, so the result is deterministic.
std::optional<ElementSet> find_circuit_within(const MatroidInstance& m,
                                              std::span<const Element> a);

// Scans the ground set in the given order (canonical when empty) and keeps
// every element outside the closure of the elements kept so far.
std::vector<Element> greedy_basis(const MatroidInstance& m,
                                  std::span<const Element> order = {});

// ---- axiom checks ----------------------------------------------------------

struct ExhaustiveBudget {
  std::size_t max_subset_size = 3;
};

struct SampledBudget {
  std::uint64_t seed = 0;
  std::uint64_t count = 10000;
  std::size_t max_subset_size = 3;
};

using Budget = std::variant<ExhaustiveBudget, SampledBudget>;

std::string describe(const Budget& budget);

// Exhaustive sweeps are refused above this many oracle evaluations.
inline constexpr std::uint64_t kExhaustiveEvaluationLimit = 200'000'000;

enum class Verdict { HoldsOnBudget, Violated };

struct AxiomWitness {
  ElementSet a;
  std::optional<Element> x;
  std::optional<Element> y;
  bool operator==(const AxiomWitness&) const = default;
};

struct AxiomReport {
  std::string axiom;
  Verdict verdict = Verdict::HoldsOnBudget;
  std::optional<AxiomWitness> witness;
  std::string budget;
  std::uint64_t tuples_checked = 0;
  bool holds() const { return verdict == Verdict::HoldsOnBudget; }
};

// Extensivity (A ⊆ <A>) and monotonicity along single-element extensions:
// x ∈ <A> implies x ∈ <A ∪ {y}>. Witness (A, x) or (A, x, y).
AxiomReport check_hull_axioms(const MatroidInstance& m, const Budget& budget);

// <<A>> = <A>. Witness (A, x) with x ∈ <<A>> \ <A>.
AxiomReport check_idempotent(const MatroidInstance& m, const Budget& budget);

// For x, y outside <A>: x ∈ <A ∪ {y}> iff y ∈ <A ∪ {x}>. The witness is
// oriented so that x ∈ <A ∪ {y}> while y ∉ <A ∪ {x}>.
AxiomReport check_exchange(const MatroidInstance& m, const Budget& budget);

// Re-evaluates a witness against the oracle; true iff it still violates.
bool reproduces(const MatroidInstance& m, const AxiomReport& report);

}  // namespace hullcover
