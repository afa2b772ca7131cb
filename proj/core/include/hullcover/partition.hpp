#pragma once

// Covering a ground set minus its loops by independent classes.
//
// Fix an ordered basis a_0, ..., a_{m-1} and let A_α = {a_γ : γ < α}. The
// layers X_α = <A_{α+1}> \ <A_α> are pairwise disjoint and cover the ground
// set minus <∅>. Numbering the elements of each layer 0, 1, 2, ... and
// collecting equal numbers across layers gives classes that hold at most one
// element per layer; under the exchange property a circuit inside one class
// would force its latest-layer element into the hull of earlier layers,
// which is impossible, so every class is independent.

#include <optional>
#include <string>
#include <vector>

#include "hullcover/hull.hpp"

namespace hullcover {

struct LayerDecomposition {
  std::vector<Element> basis;
  std::vector<ElementSet> layers;
  ElementSet loops;

  std::vector<std::size_t> layer_sizes() const;
  std::size_t max_layer_size() const;
};

// Throws InputError when a supplied basis is dependent (the message names
// its circuit) or fails to span the ground set.
LayerDecomposition layer_decomposition(const MatroidInstance& m,
                                       std::optional<std::vector<Element>> basis = std::nullopt);

struct ClassCertificate {
  bool independent = false;
  std::optional<ElementSet> circuit;
};

inline constexpr std::size_t kUnassigned = static_cast<std::size_t>(-1);

struct IndependentPartition {
  std::vector<ElementSet> classes;
  std::vector<std::size_t> class_of;  // kUnassigned for loops
  std::vector<ClassCertificate> certificates;
  LayerDecomposition layers;

  bool all_certified() const;
};

// Throws InternalInconsistency if a class of a matroid-flagged instance
// fails its certificate; other instances report the failure in-band.
IndependentPartition theorem1_partition(const MatroidInstance& m,
                                        std::optional<std::vector<Element>> basis = std::nullopt);

struct PartitionReport {
  bool ok = false;
  bool disjoint = false;
  bool covers = false;
  bool classes_independent = false;
  std::optional<std::size_t> failing_class;
  std::optional<ElementSet> circuit;
  std::string message;
};

PartitionReport verify_partition(const MatroidInstance& m, const std::vector<ElementSet>& classes);
PartitionReport verify_partition(const MatroidInstance& m, const IndependentPartition& p);

}  // namespace hullcover
