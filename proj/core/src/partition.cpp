#include "hullcover/partition.hpp"

#include <algorithm>

#include "hullcover/errors.hpp"

namespace hullcover {

std::vector<std::size_t> LayerDecomposition::layer_sizes() const {
  std::vector<std::size_t> sizes;
  for (const auto& layer : layers) sizes.push_back(layer.size());
  return sizes;
}

std::size_t LayerDecomposition::max_layer_size() const {
  std::size_t best = 0;
  for (const auto& layer : layers) best = std::max(best, layer.size());
  return best;
}

LayerDecomposition layer_decomposition(const MatroidInstance& m,
                                       std::optional<std::vector<Element>> basis) {
  LayerDecomposition out;
  out.loops = m.loops();
  if (basis) {
    m.ground().validate(*basis);
    if (make_set(*basis).size() != basis->size())
      throw InputError("basis lists an element twice");
    if (auto circuit = find_circuit_within(m, *basis))
      throw InputError("supplied basis is dependent; circuit " + to_string(*circuit));
    out.basis = std::move(*basis);
  } else {
    out.basis = greedy_basis(m);
  }

  ElementSet prefix;
  ElementSet previous = out.loops;
  for (Element a : out.basis) {
    prefix = with(prefix, a);
    ElementSet current = closure(m, prefix);
    out.layers.push_back(set_difference(current, previous));
    previous = std::move(current);
  }
  if (previous.size() != m.size())
    throw InputError("supplied basis does not span the ground set; " +
                     std::to_string(m.size() - previous.size()) + " elements lie outside its hull");
  return out;
}

bool IndependentPartition::all_certified() const {
  return std::all_of(certificates.begin(), certificates.end(),
                     [](const ClassCertificate& c) { return c.independent; });
}

IndependentPartition theorem1_partition(const MatroidInstance& m,
                                        std::optional<std::vector<Element>> basis) {
  IndependentPartition p;
  p.layers = layer_decomposition(m, std::move(basis));
  p.class_of.assign(m.size(), kUnassigned);
  p.classes.resize(p.layers.max_layer_size());
  // Layers are sorted, so position within the layer is the canonical
  // injection into class numbers.
  for (const ElementSet& layer : p.layers.layers)
    for (std::size_t i = 0; i < layer.size(); ++i) {
      p.classes[i].push_back(layer[i]);
      p.class_of[layer[i]] = i;
    }
  for (auto& cls : p.classes) cls = make_set(std::move(cls));

  for (std::size_t i = 0; i < p.classes.size(); ++i) {
    ClassCertificate cert;
    cert.circuit = find_circuit_within(m, p.classes[i]);
    cert.independent = !cert.circuit.has_value();
    if (!cert.independent && m.is_matroid())
      throw InternalInconsistency("class " + std::to_string(i) + " of a " + to_string(m.kind()) +
                                  " matroid contains circuit " + to_string(*cert.circuit));
    p.certificates.push_back(std::move(cert));
  }
  return p;
}

PartitionReport verify_partition(const MatroidInstance& m, const std::vector<ElementSet>& classes) {
  PartitionReport r;
  std::vector<int> seen(m.size(), 0);
  r.disjoint = true;
  for (const auto& cls : classes) {
    m.ground().validate(cls);
    for (Element x : make_set(cls))
      if (seen[x]++) r.disjoint = false;
  }
  r.covers = true;
  for (Element x = 0; x < m.size(); ++x) {
    const bool loop = contains(m.loops(), x);
    if (loop == static_cast<bool>(seen[x])) r.covers = false;
  }
  r.classes_independent = true;
  for (std::size_t i = 0; i < classes.size(); ++i) {
    if (auto circuit = find_circuit_within(m, classes[i])) {
      r.classes_independent = false;
      r.failing_class = i;
      r.circuit = std::move(circuit);
      break;
    }
  }
  r.ok = r.disjoint && r.covers && r.classes_independent;
  if (!r.disjoint) r.message = "classes overlap";
  else if (!r.covers) r.message = "classes do not cover exactly the non-loop elements";
  else if (!r.classes_independent)
    r.message = "class " + std::to_string(*r.failing_class) + " contains circuit " +
                to_string(*r.circuit);
  else r.message = "ok";
  return r;
}

PartitionReport verify_partition(const MatroidInstance& m, const IndependentPartition& p) {
  return verify_partition(m, p.classes);
}

}  // namespace hullcover
