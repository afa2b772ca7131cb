#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "hullcover/abelian.hpp"

namespace hullcover {

// A finite group given by its Cayley table. Elements are 0..order-1 in
// canonical order; operations are table lookups.
class FiniteGroup {
 public:
  // Validates closure, identity, inverses and associativity. Explicit
  // tables are limited to kMaxTableOrder elements.
  FiniteGroup(std::vector<std::vector<std::uint32_t>> table, std::vector<std::string> labels = {});

  static FiniteGroup from_abelian(const FiniteAbelianGroup& g);
  static FiniteGroup cyclic(std::uint32_t n);

  static constexpr std::uint32_t kMaxOrder = 4096;
  static constexpr std::uint32_t kMaxTableOrder = 256;

  std::uint32_t order() const { return order_; }
  Element identity() const { return identity_; }
  Element multiply(Element a, Element b) const { return table_[a * order_ + b]; }
  Element inverse(Element a) const { return inverse_[a]; }
  const std::string& label(Element a) const { return labels_[a]; }
  bool abelian() const { return abelian_; }
  void validate(Element a) const;

  // The subgroup generated by gens.
  ElementSet generated_subgroup(std::span<const Element> gens) const;

 private:
  FiniteGroup(std::vector<std::vector<std::uint32_t>> table, std::vector<std::string> labels,
              bool check_associativity);

  std::uint32_t order_ = 0;
  Element identity_ = 0;
  bool abelian_ = true;
  std::vector<Element> table_;
  std::vector<Element> inverse_;
  std::vector<std::string> labels_;
};

}  // namespace hullcover
