#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace hullcover {

// Ground-set elements are identified by their index 0..n-1.
using Element = std::uint32_t;

// A finite set of elements, kept sorted and duplicate free.
using ElementSet = std::vector<Element>;

ElementSet make_set(std::vector<Element> elements);
bool contains(std::span<const Element> set, Element x);
ElementSet set_union(std::span<const Element> a, std::span<const Element> b);
ElementSet set_difference(std::span<const Element> a, std::span<const Element> b);
ElementSet with(std::span<const Element> set, Element x);
ElementSet without(std::span<const Element> set, Element x);
bool is_subset(std::span<const Element> a, std::span<const Element> b);

std::string to_string(std::span<const Element> set);

// Calls visit(subset) for every subset of {0..n-1} of size <= max_size, in
// order of increasing size, lexicographic within a size. Stops early and
// returns false as soon as visit returns false.
template <typename Visit>
bool for_each_small_subset(std::size_t n, std::size_t max_size, Visit&& visit) {
  ElementSet current;
  for (std::size_t size = 0; size <= max_size && size <= n; ++size) {
    current.resize(size);
    for (std::size_t i = 0; i < size; ++i) current[i] = static_cast<Element>(i);
    while (true) {
      if (!visit(static_cast<const ElementSet&>(current))) return false;
      std::size_t i = size;
      while (i > 0 && current[i - 1] == n - size + i - 1) --i;
      if (i == 0) break;
      ++current[i - 1];
      for (std::size_t j = i; j < size; ++j) current[j] = current[j - 1] + 1;
    }
  }
  return true;
}

std::uint64_t binomial(std::uint64_t n, std::uint64_t k);

}  // namespace hullcover
