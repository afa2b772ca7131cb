#include "hullcover/element_set.hpp"

#include <algorithm>
#include <iterator>
#include <sstream>

namespace hullcover {

ElementSet make_set(std::vector<Element> elements) {
  std::sort(elements.begin(), elements.end());
  elements.erase(std::unique(elements.begin(), elements.end()), elements.end());
  return elements;
}

bool contains(std::span<const Element> set, Element x) {
  return std::binary_search(set.begin(), set.end(), x);
}

ElementSet set_union(std::span<const Element> a, std::span<const Element> b) {
  ElementSet out;
  out.reserve(a.size() + b.size());
  std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

ElementSet set_difference(std::span<const Element> a, std::span<const Element> b) {
  ElementSet out;
  std::set_difference(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

ElementSet with(std::span<const Element> set, Element x) {
  ElementSet out(set.begin(), set.end());
  auto it = std::lower_bound(out.begin(), out.end(), x);
  if (it == out.end() || *it != x) out.insert(it, x);
  return out;
}

ElementSet without(std::span<const Element> set, Element x) {
  ElementSet out;
  out.reserve(set.size());
  for (Element e : set)
    if (e != x) out.push_back(e);
  return out;
}

bool is_subset(std::span<const Element> a, std::span<const Element> b) {
  return std::includes(b.begin(), b.end(), a.begin(), a.end());
}

std::string to_string(std::span<const Element> set) {
  std::ostringstream os;
  os << '{';
  for (std::size_t i = 0; i < set.size(); ++i) os << (i ? "," : "") << set[i];
  os << '}';
  return os.str();
}

std::uint64_t binomial(std::uint64_t n, std::uint64_t k) {
  if (k > n) return 0;
  k = std::min(k, n - k);
  std::uint64_t r = 1;
  for (std::uint64_t i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

}  // namespace hullcover
