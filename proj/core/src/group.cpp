#include "hullcover/group.hpp"

#include <deque>

#include "hullcover/errors.hpp"

namespace hullcover {

FiniteGroup::FiniteGroup(std::vector<std::vector<std::uint32_t>> table,
                         std::vector<std::string> labels)
    : FiniteGroup(std::move(table), std::move(labels), true) {}

FiniteGroup::FiniteGroup(std::vector<std::vector<std::uint32_t>> table,
                         std::vector<std::string> labels, bool check_associativity)
    : labels_(std::move(labels)) {
  const std::size_t n = table.size();
  if (n == 0) throw InputError("group table is empty");
  if (n > kMaxOrder) throw InputError("group order exceeds " + std::to_string(kMaxOrder));
  if (check_associativity && n > kMaxTableOrder)
    throw InputError("explicit group tables are limited to " + std::to_string(kMaxTableOrder) +
                     " elements");
  order_ = static_cast<std::uint32_t>(n);
  table_.reserve(n * n);
  for (std::size_t r = 0; r < n; ++r) {
    if (table[r].size() != n)
      throw InputError("group table row " + std::to_string(r) + " has " +
                       std::to_string(table[r].size()) + " entries, expected " + std::to_string(n));
    for (std::uint32_t v : table[r]) {
      if (v >= n) throw InputError("group table entry " + std::to_string(v) + " out of range");
      table_.push_back(v);
    }
  }
  bool found = false;
  for (Element e = 0; e < n && !found; ++e) {
    bool is_identity = true;
    for (Element a = 0; a < n && is_identity; ++a)
      is_identity = multiply(e, a) == a && multiply(a, e) == a;
    if (is_identity) {
      identity_ = e;
      found = true;
    }
  }
  if (!found) throw InputError("group table has no identity element");
  inverse_.assign(n, 0);
  for (Element a = 0; a < n; ++a) {
    bool has = false;
    for (Element b = 0; b < n && !has; ++b)
      if (multiply(a, b) == identity_ && multiply(b, a) == identity_) {
        inverse_[a] = b;
        has = true;
      }
    if (!has) throw InputError("element " + std::to_string(a) + " has no inverse");
  }
  for (Element a = 0; a < n; ++a)
    for (Element b = 0; b < n; ++b) {
      if (multiply(a, b) != multiply(b, a)) abelian_ = false;
      if (!check_associativity) continue;
      for (Element c = 0; c < n; ++c)
        if (multiply(multiply(a, b), c) != multiply(a, multiply(b, c)))
          throw InputError("group table is not associative at (" + std::to_string(a) + "," +
                           std::to_string(b) + "," + std::to_string(c) + ")");
    }
  if (labels_.empty())
    for (Element a = 0; a < n; ++a) labels_.push_back(std::to_string(a));
  if (labels_.size() != n) throw InputError("group labels do not match the table size");
}

FiniteGroup FiniteGroup::from_abelian(const FiniteAbelianGroup& g) {
  if (g.order() > kMaxOrder) throw InputError("group order exceeds " + std::to_string(kMaxOrder));
  const auto n = static_cast<std::uint32_t>(g.order());
  std::vector<std::vector<std::uint32_t>> table(n, std::vector<std::uint32_t>(n));
  std::vector<std::string> labels;
  for (Element a = 0; a < n; ++a) {
    labels.push_back(g.label(a));
    for (Element b = 0; b < n; ++b) table[a][b] = g.add(a, b);
  }
  return FiniteGroup(std::move(table), std::move(labels), false);
}

FiniteGroup FiniteGroup::cyclic(std::uint32_t n) { return from_abelian(FiniteAbelianGroup({n})); }

void FiniteGroup::validate(Element a) const {
  if (a >= order_)
    throw InputError("group element " + std::to_string(a) + " out of range (order " +
                     std::to_string(order_) + ")");
}

ElementSet FiniteGroup::generated_subgroup(std::span<const Element> gens) const {
  std::vector<char> seen(order_, 0);
  std::deque<Element> queue{identity_};
  seen[identity_] = 1;
  while (!queue.empty()) {
    const Element cur = queue.front();
    queue.pop_front();
    for (Element g : gens) {
      const Element next = multiply(cur, g);
      if (!seen[next]) {
        seen[next] = 1;
        queue.push_back(next);
      }
    }
  }
  ElementSet out;
  for (Element a = 0; a < order_; ++a)
    if (seen[a]) out.push_back(a);
  return out;
}

}  // namespace hullcover
