#include "hullcover/abelian.hpp"

#include <algorithm>
#include <deque>
#include <limits>
#include <numeric>
#include <sstream>

#include "hullcover/errors.hpp"

namespace hullcover {

FiniteAbelianGroup::FiniteAbelianGroup(std::vector<std::uint64_t> orders)
    : orders_(std::move(orders)) {
  if (orders_.empty()) throw InputError("group needs at least one cyclic factor");
  for (std::uint64_t n : orders_) {
    if (n < 2) throw InputError("cyclic orders must be at least 2, got " + std::to_string(n));
    if (order_ > kMaxOrder / n)
      throw InputError("group order exceeds limit " + std::to_string(kMaxOrder));
    order_ *= n;
    exponent_ = std::lcm(exponent_, n);
  }
}

Element FiniteAbelianGroup::index_of(const Residues& tuple) const {
  if (tuple.size() != orders_.size())
    throw InputError("element has " + std::to_string(tuple.size()) + " coordinates, group has " +
                     std::to_string(orders_.size()));
  std::uint64_t index = 0;
  for (std::size_t i = 0; i < orders_.size(); ++i) {
    if (tuple[i] >= orders_[i])
      throw InputError("coordinate " + std::to_string(i) + " = " + std::to_string(tuple[i]) +
                       " outside Z_" + std::to_string(orders_[i]));
    index = index * orders_[i] + tuple[i];
  }
  return static_cast<Element>(index);
}

Residues FiniteAbelianGroup::tuple_of(Element x) const {
  Residues out(orders_.size());
  std::uint64_t rest = x;
  for (std::size_t i = orders_.size(); i-- > 0;) {
    out[i] = rest % orders_[i];
    rest /= orders_[i];
  }
  return out;
}

std::string FiniteAbelianGroup::label(Element x) const {
  const Residues t = tuple_of(x);
  if (t.size() == 1) return std::to_string(t[0]);
  std::ostringstream os;
  os << '(';
  for (std::size_t i = 0; i < t.size(); ++i) os << (i ? "," : "") << t[i];
  os << ')';
  return os.str();
}

void FiniteAbelianGroup::validate(std::span<const Element> elements) const {
  for (Element x : elements)
    if (x >= order_)
      throw InputError("group element index " + std::to_string(x) + " out of range (order " +
                       std::to_string(order_) + ")");
}

Element FiniteAbelianGroup::add(Element x, Element y) const {
  Residues a = tuple_of(x);
  const Residues b = tuple_of(y);
  for (std::size_t i = 0; i < a.size(); ++i) a[i] = (a[i] + b[i]) % orders_[i];
  return index_of(a);
}

Element FiniteAbelianGroup::negate(Element x) const {
  Residues a = tuple_of(x);
  for (std::size_t i = 0; i < a.size(); ++i) a[i] = (orders_[i] - a[i]) % orders_[i];
  return index_of(a);
}

Element FiniteAbelianGroup::scale(std::uint64_t n, Element x) const {
  Residues a = tuple_of(x);
  for (std::size_t i = 0; i < a.size(); ++i) a[i] = (n % orders_[i]) * a[i] % orders_[i];
  return index_of(a);
}

std::uint64_t FiniteAbelianGroup::order_of(Element x) const {
  const Residues a = tuple_of(x);
  std::uint64_t result = 1;
  for (std::size_t i = 0; i < a.size(); ++i)
    result = std::lcm(result, orders_[i] / std::gcd(orders_[i], a[i]));
  return result;
}

namespace {

void factor_lists(std::uint64_t max_order, std::uint64_t product, std::vector<std::uint64_t>& cur,
                  std::vector<std::vector<std::uint64_t>>& out) {
  if (!cur.empty()) out.push_back(cur);
  const std::uint64_t start = cur.empty() ? 2 : cur.back();
  for (std::uint64_t n = start; product * n <= max_order; ++n) {
    if (!cur.empty() && n % cur.back() != 0) continue;
    cur.push_back(n);
    factor_lists(max_order, product * n, cur, out);
    cur.pop_back();
  }
}

}  // namespace

std::vector<FiniteAbelianGroup> invariant_factor_groups(std::uint64_t max_order) {
  std::vector<std::vector<std::uint64_t>> lists;
  std::vector<std::uint64_t> cur;
  factor_lists(max_order, 1, cur, lists);
  auto product = [](const std::vector<std::uint64_t>& v) {
    return std::accumulate(v.begin(), v.end(), std::uint64_t{1}, std::multiplies<>());
  };
  std::sort(lists.begin(), lists.end(), [&](const auto& l, const auto& r) {
    if (product(l) != product(r)) return product(l) < product(r);
    return l < r;
  });
  std::vector<FiniteAbelianGroup> groups;
  for (auto& l : lists) groups.emplace_back(std::move(l));
  return groups;
}

ElementSet subgroup_closure(const FiniteAbelianGroup& g, std::span<const Element> b) {
  g.validate(b);
  std::vector<char> seen(g.order(), 0);
  std::deque<Element> queue{g.zero()};
  seen[g.zero()] = 1;
  // In a finite group closure under addition already yields inverses.
  while (!queue.empty()) {
    const Element cur = queue.front();
    queue.pop_front();
    for (Element gen : b) {
      const Element next = g.add(cur, gen);
      if (!seen[next]) {
        seen[next] = 1;
        queue.push_back(next);
      }
    }
  }
  ElementSet out;
  for (Element x = 0; x < g.order(); ++x)
    if (seen[x]) out.push_back(x);
  return out;
}

ElementSet linear_hull(const FiniteAbelianGroup& g, std::span<const Element> b) {
  const ElementSet sub = subgroup_closure(g, b);
  ElementSet out{g.zero()};
  for (Element x = 1; x < g.order(); ++x) {
    for (std::uint64_t n = 1; n <= g.exponent(); ++n) {
      const Element nx = g.scale(n, x);
      if (nx != g.zero() && contains(sub, nx)) {
        out.push_back(x);
        break;
      }
    }
  }
  return out;
}

ElementSet n_torsion(const FiniteAbelianGroup& g, std::uint64_t n) {
  if (n == 0) throw InputError("torsion index n must be positive");
  ElementSet out;
  for (Element x = 0; x < g.order(); ++x)
    if (g.scale(n, x) == g.zero()) out.push_back(x);
  return out;
}

bool linear_hull_is_matroid(const FiniteAbelianGroup& g) {
  const auto primes = prime_divisors(g.order());
  if (primes.size() != 1) return false;
  if (g.rank() == 1) return true;
  return g.exponent() == primes.front();
}

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

std::vector<std::uint64_t> prime_divisors(std::uint64_t n) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d) continue;
    out.push_back(d);
    while (n % d == 0) n /= d;
  }
  if (n > 1) out.push_back(n);
  return out;
}

TorsionReport primary_decomposition(const FiniteAbelianGroup& g) {
  TorsionReport report;
  for (std::uint64_t p : prime_divisors(g.order())) {
    PrimaryComponent c{p, {}};
    for (Element x = 0; x < g.order(); ++x) {
      std::uint64_t o = g.order_of(x);
      while (o % p == 0) o /= p;
      if (o == 1) c.elements.push_back(x);
    }
    report.components.push_back(std::move(c));
  }

  std::uint64_t product = 1;
  for (const auto& c : report.components) product *= c.elements.size();
  report.sizes_multiply = product == g.order();

  report.trivial_intersections = true;
  for (std::size_t i = 0; i < report.components.size(); ++i)
    for (std::size_t j = i + 1; j < report.components.size(); ++j) {
      ElementSet common;
      std::set_intersection(report.components[i].elements.begin(),
                            report.components[i].elements.end(),
                            report.components[j].elements.begin(),
                            report.components[j].elements.end(), std::back_inserter(common));
      if (common != ElementSet{g.zero()}) report.trivial_intersections = false;
    }

  // Enumerate every choice of one element per component and count how often
  // each group element arises as the sum.
  std::vector<std::uint64_t> hits(g.order(), 0);
  if (report.sizes_multiply) {
    std::vector<std::size_t> pick(report.components.size(), 0);
    while (true) {
      Element sum = g.zero();
      for (std::size_t i = 0; i < pick.size(); ++i)
        sum = g.add(sum, report.components[i].elements[pick[i]]);
      ++hits[sum];
      std::size_t i = 0;
      while (i < pick.size() && ++pick[i] == report.components[i].elements.size()) pick[i++] = 0;
      if (i == pick.size()) break;
    }
  }
  report.direct_sum = report.sizes_multiply && report.trivial_intersections &&
                      std::all_of(hits.begin(), hits.end(), [](auto h) { return h == 1; });
  return report;
}

bool is_linearly_independent_direct(const FiniteAbelianGroup& g, std::span<const Element> a) {
  g.validate(a);
  const ElementSet set = make_set({a.begin(), a.end()});
  if (set.size() > kDirectIndependenceLimit)
    throw InputError("direct independence check limited to " +
                     std::to_string(kDirectIndependenceLimit) + " elements");
  if (contains(set, g.zero())) return false;
  std::vector<std::uint64_t> bound(set.size());
  for (std::size_t i = 0; i < set.size(); ++i) bound[i] = g.order_of(set[i]);
  // λ_i a_i = 0 iff λ_i = 0 for 0 <= λ_i < order(a_i), so any nonzero
  // coefficient vector summing to zero is a dependence.
  std::vector<std::uint64_t> lambda(set.size(), 0);
  while (true) {
    std::size_t i = 0;
    while (i < lambda.size() && ++lambda[i] == bound[i]) lambda[i++] = 0;
    if (i == lambda.size()) return true;
    Element sum = g.zero();
    for (std::size_t j = 0; j < set.size(); ++j) sum = g.add(sum, g.scale(lambda[j], set[j]));
    if (sum == g.zero()) return false;
  }
}

bool is_linearly_independent_by_hull(const FiniteAbelianGroup& g, std::span<const Element> a) {
  g.validate(a);
  const ElementSet set = make_set({a.begin(), a.end()});
  for (Element x : set)
    if (contains(linear_hull(g, without(set, x)), x)) return false;
  return true;
}

bool is_linearly_independent(const FiniteAbelianGroup& g, std::span<const Element> a) {
  if (make_set({a.begin(), a.end()}).size() <= kDirectIndependenceLimit)
    return is_linearly_independent_direct(g, a);
  return is_linearly_independent_by_hull(g, a);
}

CosetPairCertificate dependent_coset_pair(const FiniteAbelianGroup& g, std::uint64_t p,
                                          std::uint64_t n, Element a, Element x, Element y) {
  const Element elems[] = {a, x, y};
  g.validate(elems);
  if (!is_prime(p)) throw InputError("p = " + std::to_string(p) + " is not prime");
  if (n == 0) throw InputError("exponent n must be positive");
  std::uint64_t q = 1;
  for (std::uint64_t i = 0; i < n; ++i) {
    if (q > std::numeric_limits<std::uint64_t>::max() / p)
      throw InputError("p^n overflows 64 bits");
    q *= p;
  }
  const std::string pn = std::to_string(p) + "^" + std::to_string(n);
  if (g.scale(q, a) == g.zero())
    throw InputError("precondition: a = " + g.label(a) + " lies in G[" + pn + "]");
  if (x == y) throw InputError("precondition: x and y must differ");
  if (g.scale(q, x) != g.zero())
    throw InputError("precondition: x = " + g.label(x) + " is not in G[" + pn + "]");
  if (g.scale(q, y) != g.zero())
    throw InputError("precondition: y = " + g.label(y) + " is not in G[" + pn + "]");

  CosetPairCertificate c;
  c.prime = p;
  c.power = n;
  c.multiplier = q;
  c.a = a;
  c.x = x;
  c.y = y;
  c.first = g.add(a, x);
  c.second = g.add(a, y);
  c.image = g.scale(q, a);
  c.valid = c.first != c.second && g.scale(q, c.first) == c.image &&
            g.scale(q, c.second) == c.image && c.image != g.zero() &&
            g.subtract(g.scale(q, c.first), g.scale(q, c.second)) == g.zero();
  return c;
}

}  // namespace hullcover
