#include "hullcover/zoo.hpp"

#include <algorithm>
#include <memory>
#include <numeric>
#include <set>
#include <sstream>

#include "hullcover/errors.hpp"

namespace hullcover {

namespace {

struct ModP {
  using Value = std::uint64_t;
  std::uint64_t p;
  bool is_zero(Value a) const { return a == 0; }
  Value sub(Value a, Value b) const { return (a + p - b) % p; }
  Value mul(Value a, Value b) const { return a * b % p; }
  Value inv(Value a) const {
    Value result = 1, base = a, e = p - 2;
    while (e) {
      if (e & 1) result = mul(result, base);
      base = mul(base, base);
      e >>= 1;
    }
    return result;
  }
};

struct Rationals {
  using Value = mpq_class;
  bool is_zero(const Value& a) const { return sgn(a) == 0; }
  Value sub(const Value& a, const Value& b) const { return a - b; }
  Value mul(const Value& a, const Value& b) const { return a * b; }
  Value inv(const Value& a) const { return 1 / a; }
};

// x ∈ span(rows) by exact Gaussian elimination.
template <typename Field>
bool in_span(const Field& field, std::vector<std::vector<typename Field::Value>> rows,
             std::vector<typename Field::Value> x) {
  using Value = typename Field::Value;
  const std::size_t dim = x.size();
  std::vector<std::size_t> pivot_cols;
  std::size_t rank = 0;
  for (std::size_t col = 0; col < dim && rank < rows.size(); ++col) {
    std::size_t pivot = rank;
    while (pivot < rows.size() && field.is_zero(rows[pivot][col])) ++pivot;
    if (pivot == rows.size()) continue;
    std::swap(rows[rank], rows[pivot]);
    const Value inv = field.inv(rows[rank][col]);
    for (std::size_t c = col; c < dim; ++c) rows[rank][c] = field.mul(rows[rank][c], inv);
    for (std::size_t r = 0; r < rows.size(); ++r) {
      if (r == rank || field.is_zero(rows[r][col])) continue;
      const Value factor = rows[r][col];
      for (std::size_t c = col; c < dim; ++c)
        rows[r][c] = field.sub(rows[r][c], field.mul(factor, rows[rank][c]));
    }
    pivot_cols.push_back(col);
    ++rank;
  }
  for (std::size_t r = 0; r < rank; ++r) {
    const std::size_t col = pivot_cols[r];
    if (field.is_zero(x[col])) continue;
    const Value factor = x[col];
    for (std::size_t c = col; c < dim; ++c) x[c] = field.sub(x[c], field.mul(factor, rows[r][c]));
  }
  return std::all_of(x.begin(), x.end(), [&](const Value& v) { return field.is_zero(v); });
}

template <typename Field>
HullOracle::Membership span_oracle(Field field,
                                   std::vector<std::vector<typename Field::Value>> vectors) {
  auto data = std::make_shared<const std::vector<std::vector<typename Field::Value>>>(
      std::move(vectors));
  return [field, data](Element x, std::span<const Element> f) {
    std::vector<std::vector<typename Field::Value>> rows;
    rows.reserve(f.size());
    for (Element e : f) rows.push_back((*data)[e]);
    return in_span(field, std::move(rows), (*data)[x]);
  };
}

template <typename T>
std::string tuple_label(const std::vector<T>& v) {
  std::ostringstream os;
  os << '(';
  for (std::size_t i = 0; i < v.size(); ++i) os << (i ? "," : "") << v[i];
  os << ')';
  return os.str();
}

}  // namespace

MatroidInstance build_vector_matroid(const VectorMatroidSpec& spec) {
  if (spec.prime) {
    const std::uint64_t p = *spec.prime;
    if (!is_prime(p)) throw InputError("field modulus p = " + std::to_string(p) + " is not prime");
    if (p > kMaxPrime) throw InputError("field modulus p = " + std::to_string(p) + " too large");

    std::vector<std::vector<std::uint64_t>> vectors;
    if (spec.full_space_dimension) {
      if (!spec.vectors.empty())
        throw InputError("give either explicit vectors or a full-space dimension, not both");
      const std::size_t d = *spec.full_space_dimension;
      if (d == 0) throw InputError("full-space dimension must be positive");
      std::uint64_t count = 1;
      for (std::size_t i = 0; i < d; ++i) {
        count *= p;
        if (count > kMaxFullSpace)
          throw InputError("full space F_" + std::to_string(p) + "^" + std::to_string(d) +
                           " exceeds " + std::to_string(kMaxFullSpace) + " vectors");
      }
      for (std::uint64_t i = 0; i < count; ++i) {
        std::vector<std::uint64_t> v(d);
        std::uint64_t rest = i;
        for (std::size_t c = d; c-- > 0;) {
          v[c] = rest % p;
          rest /= p;
        }
        vectors.push_back(std::move(v));
      }
    } else {
      const mpz_class modulus(static_cast<unsigned long>(p));
      for (std::size_t i = 0; i < spec.vectors.size(); ++i) {
        std::vector<std::uint64_t> v;
        for (const mpq_class& c : spec.vectors[i]) {
          if (c.get_den() != 1)
            throw InputError("vector " + std::to_string(i) + ": F_p coordinates must be integers");
          mpz_class r = c.get_num() % modulus;
          if (r < 0) r += modulus;
          v.push_back(r.get_ui());
        }
        vectors.push_back(std::move(v));
      }
    }
    for (std::size_t i = 1; i < vectors.size(); ++i)
      if (vectors[i].size() != vectors[0].size())
        throw InputError("dimension mismatch: vector " + std::to_string(i) + " has " +
                         std::to_string(vectors[i].size()) + " coordinates, expected " +
                         std::to_string(vectors[0].size()));
    std::vector<std::string> labels;
    for (const auto& v : vectors) labels.push_back(tuple_label(v));
    return MatroidInstance(GroundSet(std::move(labels)),
                           HullOracle{span_oracle(ModP{p}, std::move(vectors)),
                                      OracleKind::VectorFp, true});
  }

  if (spec.full_space_dimension)
    throw InputError("full-space ground sets are only available over F_p");
  std::vector<std::vector<mpq_class>> vectors = spec.vectors;
  for (std::size_t i = 0; i < vectors.size(); ++i) {
    if (vectors[i].size() != vectors[0].size())
      throw InputError("dimension mismatch: vector " + std::to_string(i) + " has " +
                       std::to_string(vectors[i].size()) + " coordinates, expected " +
                       std::to_string(vectors[0].size()));
    for (mpq_class& c : vectors[i]) c.canonicalize();
  }
  std::vector<std::string> labels;
  for (const auto& v : vectors) {
    std::vector<std::string> coords;
    for (const mpq_class& c : v) coords.push_back(c.get_str());
    labels.push_back(tuple_label(coords));
  }
  return MatroidInstance(
      GroundSet(std::move(labels)),
      HullOracle{span_oracle(Rationals{}, std::move(vectors)), OracleKind::VectorQ, true});
}

std::vector<Edge> complete_graph_edges(std::uint32_t n) {
  std::vector<Edge> edges;
  for (std::uint32_t u = 0; u < n; ++u)
    for (std::uint32_t v = u + 1; v < n; ++v) edges.emplace_back(u, v);
  return edges;
}

std::vector<Edge> graph_edges(const GraphSpec& spec) {
  if (spec.complete) {
    if (!spec.edges.empty()) throw InputError("complete graph spec must not list edges");
    return complete_graph_edges(spec.vertices);
  }
  std::vector<Edge> edges;
  std::set<Edge> seen;
  for (std::size_t i = 0; i < spec.edges.size(); ++i) {
    auto [u, v] = spec.edges[i];
    if (u >= spec.vertices || v >= spec.vertices)
      throw InputError("edge " + std::to_string(i) + " has an endpoint outside 0.." +
                       std::to_string(spec.vertices) + "-1");
    if (u == v) throw InputError("edge " + std::to_string(i) + " is a self-loop");
    if (u > v) std::swap(u, v);
    if (!seen.insert({u, v}).second)
      throw InputError("edge " + std::to_string(i) + " duplicates an earlier edge");
    edges.emplace_back(u, v);
  }
  return edges;
}

namespace {

class DisjointSet {
 public:
  explicit DisjointSet(std::size_t n) : parent_(n) { std::iota(parent_.begin(), parent_.end(), 0u); }

  std::uint32_t find(std::uint32_t x) {
    while (parent_[x] != x) x = parent_[x] = parent_[parent_[x]];
    return x;
  }
  void unite(std::uint32_t a, std::uint32_t b) { parent_[find(a)] = find(b); }

 private:
  std::vector<std::uint32_t> parent_;
};

}  // namespace

MatroidInstance build_graphic_matroid(const GraphSpec& spec) {
  auto edges = std::make_shared<const std::vector<Edge>>(graph_edges(spec));
  const std::uint32_t n = spec.vertices;
  std::vector<std::string> labels;
  for (auto [u, v] : *edges) labels.push_back("e" + std::to_string(u) + "-" + std::to_string(v));
  auto member = [edges, n](Element x, std::span<const Element> f) {
    DisjointSet dsu(n);
    for (Element e : f) dsu.unite((*edges)[e].first, (*edges)[e].second);
    return dsu.find((*edges)[x].first) == dsu.find((*edges)[x].second);
  };
  return MatroidInstance(GroundSet(std::move(labels)),
                         HullOracle{member, OracleKind::Graphic, true});
}

MatroidInstance build_abelian_linear_matroid(const FiniteAbelianGroup& g) {
  std::vector<std::string> labels;
  for (Element x = 0; x < g.order(); ++x) labels.push_back(g.label(x));
  auto member = [g](Element x, std::span<const Element> f) {
    if (x == g.zero()) return true;
    const ElementSet sub = subgroup_closure(g, f);
    for (std::uint64_t n = 1; n <= g.exponent(); ++n) {
      const Element nx = g.scale(n, x);
      if (nx != g.zero() && contains(sub, nx)) return true;
    }
    return false;
  };
  return MatroidInstance(GroundSet(std::move(labels)),
                         HullOracle{member, OracleKind::Abelian, linear_hull_is_matroid(g)});
}

std::int64_t integer_value(Element x) {
  if (x == 0) return 0;
  const std::int64_t k = (static_cast<std::int64_t>(x) + 1) / 2;
  return (x % 2 == 1) ? k : -k;
}

Element integer_element(std::int64_t value) {
  if (value == 0) return 0;
  return static_cast<Element>(value > 0 ? 2 * value - 1 : -2 * value);
}

MatroidInstance build_integer_hull(const IntegerHullSpec& spec) {
  if (spec.window < 3) throw InputError("integer window must be at least 3");
  if (spec.window > 1'000'000) throw InputError("integer window too large");
  std::vector<std::string> labels;
  const auto count = static_cast<Element>(2 * spec.window + 1);
  for (Element x = 0; x < count; ++x) labels.push_back(std::to_string(integer_value(x)));

  if (spec.variant == IntegerHullVariant::Subgroup) {
    // <F> = gcd(F)·Z, and gcd(∅) = 0 gives <∅> = {0}.
    auto member = [](Element x, std::span<const Element> f) {
      std::int64_t g = 0;
      for (Element e : f) g = std::gcd(g, integer_value(e));
      const std::int64_t v = integer_value(x);
      return g == 0 ? v == 0 : v % g == 0;
    };
    return MatroidInstance(GroundSet(std::move(labels)),
                           HullOracle{member, OracleKind::IntegerSubgroup, false});
  }
  // n·x ∈ gcd(F)·Z \ {0} is solvable for every x != 0 once F has a nonzero
  // element.
  auto member = [](Element x, std::span<const Element> f) {
    if (x == 0) return true;
    return std::any_of(f.begin(), f.end(), [](Element e) { return integer_value(e) != 0; });
  };
  return MatroidInstance(GroundSet(std::move(labels)),
                         HullOracle{member, OracleKind::IntegerLinear, true});
}

}  // namespace hullcover
