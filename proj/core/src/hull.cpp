#include "hullcover/hull.hpp"

#include <algorithm>
#include <numeric>
#include <limits>
#include <random>
#include <sstream>

#include "hullcover/errors.hpp"

namespace hullcover {

GroundSet::GroundSet(std::vector<std::string> labels) : labels_(std::move(labels)) {}

const std::string& GroundSet::label(Element x) const {
  if (x >= labels_.size())
    throw InputError("element " + std::to_string(x) + " out of range (ground set has " +
                     std::to_string(labels_.size()) + " elements)");
  return labels_[x];
}

ElementSet GroundSet::all() const {
  ElementSet out(labels_.size());
  std::iota(out.begin(), out.end(), Element{0});
  return out;
}

void GroundSet::validate(std::span<const Element> elements) const {
  for (Element x : elements)
    if (x >= labels_.size())
      throw InputError("element " + std::to_string(x) + " out of range (ground set has " +
                       std::to_string(labels_.size()) + " elements)");
}

std::string to_string(OracleKind kind) {
  switch (kind) {
    case OracleKind::VectorFp: return "vector_fp";
    case OracleKind::VectorQ: return "vector_q";
    case OracleKind::Graphic: return "graphic";
    case OracleKind::Abelian: return "abelian";
    case OracleKind::IntegerSubgroup: return "integer_subgroup";
    case OracleKind::IntegerLinear: return "integer_linear";
    case OracleKind::Custom: return "custom";
  }
  return "custom";
}

MatroidInstance::MatroidInstance(GroundSet ground, HullOracle oracle)
    : ground_(std::move(ground)), oracle_(std::move(oracle)) {
  for (Element x = 0; x < ground_.size(); ++x)
    if (oracle_.member(x, {})) loops_.push_back(x);
}

ElementSet closure(const MatroidInstance& m, std::span<const Element> f) {
  m.ground().validate(f);
  ElementSet sorted = make_set({f.begin(), f.end()});
  ElementSet out;
  for (Element x = 0; x < m.size(); ++x)
    if (m.member(x, sorted)) out.push_back(x);
  return out;
}

namespace {

bool independent_unchecked(const MatroidInstance& m, const ElementSet& a) {
  for (Element x : a)
    if (m.member(x, without(a, x))) return false;
  return true;
}

}  // namespace

bool is_independent(const MatroidInstance& m, std::span<const Element> a) {
  m.ground().validate(a);
  return independent_unchecked(m, make_set({a.begin(), a.end()}));
}

std::optional<ElementSet> find_circuit_within(const MatroidInstance& m,
                                              std::span<const Element> a) {
  m.ground().validate(a);
  ElementSet current = make_set({a.begin(), a.end()});
  if (independent_unchecked(m, current)) return std::nullopt;
  // Dependence is inherited by supersets, so one pass of single deletions
  // leaves a set whose every proper subset is independent.
  for (Element x : ElementSet(current)) {
    ElementSet smaller = without(current, x);
    if (!independent_unchecked(m, smaller)) current = std::move(smaller);
  }
  return current;
}

std::vector<Element> greedy_basis(const MatroidInstance& m, std::span<const Element> order) {
  std::vector<Element> scan;
  if (order.empty()) {
    scan = m.ground().all();
  } else {
    m.ground().validate(order);
    scan.assign(order.begin(), order.end());
    if (scan.size() != m.size() || make_set(scan).size() != m.size())
      throw InputError("basis order must be a permutation of the ground set");
  }
  std::vector<Element> kept;
  ElementSet kept_set;
  for (Element x : scan) {
    if (!m.member(x, kept_set)) {
      kept.push_back(x);
      kept_set = with(kept_set, x);
    }
  }
  return kept;
}

// ---- axiom checks ----------------------------------------------------------

std::string describe(const Budget& budget) {
  std::ostringstream os;
  if (const auto* e = std::get_if<ExhaustiveBudget>(&budget)) {
    os << "exhaustive |A|<=" << e->max_subset_size;
  } else {
    const auto& s = std::get<SampledBudget>(budget);
    os << "sampled seed=" << s.seed << " count=" << s.count << " |A|<=" << s.max_subset_size;
  }
  return os.str();
}

namespace {

// One step of the sweep: returns a witness on violation.
using TupleCheck =
    std::function<std::optional<AxiomWitness>(const ElementSet& a, std::uint64_t& tuples)>;

void refuse_if_too_large(const MatroidInstance& m, std::size_t max_subset_size) {
  const std::uint64_t n = m.size();
  std::uint64_t subsets = 0;
  for (std::uint64_t s = 0; s <= max_subset_size && s <= n; ++s) subsets += binomial(n, s);
  const long double estimate = static_cast<long double>(subsets) * (n + 1) * (n + 1);
  if (estimate > static_cast<long double>(kExhaustiveEvaluationLimit)) {
    std::ostringstream os;
    os << "exhaustive budget refused: about " << static_cast<std::uint64_t>(estimate)
       << " oracle evaluations for " << n << " elements and |A|<=" << max_subset_size
       << " (limit " << kExhaustiveEvaluationLimit << "); use a sampled budget";
    throw InputError(os.str());
  }
}

// Portable draw in [0, bound); avoids implementation-defined distributions.
std::uint64_t draw(std::mt19937_64& rng, std::uint64_t bound) {
  const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() -
                              std::numeric_limits<std::uint64_t>::max() % bound;
  std::uint64_t v;
  do v = rng(); while (v >= limit);
  return v % bound;
}

ElementSet draw_subset(std::mt19937_64& rng, std::size_t n, std::size_t max_size) {
  const std::size_t size = static_cast<std::size_t>(draw(rng, std::min(max_size, n) + 1));
  std::vector<Element> pool(n);
  std::iota(pool.begin(), pool.end(), Element{0});
  for (std::size_t i = 0; i < size; ++i)
    std::swap(pool[i], pool[i + draw(rng, n - i)]);
  pool.resize(size);
  return make_set(std::move(pool));
}

AxiomReport sweep(const MatroidInstance& m, const Budget& budget, std::string axiom,
                  const TupleCheck& check) {
  AxiomReport report;
  report.axiom = std::move(axiom);
  report.budget = describe(budget);
  if (const auto* e = std::get_if<ExhaustiveBudget>(&budget)) {
    refuse_if_too_large(m, e->max_subset_size);
    for_each_small_subset(m.size(), e->max_subset_size, [&](const ElementSet& a) {
      if (auto w = check(a, report.tuples_checked)) {
        report.verdict = Verdict::Violated;
        report.witness = std::move(w);
        return false;
      }
      return true;
    });
  } else {
    const auto& s = std::get<SampledBudget>(budget);
    std::mt19937_64 rng(s.seed);
    for (std::uint64_t i = 0; i < s.count; ++i) {
      ElementSet a = draw_subset(rng, m.size(), s.max_subset_size);
      if (auto w = check(a, report.tuples_checked)) {
        report.verdict = Verdict::Violated;
        report.witness = std::move(w);
        break;
      }
    }
  }
  return report;
}

std::optional<AxiomWitness> hull_axioms_at(const MatroidInstance& m, const ElementSet& a,
                                           std::uint64_t& tuples) {
  for (Element x : a) {
    ++tuples;
    if (!m.member(x, a)) return AxiomWitness{a, x, std::nullopt};
  }
  for (Element x = 0; x < m.size(); ++x) {
    if (!m.member(x, a)) continue;
    for (Element y = 0; y < m.size(); ++y) {
      if (contains(a, y)) continue;
      ++tuples;
      if (!m.member(x, with(a, y))) return AxiomWitness{a, x, y};
    }
  }
  return std::nullopt;
}

std::optional<AxiomWitness> idempotent_at(const MatroidInstance& m, const ElementSet& a,
                                          std::uint64_t& tuples) {
  ++tuples;
  const ElementSet hull = closure(m, a);
  for (Element x = 0; x < m.size(); ++x)
    if (!contains(hull, x) && m.member(x, hull)) return AxiomWitness{a, x, std::nullopt};
  return std::nullopt;
}

std::optional<AxiomWitness> exchange_at(const MatroidInstance& m, const ElementSet& a,
                                        std::uint64_t& tuples) {
  const ElementSet hull = closure(m, a);
  const ElementSet outside = set_difference(m.ground().all(), hull);
  for (std::size_t i = 0; i < outside.size(); ++i) {
    for (std::size_t j = i + 1; j < outside.size(); ++j) {
      const Element x = outside[i];
      const Element y = outside[j];
      ++tuples;
      const bool x_in = m.member(x, with(a, y));
      const bool y_in = m.member(y, with(a, x));
      if (x_in && !y_in) return AxiomWitness{a, x, y};
      if (y_in && !x_in) return AxiomWitness{a, y, x};
    }
  }
  return std::nullopt;
}

}  // namespace

AxiomReport check_hull_axioms(const MatroidInstance& m, const Budget& budget) {
  return sweep(m, budget, "hull", [&](const ElementSet& a, std::uint64_t& t) {
    return hull_axioms_at(m, a, t);
  });
}

AxiomReport check_idempotent(const MatroidInstance& m, const Budget& budget) {
  return sweep(m, budget, "idempotent", [&](const ElementSet& a, std::uint64_t& t) {
    return idempotent_at(m, a, t);
  });
}

AxiomReport check_exchange(const MatroidInstance& m, const Budget& budget) {
  return sweep(m, budget, "exchange", [&](const ElementSet& a, std::uint64_t& t) {
    return exchange_at(m, a, t);
  });
}

bool reproduces(const MatroidInstance& m, const AxiomReport& report) {
  if (!report.witness) return false;
  const AxiomWitness& w = *report.witness;
  m.ground().validate(w.a);
  if (!w.x) return false;
  const Element x = *w.x;
  if (report.axiom == "hull") {
    if (!w.y) return contains(w.a, x) && !m.member(x, w.a);
    return m.member(x, w.a) && !m.member(x, with(w.a, *w.y));
  }
  if (report.axiom == "idempotent") {
    const ElementSet hull = closure(m, w.a);
    return !contains(hull, x) && m.member(x, hull);
  }
  if (report.axiom == "exchange") {
    if (!w.y) return false;
    const Element y = *w.y;
    return !m.member(x, w.a) && !m.member(y, w.a) && m.member(x, with(w.a, y)) &&
           !m.member(y, with(w.a, x));
  }
  return false;
}

}  // namespace hullcover
