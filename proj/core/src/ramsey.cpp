#include "hullcover/ramsey.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <limits>
#include <deque>
#include <map>
#include <numeric>
#include <sstream>

#include "hullcover/errors.hpp"

namespace hullcover {

std::string to_string(ColoringFormula f) {
  switch (f) {
    case ColoringFormula::Constant: return "constant";
    case ColoringFormula::Mod: return "mod";
    case ColoringFormula::SeededUniform: return "seeded-uniform";
  }
  return "constant";
}

ColoringFormula parse_coloring_formula(const std::string& name) {
  if (name == "constant") return ColoringFormula::Constant;
  if (name == "mod") return ColoringFormula::Mod;
  if (name == "seeded-uniform") return ColoringFormula::SeededUniform;
  throw InputError("unknown coloring formula '" + name +
                   "' (expected constant, mod or seeded-uniform)");
}

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ull;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ull;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebull;
  return x ^ (x >> 31);
}

namespace {

std::uint32_t generated_color(const ColoringGenerator& gen, std::uint32_t colors, std::uint64_t a,
                              std::uint64_t b) {
  switch (gen.formula) {
    case ColoringFormula::Constant: return 0;
    case ColoringFormula::Mod: return static_cast<std::uint32_t>((a + b) % colors);
    case ColoringFormula::SeededUniform:
      return static_cast<std::uint32_t>(
          splitmix64(splitmix64(gen.seed) ^ splitmix64((a << 32) | b)) % colors);
  }
  return 0;
}

}  // namespace

// ---- product colorings and rectangles --------------------------------------

ProductColoring::ProductColoring(std::uint32_t x_size, std::uint32_t y_size, std::uint32_t colors,
                                 ColoringGenerator generator)
    : x_size_(x_size), y_size_(y_size), colors_(colors), generator_(generator) {
  if (colors == 0) throw InputError("a coloring needs at least one color");
}

ProductColoring::ProductColoring(std::uint32_t colors,
                                 std::vector<std::vector<std::uint32_t>> table)
    : colors_(colors) {
  if (colors == 0) throw InputError("a coloring needs at least one color");
  x_size_ = static_cast<std::uint32_t>(table.size());
  y_size_ = table.empty() ? 0 : static_cast<std::uint32_t>(table[0].size());
  table_.reserve(std::size_t{x_size_} * y_size_);
  for (std::size_t x = 0; x < table.size(); ++x) {
    if (table[x].size() != y_size_)
      throw InputError("coloring table row " + std::to_string(x) + " has " +
                       std::to_string(table[x].size()) + " entries, expected " +
                       std::to_string(y_size_));
    for (std::uint32_t c : table[x]) {
      if (c >= colors)
        throw InputError("coloring table entry " + std::to_string(c) + " is not below " +
                         std::to_string(colors) + " colors");
      table_.push_back(c);
    }
  }
}

std::uint32_t ProductColoring::color(std::uint32_t x, std::uint32_t y) const {
  if (generator_) return generated_color(*generator_, colors_, x, y);
  return table_[std::size_t{x} * y_size_ + y];
}

std::uint64_t rectangle_row_threshold(std::uint32_t colors, std::uint32_t lambda) {
  return std::uint64_t{colors} * (lambda - 1) + 1;
}

std::uint64_t rectangle_fiber_bound(std::uint32_t x_size, std::uint32_t y_size,
                                    std::uint32_t colors, std::uint32_t lambda) {
  const std::uint64_t keys = binomial(x_size, lambda) * colors;
  return keys == 0 ? 0 : (y_size + keys - 1) / keys;
}

std::vector<Rectangle> rectangle_fibers(const ProductColoring& c, std::uint32_t lambda) {
  if (lambda == 0) throw PremiseError("rectangle width λ must be positive");
  if (c.y_size() == 0) throw PremiseError("|Y| must be at least 1");
  const std::uint64_t threshold = rectangle_row_threshold(c.colors(), lambda);
  if (c.x_size() < threshold) {
    std::ostringstream os;
    os << "|X| = " << c.x_size() << " is below the pigeonhole threshold c(λ-1)+1 = "
       << threshold << " for c = " << c.colors() << ", λ = " << lambda;
    throw PremiseError(os.str());
  }

  std::map<std::pair<ElementSet, std::uint32_t>, ElementSet> fibers;
  std::vector<ElementSet> by_color(c.colors());
  for (std::uint32_t y = 0; y < c.y_size(); ++y) {
    for (auto& s : by_color) s.clear();
    for (std::uint32_t x = 0; x < c.x_size(); ++x) {
      auto& s = by_color[c.color(x, y)];
      if (s.size() < lambda) s.push_back(x);
    }
    std::optional<std::uint32_t> best;
    for (std::uint32_t t = 0; t < c.colors(); ++t) {
      if (by_color[t].size() < lambda) continue;
      if (!best || by_color[t] < by_color[*best]) best = t;
    }
    if (!best) throw InternalInconsistency("row " + std::to_string(y) + " has no λ equal cells");
    fibers[{by_color[*best], *best}].push_back(y);
  }

  std::vector<Rectangle> out;
  for (auto& [key, z] : fibers) out.push_back(Rectangle{key.first, std::move(z), key.second});
  std::stable_sort(out.begin(), out.end(),
                   [](const Rectangle& l, const Rectangle& r) { return l.z.size() > r.z.size(); });
  return out;
}

Rectangle monochrome_rectangle(const ProductColoring& c, std::uint32_t lambda) {
  return rectangle_fibers(c, lambda).front();
}

bool verify_rectangle(const ProductColoring& c, const Rectangle& r) {
  if (r.a.empty() || r.z.empty()) return false;
  for (std::uint32_t x : r.a) {
    if (x >= c.x_size()) return false;
    for (std::uint32_t y : r.z)
      if (y >= c.y_size() || c.color(x, y) != r.color) return false;
  }
  return true;
}

// ---- group quadruples -------------------------------------------------------

GroupColoring::GroupColoring(std::uint32_t colors, ColoringGenerator generator)
    : colors_(colors), generator_(generator) {
  if (colors == 0) throw InputError("a coloring needs at least one color");
}

GroupColoring::GroupColoring(std::uint32_t colors, std::vector<std::uint32_t> table)
    : colors_(colors), table_(std::move(table)) {
  if (colors == 0) throw InputError("a coloring needs at least one color");
  for (std::uint32_t c : table_)
    if (c >= colors)
      throw InputError("coloring entry " + std::to_string(c) + " is not below " +
                       std::to_string(colors) + " colors");
}

std::uint32_t GroupColoring::color(Element g) const {
  if (generator_) return generated_color(*generator_, colors_, g, 0);
  if (g >= table_.size())
    throw InputError("coloring has no entry for element " + std::to_string(g));
  return table_[g];
}

std::uint64_t quad_threshold(std::uint32_t colors) {
  const std::uint64_t x = std::uint64_t{colors} + 1;
  return 2 * x + 3 * binomial(x, 2) * colors + 1;
}

QuadCertificate theorem2_quad(const FiniteGroup& g, const GroupColoring& chi) {
  const std::uint32_t c = chi.colors();
  const std::uint64_t needed = quad_threshold(c);
  const std::uint64_t available = g.order() - 1;
  if (available < needed) {
    std::ostringstream os;
    os << "|G \\ {e}| = " << available << " is below the threshold 2(c+1) + 3·C(c+1,2)·c + 1 = "
       << needed << " for c = " << c;
    throw PremiseError(os.str());
  }

  std::vector<Element> xs, ys;
  for (Element v = 0; v < g.order() && xs.size() < c + 1; ++v)
    if (v != g.identity()) xs.push_back(v);
  ElementSet excluded = make_set(xs);
  for (Element v : xs) excluded = with(excluded, g.inverse(v));
  for (Element v = 0; v < g.order(); ++v)
    if (v != g.identity() && !contains(excluded, v)) ys.push_back(v);

  std::vector<std::vector<std::uint32_t>> table(xs.size(), std::vector<std::uint32_t>(ys.size()));
  for (std::size_t i = 0; i < xs.size(); ++i)
    for (std::size_t j = 0; j < ys.size(); ++j) table[i][j] = chi.color(g.multiply(xs[i], ys[j]));
  const ProductColoring induced(c, std::move(table));

  for (const Rectangle& fiber : rectangle_fibers(induced, 2)) {
    const Element a = xs[fiber.a[0]];
    const Element b = xs[fiber.a[1]];
    for (std::uint32_t zi : fiber.z) {
      const Element x = ys[zi];
      const Element skip1 = g.multiply(g.multiply(g.inverse(a), b), x);
      const Element skip2 = g.multiply(g.multiply(g.inverse(b), a), x);
      for (std::uint32_t zj : fiber.z) {
        const Element y = ys[zj];
        if (y == x || y == skip1 || y == skip2) continue;
        QuadCertificate q;
        q.a = a;
        q.b = b;
        q.x = x;
        q.y = y;
        q.elements = {g.multiply(a, x), g.multiply(b, x), g.multiply(a, y), g.multiply(b, y)};
        q.color = fiber.color;
        q.relation_holds =
            q.elements[0] ==
            g.multiply(g.multiply(q.elements[2], g.inverse(q.elements[3])), q.elements[1]);
        if (verify_quad(g, chi, q)) return q;
      }
    }
  }
  throw InternalInconsistency("no rectangle fiber admitted a quadruple despite met premises");
}

bool verify_quad(const FiniteGroup& g, const GroupColoring& chi, const QuadCertificate& q) {
  if (q.elements.size() != 4) return false;
  for (Element v : {q.a, q.b, q.x, q.y}) {
    if (v >= g.order()) return false;
  }
  const std::vector<Element> expected = {g.multiply(q.a, q.x), g.multiply(q.b, q.x),
                                         g.multiply(q.a, q.y), g.multiply(q.b, q.y)};
  if (expected != q.elements) return false;
  if (make_set(q.elements).size() != 4) return false;
  for (Element v : q.elements)
    if (v == g.identity() || chi.color(v) != q.color) return false;
  const Element ax = q.elements[0], bx = q.elements[1], ay = q.elements[2], by = q.elements[3];
  return q.relation_holds && ax == g.multiply(g.multiply(ay, g.inverse(by)), bx);
}

// ---- edge colorings ---------------------------------------------------------

EdgeColoring::EdgeColoring(std::uint32_t vertices, std::uint32_t colors,
                           std::vector<std::uint32_t> pair_colors)
    : n_(vertices), colors_(colors), pairs_(std::move(pair_colors)) {
  const std::size_t expected = std::size_t{n_} * (n_ > 0 ? n_ - 1 : 0) / 2;
  if (pairs_.size() != expected)
    throw InputError("edge coloring of K_" + std::to_string(n_) + " needs " +
                     std::to_string(expected) + " colors, got " + std::to_string(pairs_.size()));
  for (std::uint32_t c : pairs_)
    if (c >= colors_)
      throw InputError("edge color " + std::to_string(c) + " is not below " +
                       std::to_string(colors_) + " colors");
}

std::size_t EdgeColoring::pair_index(std::uint32_t u, std::uint32_t v) const {
  if (u > v) std::swap(u, v);
  if (u == v || v >= n_)
    throw InputError("no edge between vertices " + std::to_string(u) + " and " +
                     std::to_string(v));
  return std::size_t{u} * n_ - std::size_t{u} * (u + 1) / 2 + (v - u - 1);
}

std::uint32_t EdgeColoring::color(std::uint32_t u, std::uint32_t v) const {
  return pairs_[pair_index(u, v)];
}

std::vector<std::uint32_t> EdgeColoring::colors_used() const {
  std::vector<char> used(colors_, 0);
  for (std::uint32_t c : pairs_) used[c] = 1;
  std::vector<std::uint32_t> out;
  for (std::uint32_t c = 0; c < colors_; ++c)
    if (used[c]) out.push_back(c);
  return out;
}

EdgeColoring prefix_coloring(std::uint32_t k, std::uint32_t limit) {
  if (k == 0) throw InputError("prefix coloring needs k >= 1");
  if (k > limit || k > 16) {
    const long double pairs = std::ldexp(1.0L, k) * (std::ldexp(1.0L, k) - 1) / 2;
    std::ostringstream os;
    os << "k = " << k << " exceeds the limit " << limit << "; K_{2^" << k << "} has "
       << static_cast<std::uint64_t>(pairs) << " edges (about "
       << static_cast<std::uint64_t>(pairs * 4 / (1 << 20)) << " MiB of colors)";
    throw InputError(os.str());
  }
  const std::uint32_t n = 1u << k;
  std::vector<std::uint32_t> colors;
  colors.reserve(std::size_t{n} * (n - 1) / 2);
  for (std::uint32_t u = 0; u < n; ++u)
    for (std::uint32_t v = u + 1; v < n; ++v)
      colors.push_back(static_cast<std::uint32_t>(std::countl_zero(u ^ v)) - (32 - k));
  return EdgeColoring(n, k, std::move(colors));
}

namespace {

using VertexPair = std::pair<std::uint32_t, std::uint32_t>;

// Edges grouped by color: edges[offsets[c] .. offsets[c+1]) have color c.
struct ColorBuckets {
  std::vector<std::size_t> offsets;
  std::vector<VertexPair> edges;
};

ColorBuckets bucket_by_color(const EdgeColoring& e) {
  ColorBuckets b;
  b.offsets.assign(std::size_t{e.colors()} + 1, 0);
  for (std::uint32_t c : e.pair_colors()) ++b.offsets[c + 1];
  std::partial_sum(b.offsets.begin(), b.offsets.end(), b.offsets.begin());
  std::vector<std::size_t> pos(b.offsets.begin(), b.offsets.end() - 1);
  b.edges.resize(e.pair_colors().size());
  std::size_t idx = 0;
  for (std::uint32_t u = 0; u < e.vertices(); ++u)
    for (std::uint32_t v = u + 1; v < e.vertices(); ++v)
      b.edges[pos[e.pair_colors()[idx++]]++] = {u, v};
  return b;
}

// Adjacency lists over a reusable vertex array, reset per color.
struct ColorGraph {
  explicit ColorGraph(std::uint32_t n) : adj(n) {}

  void load(std::span<const VertexPair> edges) {
    for (std::uint32_t v : touched) adj[v].clear();
    touched.clear();
    for (auto [u, v] : edges) {
      if (adj[u].empty()) touched.push_back(u);
      if (adj[v].empty()) touched.push_back(v);
      adj[u].push_back(v);
      adj[v].push_back(u);
    }
  }

  std::vector<std::vector<std::uint32_t>> adj;
  std::vector<std::uint32_t> touched;
};

}  // namespace

CycleReport verify_no_monochrome_odd_cycle(const EdgeColoring& e) {
  const ColorBuckets buckets = bucket_by_color(e);
  ColorGraph graph(e.vertices());
  constexpr std::uint32_t kNone = std::numeric_limits<std::uint32_t>::max();
  std::vector<std::uint32_t> side(e.vertices(), kNone), parent(e.vertices(), kNone),
      depth(e.vertices(), 0);

  for (std::uint32_t c = 0; c < e.colors(); ++c) {
    const std::span<const VertexPair> edges(buckets.edges.data() + buckets.offsets[c],
                                            buckets.offsets[c + 1] - buckets.offsets[c]);
    if (edges.empty()) continue;
    graph.load(edges);
    std::vector<std::uint32_t> starts = graph.touched;
    std::sort(starts.begin(), starts.end());
    for (std::uint32_t v : starts) side[v] = kNone;
    for (std::uint32_t root : starts) {
      if (side[root] != kNone) continue;
      side[root] = 0;
      parent[root] = kNone;
      depth[root] = 0;
      std::deque<std::uint32_t> queue{root};
      while (!queue.empty()) {
        const std::uint32_t cur = queue.front();
        queue.pop_front();
        for (std::uint32_t w : graph.adj[cur]) {
          if (side[w] == kNone) {
            side[w] = side[cur] ^ 1;
            parent[w] = cur;
            depth[w] = depth[cur] + 1;
            queue.push_back(w);
          } else if (side[w] == side[cur]) {
            // Walk both endpoints up to their common ancestor.
            std::vector<std::uint32_t> left{cur}, right{w};
            std::uint32_t l = cur, r = w;
            while (depth[l] > depth[r]) left.push_back(l = parent[l]);
            while (depth[r] > depth[l]) right.push_back(r = parent[r]);
            while (l != r) {
              left.push_back(l = parent[l]);
              right.push_back(r = parent[r]);
            }
            right.pop_back();
            CycleReport report{false, c, std::move(left)};
            report.cycle.insert(report.cycle.end(), right.rbegin(), right.rend());
            return report;
          }
        }
      }
    }
  }
  return {};
}

CycleReport verify_forest_classes(const EdgeColoring& e) {
  const ColorBuckets buckets = bucket_by_color(e);
  std::vector<std::uint32_t> parent(e.vertices());
  std::iota(parent.begin(), parent.end(), 0u);
  auto find = [&](std::uint32_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  ColorGraph forest(e.vertices());

  for (std::uint32_t c = 0; c < e.colors(); ++c) {
    const std::size_t begin = buckets.offsets[c], end = buckets.offsets[c + 1];
    if (begin == end) continue;
    std::vector<std::uint32_t> touched;
    for (std::size_t i = begin; i < end; ++i) {
      const auto [u, v] = buckets.edges[i];
      touched.push_back(u);
      touched.push_back(v);
      if (find(u) != find(v)) {
        parent[find(u)] = find(v);
        continue;
      }
      // Cycle: the forest path from u to v plus the edge (v, u).
      forest.load(std::span<const VertexPair>(buckets.edges.data() + begin, i - begin));
      std::vector<std::uint32_t> prev(e.vertices(), std::numeric_limits<std::uint32_t>::max());
      std::deque<std::uint32_t> queue{u};
      prev[u] = u;
      while (!queue.empty() && prev[v] == std::numeric_limits<std::uint32_t>::max()) {
        const std::uint32_t cur = queue.front();
        queue.pop_front();
        for (std::uint32_t w : forest.adj[cur])
          if (prev[w] == std::numeric_limits<std::uint32_t>::max()) {
            prev[w] = cur;
            queue.push_back(w);
          }
      }
      std::vector<std::uint32_t> path;
      for (std::uint32_t x = v; x != u; x = prev[x]) path.push_back(x);
      path.push_back(u);
      std::reverse(path.begin(), path.end());
      return CycleReport{false, c, std::move(path)};
    }
    for (std::uint32_t v : touched) parent[v] = v;
  }
  return {};
}

Rectangle monochrome_bipartite(const EdgeColoring& e, std::uint32_t lambda) {
  if (e.vertices() < 2) throw PremiseError("monochrome_bipartite needs at least 2 vertices");
  const std::uint32_t half = (e.vertices() + 1) / 2;
  std::vector<std::vector<std::uint32_t>> table(half,
                                                std::vector<std::uint32_t>(e.vertices() - half));
  for (std::uint32_t x = 0; x < half; ++x)
    for (std::uint32_t y = half; y < e.vertices(); ++y) table[x][y - half] = e.color(x, y);
  Rectangle r = monochrome_rectangle(ProductColoring(e.colors(), std::move(table)), lambda);
  for (auto& z : r.z) z += half;
  return r;
}

std::vector<std::uint32_t> even_cycle(const Rectangle& r, std::uint32_t m) {
  if (m < 2 || m > r.a.size() || m > r.z.size())
    throw InputError("even cycle half-length m = " + std::to_string(m) + " must lie in 2.." +
                     std::to_string(std::min(r.a.size(), r.z.size())));
  std::vector<std::uint32_t> cycle;
  for (std::uint32_t i = 0; i < m; ++i) {
    cycle.push_back(r.a[i]);
    cycle.push_back(r.z[i]);
  }
  return cycle;
}

std::optional<std::vector<std::uint32_t>> find_monochrome_four_cycle(const EdgeColoring& e,
                                                                     std::uint32_t color) {
  const std::uint32_t n = e.vertices();
  for (std::uint32_t u = 0; u < n; ++u)
    for (std::uint32_t v = u + 1; v < n; ++v) {
      std::vector<std::uint32_t> common;
      for (std::uint32_t w = 0; w < n && common.size() < 2; ++w)
        if (w != u && w != v && e.color(u, w) == color && e.color(v, w) == color)
          common.push_back(w);
      if (common.size() == 2) return std::vector<std::uint32_t>{u, common[0], v, common[1]};
    }
  return std::nullopt;
}

std::optional<std::uint32_t> monochrome_cycle_color(const EdgeColoring& e,
                                                    const std::vector<std::uint32_t>& cycle) {
  if (cycle.size() < 3) return std::nullopt;
  for (std::uint32_t v : cycle)
    if (v >= e.vertices()) return std::nullopt;
  if (make_set({cycle.begin(), cycle.end()}).size() != cycle.size()) return std::nullopt;
  const std::uint32_t c = e.color(cycle.back(), cycle.front());
  for (std::size_t i = 0; i + 1 < cycle.size(); ++i)
    if (e.color(cycle[i], cycle[i + 1]) != c) return std::nullopt;
  return c;
}

}  // namespace hullcover
