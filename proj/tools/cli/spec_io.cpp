#include "cli/spec_io.hpp"

#include <fstream>
#include <regex>
#include <set>
#include <sstream>

namespace hullcover::cli {

namespace {

void require_object(const Json& j, const std::string& ctx) {
  if (!j.is_object()) throw ParseError(ctx + ": expected an object");
}

void check_keys(const Json& j, std::initializer_list<const char*> allowed, const std::string& ctx) {
  const std::set<std::string> ok(allowed.begin(), allowed.end());
  for (const auto& item : j.items())
    if (!ok.count(item.key())) throw ParseError(ctx + ": unknown field '" + item.key() + "'");
}

const Json& require(const Json& j, const std::string& key, const std::string& ctx) {
  auto it = j.find(key);
  if (it == j.end()) throw ParseError(ctx + ": missing field '" + key + "'");
  return *it;
}

std::uint64_t as_uint(const Json& j, const std::string& field) {
  if (!j.is_number_unsigned() && !(j.is_number_integer() && j.get<std::int64_t>() >= 0))
    throw ParseError("field '" + field + "': expected a non-negative integer");
  return j.get<std::uint64_t>();
}

std::uint32_t as_u32(const Json& j, const std::string& field) {
  const std::uint64_t v = as_uint(j, field);
  if (v > std::numeric_limits<std::uint32_t>::max())
    throw ParseError("field '" + field + "': value too large");
  return static_cast<std::uint32_t>(v);
}

std::uint64_t get_uint(const Json& j, const std::string& key, const std::string& ctx) {
  return as_uint(require(j, key, ctx), ctx + "." + key);
}

const Json& require_array(const Json& j, const std::string& key, const std::string& ctx) {
  const Json& a = require(j, key, ctx);
  if (!a.is_array()) throw ParseError("field '" + ctx + "." + key + "': expected an array");
  return a;
}

mpq_class json_rational(const Json& j, const std::string& field) {
  if (j.is_number_integer()) return mpq_class(mpz_class(std::to_string(j.get<std::int64_t>())));
  if (j.is_string()) return parse_rational(j.get<std::string>(), field);
  throw ParseError("field '" + field + "': expected an integer or a \"p/q\" string");
}

}  // namespace

Json parse_json_text(const std::string& text, const std::string& source) {
  try {
    return Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw ParseError(source + ": " + e.what());
  }
}

Json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open '" + path + "'");
  std::stringstream buf;
  buf << in.rdbuf();
  return parse_json_text(buf.str(), path);
}

mpq_class parse_rational(const std::string& text, const std::string& field) {
  static const std::regex pattern(R"(\s*([+-]?\d+)(?:\s*/\s*(\d+))?\s*)");
  std::smatch m;
  if (!std::regex_match(text, m, pattern))
    throw ParseError("field '" + field + "': '" + text + "' is not a rational \"p/q\"");
  mpz_class num(m[1].str()[0] == '+' ? m[1].str().substr(1) : m[1].str());
  mpz_class den(m[2].matched ? m[2].str() : "1");
  if (den == 0) throw ParseError("field '" + field + "': zero denominator in '" + text + "'");
  mpq_class q(num, den);
  q.canonicalize();
  return q;
}

BuiltMatroid build_matroid(const Json& spec) {
  require_object(spec, "matroid spec");
  const Json& kind_j = require(spec, "kind", "matroid spec");
  if (!kind_j.is_string()) throw ParseError("field 'kind': expected a string");
  const std::string kind = kind_j.get<std::string>();
  const std::string ctx = kind;

  if (kind == "vector_fp" || kind == "vector_q") {
    VectorMatroidSpec vs;
    if (kind == "vector_fp") {
      check_keys(spec, {"kind", "p", "dim", "vectors"}, ctx);
      vs.prime = get_uint(spec, "p", ctx);
      if (spec.contains("dim")) vs.full_space_dimension = as_uint(spec["dim"], ctx + ".dim");
    } else {
      check_keys(spec, {"kind", "vectors"}, ctx);
    }
    if (spec.contains("vectors") || !vs.full_space_dimension) {
      const Json& vectors = require_array(spec, "vectors", ctx);
      for (std::size_t i = 0; i < vectors.size(); ++i) {
        const std::string f = ctx + ".vectors[" + std::to_string(i) + "]";
        if (!vectors[i].is_array()) throw ParseError("field '" + f + "': expected an array");
        std::vector<mpq_class> v;
        for (std::size_t c = 0; c < vectors[i].size(); ++c)
          v.push_back(json_rational(vectors[i][c], f + "[" + std::to_string(c) + "]"));
        vs.vectors.push_back(std::move(v));
      }
    }
    return {build_vector_matroid(vs), std::nullopt};
  }
  if (kind == "graphic") {
    check_keys(spec, {"kind", "complete", "vertices", "edges"}, ctx);
    GraphSpec gs;
    if (spec.contains("complete")) {
      if (spec.contains("vertices") || spec.contains("edges"))
        throw ParseError(ctx + ": 'complete' excludes 'vertices' and 'edges'");
      gs.complete = true;
      gs.vertices = as_u32(spec["complete"], ctx + ".complete");
    } else {
      gs.vertices = static_cast<std::uint32_t>(get_uint(spec, "vertices", ctx));
      const Json& edges = require_array(spec, "edges", ctx);
      for (std::size_t i = 0; i < edges.size(); ++i) {
        const std::string f = ctx + ".edges[" + std::to_string(i) + "]";
        if (!edges[i].is_array() || edges[i].size() != 2)
          throw ParseError("field '" + f + "': expected a pair of vertices");
        gs.edges.emplace_back(as_u32(edges[i][0], f), as_u32(edges[i][1], f));
      }
    }
    if (gs.vertices > 64) throw ParseError(ctx + ": at most 64 vertices supported");
    MatroidInstance m = build_graphic_matroid(gs);
    return {std::move(m), gs};
  }
  if (kind == "abelian") {
    check_keys(spec, {"kind", "orders"}, ctx);
    return {build_abelian_linear_matroid(parse_abelian_group(require(spec, "orders", ctx),
                                                             ctx + ".orders")),
            std::nullopt};
  }
  if (kind == "integer_subgroup" || kind == "integer_linear") {
    check_keys(spec, {"kind", "window"}, ctx);
    IntegerHullSpec is;
    is.window = static_cast<std::int64_t>(get_uint(spec, "window", ctx));
    is.variant = kind == "integer_subgroup" ? IntegerHullVariant::Subgroup
                                            : IntegerHullVariant::Linear;
    return {build_integer_hull(is), std::nullopt};
  }
  throw ParseError("field 'kind': unknown matroid kind '" + kind +
                   "' (expected vector_fp, vector_q, graphic, abelian, integer_subgroup or "
                   "integer_linear)");
}

FiniteAbelianGroup parse_abelian_group(const Json& orders, const std::string& field) {
  if (!orders.is_array() || orders.empty())
    throw ParseError("field '" + field + "': expected a non-empty array of cyclic orders");
  std::vector<std::uint64_t> out;
  for (std::size_t i = 0; i < orders.size(); ++i)
    out.push_back(as_uint(orders[i], field + "[" + std::to_string(i) + "]"));
  return FiniteAbelianGroup(std::move(out));
}

FiniteGroup build_group(const Json& spec) {
  require_object(spec, "group");
  check_keys(spec, {"orders", "table", "labels"}, "group");
  if (spec.contains("orders")) {
    if (spec.contains("table")) throw ParseError("group: give either 'orders' or 'table'");
    return FiniteGroup::from_abelian(parse_abelian_group(spec["orders"], "group.orders"));
  }
  const Json& table = require_array(spec, "table", "group");
  std::vector<std::vector<std::uint32_t>> rows;
  for (std::size_t r = 0; r < table.size(); ++r) {
    const std::string f = "group.table[" + std::to_string(r) + "]";
    if (!table[r].is_array()) throw ParseError("field '" + f + "': expected an array");
    std::vector<std::uint32_t> row;
    for (const Json& v : table[r]) row.push_back(as_u32(v, f));
    rows.push_back(std::move(row));
  }
  std::vector<std::string> labels;
  if (spec.contains("labels")) {
    const Json& l = spec["labels"];
    if (!l.is_array()) throw ParseError("field 'group.labels': expected an array of strings");
    for (const Json& s : l) {
      if (!s.is_string()) throw ParseError("field 'group.labels': expected strings");
      labels.push_back(s.get<std::string>());
    }
  }
  return FiniteGroup(std::move(rows), std::move(labels));
}

namespace {

ColoringGenerator parse_generator(const Json& j, const std::string& ctx) {
  require_object(j, ctx);
  check_keys(j, {"formula", "seed"}, ctx);
  const Json& f = require(j, "formula", ctx);
  if (!f.is_string()) throw ParseError("field '" + ctx + ".formula': expected a string");
  ColoringGenerator gen;
  try {
    gen.formula = parse_coloring_formula(f.get<std::string>());
  } catch (const InputError& e) {
    throw ParseError("field '" + ctx + ".formula': " + e.what());
  }
  if (j.contains("seed")) gen.seed = as_uint(j["seed"], ctx + ".seed");
  return gen;
}

}  // namespace

GroupColoring build_group_coloring(const Json& spec, const FiniteGroup& g) {
  require_object(spec, "coloring");
  check_keys(spec, {"colors", "generator", "table"}, "coloring");
  const std::uint32_t colors = as_u32(require(spec, "colors", "coloring"), "coloring.colors");
  if (spec.contains("generator")) {
    if (spec.contains("table")) throw ParseError("coloring: give either 'generator' or 'table'");
    return GroupColoring(colors, parse_generator(spec["generator"], "coloring.generator"));
  }
  const Json& table = require_array(spec, "table", "coloring");
  if (table.size() != g.order())
    throw ParseError("field 'coloring.table': expected " + std::to_string(g.order()) +
                     " entries, one per group element");
  std::vector<std::uint32_t> t;
  for (const Json& v : table) t.push_back(as_u32(v, "coloring.table"));
  return GroupColoring(colors, std::move(t));
}

ProductColoring build_product_coloring(const Json& spec) {
  require_object(spec, "coloring");
  check_keys(spec, {"x_size", "y_size", "colors", "generator", "table"}, "coloring");
  const std::uint32_t colors = as_u32(require(spec, "colors", "coloring"), "coloring.colors");
  if (spec.contains("generator")) {
    if (spec.contains("table")) throw ParseError("coloring: give either 'generator' or 'table'");
    return ProductColoring(as_u32(require(spec, "x_size", "coloring"), "coloring.x_size"),
                           as_u32(require(spec, "y_size", "coloring"), "coloring.y_size"), colors,
                           parse_generator(spec["generator"], "coloring.generator"));
  }
  const Json& table = require_array(spec, "table", "coloring");
  std::vector<std::vector<std::uint32_t>> rows;
  for (std::size_t x = 0; x < table.size(); ++x) {
    const std::string f = "coloring.table[" + std::to_string(x) + "]";
    if (!table[x].is_array()) throw ParseError("field '" + f + "': expected an array");
    std::vector<std::uint32_t> row;
    for (const Json& v : table[x]) row.push_back(as_u32(v, f));
    rows.push_back(std::move(row));
  }
  ProductColoring c(colors, std::move(rows));
  if (spec.contains("x_size") && as_uint(spec["x_size"], "coloring.x_size") != c.x_size())
    throw ParseError("field 'coloring.x_size' disagrees with the table");
  if (spec.contains("y_size") && as_uint(spec["y_size"], "coloring.y_size") != c.y_size())
    throw ParseError("field 'coloring.y_size' disagrees with the table");
  return c;
}

Budget parse_budget(const std::string& text, std::uint64_t seed) {
  std::vector<std::string> parts;
  std::stringstream ss(text);
  for (std::string p; std::getline(ss, p, ':');) parts.push_back(p);
  auto number = [&](const std::string& s) -> std::uint64_t {
    if (s.empty() || s.find_first_not_of("0123456789") != std::string::npos)
      throw ParseError("budget '" + text + "': '" + s + "' is not a number");
    return std::stoull(s);
  };
  if (!parts.empty() && parts[0] == "exhaustive" && parts.size() <= 2) {
    ExhaustiveBudget b;
    if (parts.size() == 2) b.max_subset_size = number(parts[1]);
    return b;
  }
  if (!parts.empty() && parts[0] == "sampled" && parts.size() >= 2 && parts.size() <= 3) {
    SampledBudget b;
    b.seed = seed;
    b.count = number(parts[1]);
    if (parts.size() == 3) b.max_subset_size = number(parts[2]);
    return b;
  }
  throw ParseError("budget '" + text +
                   "': expected exhaustive[:K] or sampled:COUNT[:K]");
}

Json budget_to_json(const Budget& budget) {
  Json j;
  if (const auto* e = std::get_if<ExhaustiveBudget>(&budget)) {
    j["mode"] = "exhaustive";
    j["max_subset_size"] = e->max_subset_size;
  } else {
    const auto& s = std::get<SampledBudget>(budget);
    j["mode"] = "sampled";
    j["seed"] = s.seed;
    j["count"] = s.count;
    j["max_subset_size"] = s.max_subset_size;
  }
  return j;
}

Budget budget_from_json(const Json& j) {
  require_object(j, "budget");
  const Json& mode = require(j, "mode", "budget");
  if (mode == "exhaustive") {
    check_keys(j, {"mode", "max_subset_size"}, "budget");
    return ExhaustiveBudget{get_uint(j, "max_subset_size", "budget")};
  }
  if (mode == "sampled") {
    check_keys(j, {"mode", "seed", "count", "max_subset_size"}, "budget");
    return SampledBudget{get_uint(j, "seed", "budget"), get_uint(j, "count", "budget"),
                         get_uint(j, "max_subset_size", "budget")};
  }
  throw ParseError("field 'budget.mode': expected exhaustive or sampled");
}

std::vector<std::uint64_t> parse_orders(const std::string& text) {
  std::vector<std::uint64_t> out;
  std::stringstream ss(text);
  for (std::string p; std::getline(ss, p, ',');) {
    if (p.empty() || p.find_first_not_of("0123456789") != std::string::npos)
      throw ParseError("group '" + text + "': expected comma-separated cyclic orders");
    out.push_back(std::stoull(p));
  }
  if (out.empty()) throw ParseError("group: no cyclic orders given");
  return out;
}

Element parse_group_element(const FiniteAbelianGroup& g, const std::string& text) {
  std::string body = text;
  if (!body.empty() && body.front() == '(' && body.back() == ')')
    body = body.substr(1, body.size() - 2);
  Residues tuple;
  std::stringstream ss(body);
  for (std::string p; std::getline(ss, p, ',');) {
    if (p.empty() || p.find_first_not_of("0123456789") != std::string::npos)
      throw ParseError("element '" + text + "': expected a residue tuple like 0,1");
    tuple.push_back(std::stoull(p));
  }
  return g.index_of(tuple);
}

std::vector<Element> parse_group_elements(const FiniteAbelianGroup& g, const std::string& text) {
  std::vector<Element> out;
  if (text.empty()) return out;
  std::stringstream ss(text);
  for (std::string p; std::getline(ss, p, ';');) out.push_back(parse_group_element(g, p));
  return out;
}

Json element_json(const GroundSet& ground, Element x) {
  Json j;
  j["id"] = x;
  j["label"] = ground.label(x);
  return j;
}

Json elements_json(const GroundSet& ground, std::span<const Element> xs) {
  Json j = Json::array();
  for (Element x : xs) j.push_back(element_json(ground, x));
  return j;
}

Json group_element_json(const FiniteAbelianGroup& g, Element x) {
  Json j;
  j["id"] = x;
  j["label"] = g.label(x);
  return j;
}

Json group_elements_json(const FiniteAbelianGroup& g, std::span<const Element> xs) {
  Json j = Json::array();
  for (Element x : xs) j.push_back(group_element_json(g, x));
  return j;
}

Json axiom_report_json(const MatroidInstance& m, const AxiomReport& r) {
  Json j;
  j["axiom"] = r.axiom;
  j["verdict"] = r.holds() ? "holds-on-budget" : "violated";
  if (r.witness) {
    Json w;
    w["A"] = elements_json(m.ground(), r.witness->a);
    w["x"] = r.witness->x ? element_json(m.ground(), *r.witness->x) : Json();
    w["y"] = r.witness->y ? element_json(m.ground(), *r.witness->y) : Json();
    j["witness"] = std::move(w);
    j["reproduced"] = reproduces(m, r);
  } else {
    j["witness"] = nullptr;
  }
  j["budget"] = r.budget;
  j["tuples_checked"] = r.tuples_checked;
  return j;
}

Json partition_json(const MatroidInstance& m, const IndependentPartition& p) {
  Json layers;
  layers["basis"] = elements_json(m.ground(), p.layers.basis);
  layers["sizes"] = p.layers.layer_sizes();
  Json list = Json::array();
  for (const auto& layer : p.layers.layers) list.push_back(elements_json(m.ground(), layer));
  layers["layers"] = std::move(list);

  Json classes = Json::array();
  for (std::size_t i = 0; i < p.classes.size(); ++i) {
    Json c;
    c["index"] = i;
    c["elements"] = elements_json(m.ground(), p.classes[i]);
    c["independent"] = p.certificates[i].independent;
    c["circuit"] = p.certificates[i].circuit ? elements_json(m.ground(), *p.certificates[i].circuit)
                                             : Json();
    classes.push_back(std::move(c));
  }
  Json j;
  j["layers"] = std::move(layers);
  j["class_count"] = p.classes.size();
  j["classes"] = std::move(classes);
  return j;
}

Json partition_report_json(const MatroidInstance& m, const PartitionReport& r) {
  Json j;
  j["ok"] = r.ok;
  j["disjoint"] = r.disjoint;
  j["covers"] = r.covers;
  j["classes_independent"] = r.classes_independent;
  j["failing_class"] = r.failing_class ? Json(*r.failing_class) : Json();
  j["circuit"] = r.circuit ? elements_json(m.ground(), *r.circuit) : Json();
  j["message"] = r.message;
  return j;
}

Json cycle_report_json(const CycleReport& r) {
  Json j;
  j["ok"] = r.ok;
  j["color"] = r.color ? Json(*r.color) : Json();
  j["cycle"] = r.cycle;
  return j;
}

}  // namespace hullcover::cli
