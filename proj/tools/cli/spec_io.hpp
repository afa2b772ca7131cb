#pragma once

// Reading matroid, group and coloring descriptions from JSON, and rendering
// library results back to JSON with element labels.

#include <optional>
#include <string>
#include <vector>

#include "json.hpp"

#include "hullcover/abelian.hpp"
#include "hullcover/errors.hpp"
#include "hullcover/group.hpp"
#include "hullcover/hull.hpp"
#include "hullcover/partition.hpp"
#include "hullcover/ramsey.hpp"
#include "hullcover/zoo.hpp"

namespace hullcover::cli {

using Json = nlohmann::ordered_json;

// Malformed description; the message names the offending field.
class ParseError : public InputError {
 public:
  explicit ParseError(const std::string& what) : InputError(what) {}
};

Json read_json_file(const std::string& path);
Json parse_json_text(const std::string& text, const std::string& source);

struct BuiltMatroid {
  MatroidInstance matroid;
  std::optional<GraphSpec> graph;  // set for kind "graphic"
};

// Kinds: vector_fp, vector_q, graphic, abelian, integer_subgroup,
// integer_linear.
BuiltMatroid build_matroid(const Json& spec);

FiniteAbelianGroup parse_abelian_group(const Json& orders, const std::string& field);
FiniteGroup build_group(const Json& spec);
GroupColoring build_group_coloring(const Json& spec, const FiniteGroup& g);
ProductColoring build_product_coloring(const Json& spec);
Budget parse_budget(const std::string& text, std::uint64_t seed);
Json budget_to_json(const Budget& budget);
Budget budget_from_json(const Json& j);

// "p/q" or "n"; exact.
mpq_class parse_rational(const std::string& text, const std::string& field);
// "1" or "0,1" for the residue tuple of a group element.
Element parse_group_element(const FiniteAbelianGroup& g, const std::string& text);
// Elements separated by ';'.
std::vector<Element> parse_group_elements(const FiniteAbelianGroup& g, const std::string& text);
std::vector<std::uint64_t> parse_orders(const std::string& text);

Json element_json(const GroundSet& ground, Element x);
Json elements_json(const GroundSet& ground, std::span<const Element> xs);
Json group_element_json(const FiniteAbelianGroup& g, Element x);
Json group_elements_json(const FiniteAbelianGroup& g, std::span<const Element> xs);

Json axiom_report_json(const MatroidInstance& m, const AxiomReport& r);
Json partition_json(const MatroidInstance& m, const IndependentPartition& p);
Json partition_report_json(const MatroidInstance& m, const PartitionReport& r);
Json cycle_report_json(const CycleReport& r);

}  // namespace hullcover::cli
