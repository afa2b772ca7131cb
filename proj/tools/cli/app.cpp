#include "cli/app.hpp"

#include <chrono>
#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"

namespace hullcover::cli {

namespace {

std::vector<Element> parse_id_list(const std::string& text) {
  std::vector<Element> out;
  std::stringstream ss(text);
  for (std::string p; std::getline(ss, p, ',');) {
    if (p.empty() || p.find_first_not_of("0123456789") != std::string::npos)
      throw ParseError("element list '" + text + "': expected comma-separated indices");
    out.push_back(static_cast<Element>(std::stoul(p)));
  }
  return out;
}

Json matroid_summary(const MatroidInstance& m) {
  Json j;
  j["kind"] = to_string(m.kind());
  j["matroid"] = m.is_matroid();
  j["size"] = m.size();
  j["loops"] = elements_json(m.ground(), m.loops());
  return j;
}

// ---- subcommands ----------------------------------------------------------

CommandResult cmd_partition(const Json& params, Json& verdicts) {
  BuiltMatroid built = build_matroid(params.at("spec"));
  const MatroidInstance& m = built.matroid;
  std::optional<std::vector<Element>> basis;
  if (params.contains("basis") && !params["basis"].is_null())
    basis = params["basis"].get<std::vector<Element>>();

  const IndependentPartition p = theorem1_partition(m, basis);
  const PartitionReport report = verify_partition(m, p);

  CommandResult r;
  Json& out = r.output;
  out["matroid"] = matroid_summary(m);
  out["partition"] = partition_json(m, p);
  out["verification"] = partition_report_json(m, report);
  bool ok = report.ok && p.all_certified();

  if (built.graph && built.graph->complete && built.graph->vertices >= 2) {
    // Color each edge of K_n by its class: no color class may hold a cycle.
    std::vector<std::uint32_t> colors(p.class_of.begin(), p.class_of.end());
    EdgeColoring coloring(built.graph->vertices,
                          static_cast<std::uint32_t>(std::max<std::size_t>(p.classes.size(), 1)),
                          std::move(colors));
    const CycleReport forest = verify_forest_classes(coloring);
    out["forest_coloring"] = cycle_report_json(forest);
    ok = ok && forest.ok;
  }
  verdicts["certificates"] = ok ? "pass" : "fail";
  r.exit_code = ok ? kExitOk : kExitCertificate;
  return r;
}

CommandResult cmd_check_axioms(const Json& params, Json& verdicts) {
  BuiltMatroid built = build_matroid(params.at("spec"));
  const MatroidInstance& m = built.matroid;
  const Budget budget = budget_from_json(params.at("budget"));

  CommandResult r;
  r.output["matroid"] = matroid_summary(m);
  Json reports = Json::array();
  bool ok = true;
  for (const AxiomReport& report :
       {check_hull_axioms(m, budget), check_idempotent(m, budget), check_exchange(m, budget)}) {
    reports.push_back(axiom_report_json(m, report));
    verdicts[report.axiom] = report.holds() ? "holds-on-budget" : "violated";
    if (!report.holds() && (m.is_matroid() || !reproduces(m, report))) ok = false;
  }
  r.output["reports"] = std::move(reports);
  r.exit_code = ok ? kExitOk : kExitCertificate;
  return r;
}

CommandResult cmd_rectangle(const Json& params, Json& verdicts) {
  const ProductColoring c = build_product_coloring(params.at("coloring"));
  const auto lambda = params.at("lambda").get<std::uint32_t>();
  const Rectangle rect = monochrome_rectangle(c, lambda);
  const bool verified = verify_rectangle(c, rect);
  const std::uint64_t bound = rectangle_fiber_bound(c.x_size(), c.y_size(), c.colors(), lambda);

  CommandResult r;
  Json j;
  j["A"] = rect.a;
  j["Z"] = rect.z;
  j["color"] = rect.color;
  r.output["rectangle"] = std::move(j);
  r.output["row_threshold"] = rectangle_row_threshold(c.colors(), lambda);
  r.output["fiber_bound"] = bound;
  r.output["fiber_size"] = rect.z.size();
  r.output["verified"] = verified;
  const bool ok = verified && rect.z.size() >= bound;
  verdicts["rectangle"] = ok ? "pass" : "fail";
  r.exit_code = ok ? kExitOk : kExitCertificate;
  return r;
}

CommandResult cmd_quad(const Json& params, Json& verdicts) {
  const FiniteGroup g = build_group(params.at("group"));
  const GroupColoring chi = build_group_coloring(params.at("coloring"), g);
  const QuadCertificate q = theorem2_quad(g, chi);
  const bool verified = verify_quad(g, chi, q);

  auto labelled = [&](Element x) {
    Json e;
    e["id"] = x;
    e["label"] = g.label(x);
    return e;
  };
  CommandResult r;
  r.output["group_order"] = g.order();
  r.output["threshold"] = quad_threshold(chi.colors());
  Json cert;
  cert["a"] = labelled(q.a);
  cert["b"] = labelled(q.b);
  cert["x"] = labelled(q.x);
  cert["y"] = labelled(q.y);
  Json elems;
  const char* names[] = {"ax", "bx", "ay", "by"};
  for (std::size_t i = 0; i < 4; ++i) elems[names[i]] = labelled(q.elements[i]);
  cert["elements"] = std::move(elems);
  cert["color"] = q.color;
  cert["relation"] = "ax = ay*(by)^-1*bx";
  cert["relation_holds"] = q.relation_holds;
  r.output["certificate"] = std::move(cert);
  r.output["verified"] = verified;
  verdicts["quad"] = verified ? "pass" : "fail";
  r.exit_code = verified ? kExitOk : kExitCertificate;
  return r;
}

CommandResult cmd_prefix_color(const Json& params, Json& verdicts) {
  const auto k = params.at("k").get<std::uint32_t>();
  const bool verify = params.at("verify").get<bool>();
  const EdgeColoring e = prefix_coloring(k);

  CommandResult r;
  r.output["k"] = k;
  r.output["vertices"] = e.vertices();
  r.output["colors_used"] = e.colors_used().size();
  if (params.at("emit_coloring").get<bool>()) r.output["pair_colors"] = e.pair_colors();
  bool ok = e.colors_used().size() == k;
  if (verify) {
    const CycleReport odd = verify_no_monochrome_odd_cycle(e);
    r.output["odd_cycle_check"] = cycle_report_json(odd);
    ok = ok && odd.ok;
    if (k >= 2) {
      const auto cycle = find_monochrome_four_cycle(e, 0);
      const bool valid = cycle && monochrome_cycle_color(e, *cycle) == 0u;
      Json c;
      c["color"] = 0;
      c["cycle"] = cycle ? Json(*cycle) : Json();
      c["verified"] = valid;
      r.output["four_cycle"] = std::move(c);
      ok = ok && valid;
    }
  }
  verdicts["prefix_coloring"] = ok ? "pass" : "fail";
  r.exit_code = ok ? kExitOk : kExitCertificate;
  return r;
}

CommandResult cmd_group(const Json& params, Json& verdicts) {
  const FiniteAbelianGroup g = parse_abelian_group(params.at("orders"), "orders");
  const auto action = params.at("action").get<std::string>();
  auto elements = [&](const char* key) { return parse_group_elements(g, params.at(key)); };
  auto element = [&](const char* key) { return parse_group_element(g, params.at(key)); };

  CommandResult r;
  Json& out = r.output;
  out["order"] = g.order();
  out["exponent"] = g.exponent();
  bool ok = true;
  if (action == "torsion") {
    const auto n = params.at("n").get<std::uint64_t>();
    out["n"] = n;
    out["torsion"] = group_elements_json(g, n_torsion(g, n));
  } else if (action == "decompose") {
    const TorsionReport t = primary_decomposition(g);
    Json comps = Json::array();
    for (const auto& c : t.components) {
      Json j;
      j["prime"] = c.prime;
      j["size"] = c.elements.size();
      j["elements"] = group_elements_json(g, c.elements);
      comps.push_back(std::move(j));
    }
    out["components"] = std::move(comps);
    out["sizes_multiply"] = t.sizes_multiply;
    out["trivial_intersections"] = t.trivial_intersections;
    out["direct_sum"] = t.direct_sum;
    ok = t.direct_sum;
  } else if (action == "hull") {
    const auto set = make_set(elements("set"));
    out["set"] = group_elements_json(g, set);
    out["subgroup"] = group_elements_json(g, subgroup_closure(g, set));
    out["linear_hull"] = group_elements_json(g, linear_hull(g, set));
  } else if (action == "independence") {
    const auto set = make_set(elements("set"));
    out["set"] = group_elements_json(g, set);
    const bool by_hull = is_linearly_independent_by_hull(g, set);
    out["linearly_independent"] = is_linearly_independent(g, set);
    out["by_hull"] = by_hull;
    if (set.size() <= kDirectIndependenceLimit) {
      const bool direct = is_linearly_independent_direct(g, set);
      out["by_definition"] = direct;
      ok = direct == by_hull;
    } else {
      out["by_definition"] = nullptr;
    }
    out["routes_agree"] = ok;
  } else if (action == "coset-pair") {
    const CosetPairCertificate c =
        dependent_coset_pair(g, params.at("p").get<std::uint64_t>(),
                             params.at("n").get<std::uint64_t>(), element("a"), element("x"),
                             element("y"));
    Json j;
    j["p"] = c.prime;
    j["n"] = c.power;
    j["multiplier"] = c.multiplier;
    j["a"] = group_element_json(g, c.a);
    j["x"] = group_element_json(g, c.x);
    j["y"] = group_element_json(g, c.y);
    j["pair"] = group_elements_json(g, std::vector<Element>{c.first, c.second});
    j["image"] = group_element_json(g, c.image);
    j["relation"] = "p^n(a+x) - p^n(a+y) = 0 with p^n(a+x) = p^n*a != 0";
    j["valid"] = c.valid;
    const Element pair[] = {c.first, c.second};
    j["pair_linearly_independent"] = is_linearly_independent(g, pair);
    ok = c.valid && !j["pair_linearly_independent"].get<bool>();
    out["certificate"] = std::move(j);
  } else {
    throw ParseError("unknown group action '" + action + "'");
  }
  verdicts[action] = ok ? "pass" : "fail";
  r.exit_code = ok ? kExitOk : kExitCertificate;
  return r;
}

std::optional<std::uint64_t> seed_of(const std::string& subcommand, const Json& params) {
  if (subcommand == "check-axioms" && params.at("budget").contains("seed"))
    return params["budget"]["seed"].get<std::uint64_t>();
  if (subcommand == "quad" || subcommand == "rectangle") {
    const Json& c = params.at("coloring");
    if (c.contains("generator") && c["generator"].contains("seed"))
      return c["generator"]["seed"].get<std::uint64_t>();
  }
  return std::nullopt;
}

}  // namespace

CommandResult run_command(const std::string& subcommand, const Json& params, bool record_timing) {
  const auto start = std::chrono::steady_clock::now();
  Json manifest;
  manifest["tool"] = kToolName;
  manifest["version"] = kToolVersion;
  manifest["subcommand"] = subcommand;
  manifest["params"] = params;
  const auto seed = seed_of(subcommand, params);
  manifest["seed"] = seed ? Json(*seed) : Json();
  Json verdicts = Json::object();

  CommandResult r;
  if (subcommand == "partition") r = cmd_partition(params, verdicts);
  else if (subcommand == "check-axioms") r = cmd_check_axioms(params, verdicts);
  else if (subcommand == "rectangle") r = cmd_rectangle(params, verdicts);
  else if (subcommand == "quad") r = cmd_quad(params, verdicts);
  else if (subcommand == "prefix-color") r = cmd_prefix_color(params, verdicts);
  else if (subcommand == "group") r = cmd_group(params, verdicts);
  else throw ParseError("unknown subcommand '" + subcommand + "'");

  manifest["verdicts"] = std::move(verdicts);
  manifest["exit_code"] = r.exit_code;
  if (record_timing) {
    const auto elapsed = std::chrono::steady_clock::now() - start;
    manifest["timing_ms"] =
        std::chrono::duration_cast<std::chrono::duration<double, std::milli>>(elapsed).count();
  }
  Json output;
  output["manifest"] = std::move(manifest);
  output["result"] = std::move(r.output);
  r.output = std::move(output);
  return r;
}

std::string render(const Json& output) { return output.dump(2) + "\n"; }

namespace {

int emit(const CommandResult& r, const std::string& out_path, std::ostream& out) {
  const std::string text = render(r.output);
  if (out_path.empty()) {
    out << text;
  } else {
    std::ofstream f(out_path, std::ios::binary);
    if (!f) throw InputError("cannot write '" + out_path + "'");
    f << text;
  }
  return r.exit_code;
}

int replay(const std::string& path, std::ostream& out) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot open '" + path + "'");
  std::stringstream buf;
  buf << in.rdbuf();
  const std::string original = buf.str();
  Json recorded = parse_json_text(original, path);
  if (!recorded.contains("manifest")) throw ParseError(path + ": no manifest");
  const Json& manifest = recorded["manifest"];
  const bool timed = manifest.contains("timing_ms");
  CommandResult again = run_command(manifest.at("subcommand").get<std::string>(),
                                    manifest.at("params"), timed);
  bool identical;
  if (timed) {
    recorded["manifest"].erase("timing_ms");
    again.output["manifest"].erase("timing_ms");
    identical = render(recorded) == render(again.output);
  } else {
    identical = render(again.output) == original;
  }
  out << "replay " << path << ": " << (identical ? "identical" : "differs") << "\n";
  return identical ? kExitOk : kExitCertificate;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Independent-set covers of matroids and monochrome structures in colorings",
               kToolName};
  app.require_subcommand(1);
  std::uint64_t seed = 0;
  std::string out_path;
  std::string budget_text = "exhaustive:3";
  bool timing = false;
  app.add_option("--seed", seed, "Seed for sampled budgets and seeded colorings");
  app.add_option("--out", out_path, "Write the result here instead of stdout");
  app.add_option("--budget", budget_text, "exhaustive[:K] or sampled:COUNT[:K]");
  app.add_flag("--timing", timing, "Record wall time in the manifest");
  app.set_version_flag("--version", kToolVersion);

  std::string subcommand;
  Json params;

  std::string spec_path, basis_text;
  auto* partition = app.add_subcommand("partition", "Cover ground minus loops by independent classes");
  partition->add_option("spec", spec_path, "Matroid description (JSON)")->required();
  partition->add_option("--basis", basis_text, "Ordered basis as comma-separated element ids");

  auto* axioms = app.add_subcommand("check-axioms", "Check hull, idempotence and exchange axioms");
  axioms->add_option("spec", spec_path, "Matroid description (JSON)")->required();

  std::string coloring_path;
  std::uint32_t lambda = 2;
  auto* rectangle = app.add_subcommand("rectangle", "Find a monochrome rectangle A x Z");
  rectangle->add_option("coloring", coloring_path, "Product coloring (JSON)")->required();
  rectangle->add_option("--lambda", lambda, "Size of A")->check(CLI::PositiveNumber);

  std::string group_text, group_file, formula = "constant";
  std::uint32_t colors = 1;
  auto* quad = app.add_subcommand("quad", "Find a dependent monochrome 4-set in a group");
  auto* group_opt = quad->add_option("--group", group_text, "Cyclic orders, e.g. 101 or 2,4");
  auto* group_file_opt = quad->add_option("--group-file", group_file, "Cayley table (JSON)");
  group_opt->excludes(group_file_opt);
  auto* coloring_opt = quad->add_option("--coloring", coloring_path, "Element coloring (JSON)");
  auto* formula_opt = quad->add_option("--formula", formula, "constant, mod or seeded-uniform");
  quad->add_option("--colors", colors, "Number of colors")->check(CLI::PositiveNumber);
  coloring_opt->excludes(formula_opt);

  std::uint32_t k = 1;
  bool verify = false, emit_coloring = false;
  auto* prefix = app.add_subcommand("prefix-color", "First-differing-bit coloring of K_{2^k}");
  prefix->add_option("--k", k, "String length")->required()->check(CLI::PositiveNumber);
  prefix->add_flag("--verify", verify, "Check for monochrome odd cycles and find a 4-cycle");
  prefix->add_flag("--emit-coloring", emit_coloring, "Include every edge color");

  std::string set_text, a_text, x_text, y_text;
  std::uint64_t torsion_n = 1, prime = 2;
  auto* group = app.add_subcommand("group", "Finite abelian group reports");
  group->require_subcommand(1);
  auto add_group_opt = [&](CLI::App* sub) {
    sub->add_option("--group", group_text, "Cyclic orders, e.g. 2,4")->required();
  };
  auto* torsion = group->add_subcommand("torsion", "The subgroup G[n]");
  add_group_opt(torsion);
  torsion->add_option("--n", torsion_n)->required()->check(CLI::PositiveNumber);
  auto* decompose = group->add_subcommand("decompose", "Primary components G[p^inf]");
  add_group_opt(decompose);
  auto* independence = group->add_subcommand("independence", "Linear independence of a set");
  add_group_opt(independence);
  independence->add_option("--set", set_text, "Elements like 1;3 or 1,0;0,1")->required();
  auto* hull = group->add_subcommand("hull", "Subgroup closure and linear hull of a set");
  add_group_opt(hull);
  hull->add_option("--set", set_text, "Elements like 1;3 or 1,0;0,1");
  auto* coset = group->add_subcommand("coset-pair", "Certify a dependent pair a+x, a+y");
  add_group_opt(coset);
  coset->add_option("--p", prime)->required();
  coset->add_option("--n", torsion_n)->required()->check(CLI::PositiveNumber);
  coset->add_option("--a", a_text)->required();
  coset->add_option("--x", x_text)->required();
  coset->add_option("--y", y_text)->required();

  std::string replay_path;
  auto* replay_cmd = app.add_subcommand("replay", "Re-run a result from its manifest and compare");
  replay_cmd->add_option("file", replay_path, "Earlier output")->required();

  for (CLI::App* sub : app.get_subcommands({})) sub->fallthrough();
  for (CLI::App* sub : group->get_subcommands({})) sub->fallthrough();

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForVersion& e) {
    out << kToolVersion << "\n";
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kExitPremise;
  }

  try {
    if (*replay_cmd) return replay(replay_path, out);

    if (*partition) {
      subcommand = "partition";
      params["spec"] = read_json_file(spec_path);
      params["basis"] = basis_text.empty() ? Json() : Json(parse_id_list(basis_text));
    } else if (*axioms) {
      subcommand = "check-axioms";
      params["spec"] = read_json_file(spec_path);
      params["budget"] = budget_to_json(parse_budget(budget_text, seed));
    } else if (*rectangle) {
      subcommand = "rectangle";
      params["coloring"] = read_json_file(coloring_path);
      params["lambda"] = lambda;
    } else if (*quad) {
      subcommand = "quad";
      if (!group_file.empty()) {
        params["group"] = read_json_file(group_file);
      } else {
        if (group_text.empty()) throw ParseError("quad: --group or --group-file is required");
        params["group"]["orders"] = parse_orders(group_text);
      }
      if (!coloring_path.empty()) {
        params["coloring"] = read_json_file(coloring_path);
      } else {
        params["coloring"]["colors"] = colors;
        params["coloring"]["generator"]["formula"] = formula;
        params["coloring"]["generator"]["seed"] = seed;
      }
    } else if (*prefix) {
      subcommand = "prefix-color";
      params["k"] = k;
      params["verify"] = verify;
      params["emit_coloring"] = emit_coloring;
    } else if (*group) {
      subcommand = "group";
      const CLI::App* action = group->get_subcommands().front();
      params["action"] = action->get_name();
      params["orders"] = parse_orders(group_text);
      if (*torsion) params["n"] = torsion_n;
      if (*independence || *hull) params["set"] = set_text;
      if (*coset) {
        params["p"] = prime;
        params["n"] = torsion_n;
        params["a"] = a_text;
        params["x"] = x_text;
        params["y"] = y_text;
      }
    }
    return emit(run_command(subcommand, params, timing), out_path, out);
  } catch (const InternalInconsistency& e) {
    err << "certificate failure: " << e.what() << "\n";
    return kExitCertificate;
  } catch (const InputError& e) {
    err << "error: " << e.what() << "\n";
    return kExitPremise;
  } catch (const PremiseError& e) {
    err << "premise error: " << e.what() << "\n";
    return kExitPremise;
  } catch (const Json::exception& e) {
    err << "error: malformed parameters: " << e.what() << "\n";
    return kExitPremise;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << "\n";
    return kExitInternal;
  }
}

}  // namespace hullcover::cli
