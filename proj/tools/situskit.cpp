// situskit: command line for building the situses, running the dividing-line
// checkers, and validating constructions.  Every command prints one JSON
// object with sorted keys.  Exit codes: 0 = ran and the property holds (or
// the command is informational), 1 = the checked property fails, 2 = error.

#include <CLI11.hpp>
#include <json.hpp>

#include <iostream>
#include <sstream>

#include "situskit/dividing.hpp"
#include "situskit/formats.hpp"
#include "situskit/ramsey.hpp"

using json = nlohmann::json;
using namespace situskit;

namespace {

json verdict_json(const Verdict& v) {
  json j;
  j["property"] = v.property;
  j["holds"] = v.holds;
  j["oracle_holds"] = v.oracle_holds;
  j["agree"] = v.agree();
  j["parts"] = json::object();
  for (const auto& [k, b] : v.parts) j["parts"][k] = b;
  j["witness"] = json::object();
  for (const auto& [k, s] : v.witness) j["witness"][k] = s;
  j["config"] = json::object();
  for (const auto& [k, s] : v.config) j["config"][k] = s;
  return j;
}

Signature signature_of(const FinStructure& M) { return M.sig; }

TruthTable formula_table(const FinStructure& M, const std::string& text) {
  Formula f = parse_formula(text, signature_of(M));
  return truth_table(M, f);
}

std::vector<int> parse_elements(const FinStructure& M, const std::string& s) {
  std::vector<int> out;
  std::string cur;
  auto flush = [&] {
    if (!cur.empty()) {
      out.push_back(M.element(cur));
      cur.clear();
    }
  };
  for (char c : s) {
    if (c == ',' || c == ' ')
      flush();
    else
      cur += c;
  }
  flush();
  return out;
}

StoneVariant parse_variant(const std::string& s) {
  if (s == "extendable") return StoneVariant::Extendable;
  if (s == "plain") return StoneVariant::Plain;
  if (s == "consecutive") return StoneVariant::Consecutive;
  throw ParseError("unknown variant " + s);
}

int emit(const json& j, bool ok) {
  std::cout << j.dump(2) << std::endl;
  return ok ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"situskit: finite simplicial filters and dividing lines"};
  app.require_subcommand(1);

  std::string model_path, metric_path, topology_path, tree_path;
  std::string formula_text, sigma_text, params_text, a_name, b_name;
  std::string from_path, to_path, i_path, m_path;
  std::string variant_s = "extendable", mode_s = "both", object_s, kind_s,
              map_text;
  int depth = 3, chain = 0, distinct = 0, qdepth = 1, k = 2, alpha = 3;
  int branching = 2, tree_depth = 2, atoms = 6, level = 2, arity = 1, length = 4;
  bool guard_override = false, tails = false;

  auto add_common = [&](CLI::App* c) {
    c->add_option("--depth", depth, "truncation depth N");
    c->add_option("--chain", chain, "index chain length");
    c->add_option("--distinct", distinct, "distinct-element target N");
    c->add_option("--qdepth", qdepth, "formula cutoff quantifier depth");
    c->add_option("--variant", variant_s, "extendable|plain|consecutive");
    c->add_flag("--guard-override", guard_override, "raise resource guards");
  };

  auto* check = app.add_subcommand("check", "run a dividing-line checker");
  std::string property;
  check->add_option("property", property,
                    "stability|eventual-stability|nip|op|nsop|non-dividing|"
                    "ntp|complete|compact")
      ->required();
  check->add_option("--model", model_path, "structure file");
  check->add_option("--metric", metric_path, "metric file");
  check->add_option("--topology", topology_path, "topology file");
  check->add_option("--formula", formula_text, "formula in the spec grammar");
  check->add_option("--k", k, "order/tree parameter k");
  check->add_option("--alpha", alpha, "compactness chain length");
  check->add_option("--branching", branching, "tree branching");
  check->add_option("--tree-depth", tree_depth, "tree depth");
  check->add_option("--params", params_text, "parameter set A (names)");
  check->add_option("--a", a_name, "element a");
  check->add_option("--b", b_name, "element b");
  check->add_option("--mode", mode_s, "ntp: oracle|lifting|both");
  add_common(check);

  auto* hom = app.add_subcommand("hom", "enumerate morphisms between orders");
  hom->add_option("--from", from_path)->required();
  hom->add_option("--to", to_path)->required();
  hom->add_option("--depth", depth);

  auto* lift = app.add_subcommand("lift", "run only the lifting side");
  lift->add_option("--kind", kind_s, "stability|eventual-stability|nip-exact")
      ->required();
  lift->add_option("--model", model_path)->required();
  lift->add_option("--formula", formula_text);
  add_common(lift);

  auto* surject = app.add_subcommand("surject", "search for a surjection");
  surject->add_option("--model", model_path)->required();
  surject->add_option("--star", k, "target star order size")->required();
  add_common(surject);

  auto* validate_cmd = app.add_subcommand("validate", "validate a construction");
  validate_cmd->add_option("--object", object_s,
                           "stone|order|star|metric|covering|tree|consistency|"
                           "shifted")
      ->required();
  validate_cmd->add_option("--model", model_path);
  validate_cmd->add_option("--metric", metric_path);
  validate_cmd->add_option("--topology", topology_path);
  validate_cmd->add_option("--tree", tree_path);
  validate_cmd->add_option("--from", from_path);
  validate_cmd->add_option("--sigma", sigma_text, "formula list, ; separated");
  validate_cmd->add_option("--formula", formula_text);
  validate_cmd->add_option("--k", k);
  validate_cmd->add_flag("--tails", tails, "use the tails filter");
  add_common(validate_cmd);

  auto* ramsey_cmd = app.add_subcommand("ramsey", "homogeneous-simplex sweep");
  ramsey_cmd->add_option("--atoms", atoms)->required();
  ramsey_cmd->add_option("--level", level);

  auto* represent = app.add_subcommand("represent", "EM representation check");
  represent->add_option("--i", i_path)->required();
  represent->add_option("--m", m_path)->required();
  represent->add_option("--mode", mode_s, "em|eminf|represents")->required();
  represent->add_option("--length", length);
  represent->add_option("--map", map_text, "a->b c->d (default identity)");
  add_common(represent);

  auto* reduct = app.add_subcommand("reduct", "unary reduct of a structure");
  reduct->add_option("--model", model_path)->required();

  auto* orbits_cmd = app.add_subcommand("orbits", "type orbits over A");
  orbits_cmd->add_option("--model", model_path)->required();
  orbits_cmd->add_option("--params", params_text);
  orbits_cmd->add_option("--arity", arity);

  CLI11_PARSE(app, argc, argv);

  try {
    if (guard_override) set_guard_scale(100);
    CheckConfig cfg;
    cfg.depth = depth;
    cfg.chain = chain;
    cfg.distinct = distinct;
    cfg.qdepth = qdepth;
    cfg.variant = parse_variant(variant_s);

    if (*check) {
      if (property == "complete") {
        FinMetric M = parse_metric(read_file(metric_path));
        int L = chain > 0 ? chain : M.size() + 2;
        auto rep = is_complete_lp(M, L, depth);
        json j;
        j["property"] = "complete";
        j["holds"] = rep.holds();
        j["parts"] = {{"shift_lifting", rep.shift_lifting},
                      {"adjoined_top_lifting", rep.adjoined_top_lifting}};
        j["config"] = {{"depth", std::to_string(depth)},
                       {"chain", std::to_string(L)}};
        return emit(j, rep.holds());
      }
      if (property == "compact") {
        FinTopology T = parse_topology(read_file(topology_path));
        auto rep = compactness_lp(T, alpha, depth);
        json j;
        j["property"] = "compact";
        j["holds"] = rep.holds();
        j["parts"] = {{"factor_lifting", rep.factor_lifting},
                      {"no_surjection", rep.no_surjection}};
        j["maps_checked"] = rep.maps_checked;
        if (!rep.witness.empty()) j["witness"] = rep.witness;
        j["config"] = {{"depth", std::to_string(depth)},
                       {"alpha", std::to_string(alpha)}};
        return emit(j, rep.holds());
      }
      FinStructure M = parse_structure(read_file(model_path));
      Verdict v;
      if (property == "stability" || property == "eventual-stability") {
        if (formula_text.empty()) throw ParseError("--formula required");
        TruthTable phi = formula_table(M, formula_text);
        v = property == "stability" ? stability(M, phi, cfg)
                                    : eventual_stability(M, phi, cfg);
      } else if (property == "nip") {
        v = nip(M, cfg);
      } else if (property == "op" || property == "nsop") {
        v = op_nsop(M, k, cfg);
      } else if (property == "non-dividing") {
        std::vector<int> A =
            params_text.empty() ? std::vector<int>{} : parse_elements(M, params_text);
        v = non_dividing(M, A, M.element(a_name), M.element(b_name), cfg);
      } else if (property == "ntp") {
        if (formula_text.empty()) throw ParseError("--formula required");
        TruthTable phi = formula_table(M, formula_text);
        TreeCheckMode tm = mode_s == "oracle"    ? TreeCheckMode::Oracle
                           : mode_s == "lifting" ? TreeCheckMode::Lifting
                                                 : TreeCheckMode::Both;
        v = tree_property(M, phi, branching, tree_depth, k, tm, cfg);
      } else {
        throw ParseError("unknown property " + property);
      }
      return emit(verdict_json(v), v.holds);
    }

    if (*hom) {
      NamedOrder A = parse_order(read_file(from_path));
      NamedOrder B = parse_order(read_file(to_path));
      TruncatedSitus X = corepresented_by_preorder(A.order, depth);
      TruncatedSitus Y = corepresented_by_preorder(B.order, depth);
      auto hs = hom_set(X, Y);
      json j;
      j["count"] = hs.size();
      json maps = json::array();
      for (const auto& h : hs) {
        std::ostringstream os;
        for (std::size_t e = 0; e < h.level(1).tab.size(); ++e)
          os << (e ? "," : "")
             << B.names[static_cast<std::size_t>(h.level(1).tab[e])];
        maps.push_back(os.str());
      }
      j["vertex_maps"] = maps;
      return emit(j, true);
    }

    if (*lift) {
      FinStructure M = parse_structure(read_file(model_path));
      json j;
      if (kind_s == "stability" || kind_s == "eventual-stability") {
        TruthTable phi = formula_table(M, formula_text);
        Verdict v = kind_s == "stability" ? stability(M, phi, cfg)
                                          : eventual_stability(M, phi, cfg);
        j["kind"] = kind_s;
        j["holds"] = v.holds;
        for (const auto& [kk, s] : v.witness) j["witness"][kk] = s;
        return emit(j, v.holds);
      }
      if (kind_s == "nip-exact") {
        Verdict v = nip(M, cfg);
        j["kind"] = kind_s;
        j["holds"] = v.parts.at("exact_lifting");
        return emit(j, v.parts.at("exact_lifting"));
      }
      throw ParseError("unknown lift kind " + kind_s);
    }

    if (*surject) {
      FinStructure M = parse_structure(read_file(model_path));
      auto sigma = base_cutoff(M, cfg);
      TruncatedSitus Mb =
          stone_space(M, sigma, cfg.variant, cfg.distinct_for(M), depth);
      TruncatedSitus star = star_order(k, depth);
      auto s = exists_surjection(Mb, star);
      json j;
      j["exists"] = s.has_value();
      if (s) {
        std::ostringstream os;
        for (std::size_t e = 0; e < s->level(1).tab.size(); ++e)
          os << (e ? "," : "") << s->level(1).tab[e];
        j["vertex_map"] = os.str();
      }
      return emit(j, true);
    }

    if (*validate_cmd) {
      TruncatedSitus X;
      if (object_s == "stone") {
        FinStructure M = parse_structure(read_file(model_path));
        std::vector<TruthTable> sigma;
        std::string cur;
        std::istringstream is(sigma_text);
        while (std::getline(is, cur, ';'))
          if (!cur.empty()) sigma.push_back(formula_table(M, cur));
        X = stone_space(M, sigma, cfg.variant, cfg.distinct_for(M), depth);
      } else if (object_s == "order") {
        NamedOrder O = parse_order(read_file(from_path));
        X = order_object(O.order,
                         O.linear ? OrderFlavor::Ordered : OrderFlavor::SetFlavor,
                         tails ? OrderFilterKind::Tails
                               : OrderFilterKind::Antidiscrete,
                         depth);
      } else if (object_s == "star") {
        X = star_order(k, depth);
      } else if (object_s == "metric") {
        X = metric_situs(parse_metric(read_file(metric_path)), depth);
      } else if (object_s == "covering") {
        X = covering_situs(parse_topology(read_file(topology_path)), depth);
      } else if (object_s == "tree") {
        FinTree T = parse_tree(read_file(tree_path));
        auto objs = tree_objects(T, depth);
        X = objs.prefix;  // the lex and union objects are validated too
        auto v1 = validate(objs.prefix);
        auto v2 = validate(objs.lex);
        json j;
        j["object"] = "tree";
        j["prefix_violations"] = v1.size();
        j["lex_violations"] = v2.size();
        j["status"] = (v1.empty() && v2.empty()) ? "ok" : "violations";
        return emit(j, v1.empty() && v2.empty());
      } else if (object_s == "consistency") {
        FinStructure M = parse_structure(read_file(model_path));
        X = consistency_space(M, parse_formula(formula_text, M.sig), depth);
      } else if (object_s == "shifted") {
        FinStructure M = parse_structure(read_file(model_path));
        auto sigma = cutoff_formulas(M, 2, cfg.cutoff());
        X = shifted_structure(M, sigma, depth);
      } else {
        throw ParseError("unknown object " + object_s);
      }
      auto issues = validate(X);
      json j;
      j["object"] = object_s;
      j["status"] = issues.empty() ? "ok" : "violations";
      json arr = json::array();
      for (const auto& i : issues) {
        json e;
        e["level_from"] = i.level_from;
        e["level_to"] = i.level_to;
        e["face"] = i.face;
        e["kind"] = i.kind;
        e["detail"] = i.detail;
        arr.push_back(e);
      }
      j["violations"] = arr;
      return emit(j, issues.empty());
    }

    if (*ramsey_cmd) {
      if (level != 2) throw ParseError("only pair colorings are supported");
      TruncatedSitus X =
          corepresented_by_preorder(FinPreorder::set(atoms), 3);
      // sweep symmetric 2-colorings of unordered pairs
      std::vector<std::pair<int, int>> pairs;
      for (int a = 0; a < atoms; ++a)
        for (int b = a + 1; b < atoms; ++b) pairs.emplace_back(a, b);
      if (pairs.size() > 20) throw ResourceError("too many pairs to sweep");
      bool all_have = true;
      std::string bad;
      for (std::uint64_t mask = 0; mask < (1ull << pairs.size()); ++mask) {
        Coloring c;
        c.level = 2;
        c.color.assign(X.level(2).size(), 0);
        for (std::size_t p = 0; p < pairs.size(); ++p) {
          int col = (mask >> p) & 1;
          c.color[static_cast<std::size_t>(
              X.level(2).at({pairs[p].first, pairs[p].second}))] = col;
          c.color[static_cast<std::size_t>(
              X.level(2).at({pairs[p].second, pairs[p].first}))] = col;
        }
        bool found = false;
        for (int e : homogeneous_simplices(X, c, 3)) {
          if (is_hereditarily_nondegenerate(X, 3, e)) {
            found = true;
            break;
          }
        }
        if (!found) {
          all_have = false;
          std::ostringstream os;
          for (std::size_t p = 0; p < pairs.size(); ++p)
            os << ((mask >> p) & 1);
          bad = os.str();
          break;
        }
      }
      json j;
      j["atoms"] = atoms;
      j["every_coloring_has_homogeneous_triple"] = all_have;
      if (!all_have) j["counterexample_coloring"] = bad;
      return emit(j, true);
    }

    if (*represent) {
      FinStructure I = parse_structure(read_file(i_path));
      FinStructure M = parse_structure(read_file(m_path));
      SetMap f = SetMap::identity(I.size());
      f.dst = M.size();
      if (!map_text.empty()) {
        std::istringstream is(map_text);
        std::string tok;
        while (is >> tok) {
          auto arrow = tok.find("->");
          if (arrow == std::string::npos) throw ParseError("map needs a->b");
          f.tab[static_cast<std::size_t>(I.element(tok.substr(0, arrow)))] =
              M.element(tok.substr(arrow + 2));
        }
      }
      RepresentMode rm = mode_s == "em"        ? RepresentMode::EM
                         : mode_s == "eminf"   ? RepresentMode::EMinfty
                                               : RepresentMode::Represents;
      bool ok = em_represents(I, M, f, rm, length, cfg);
      json j;
      j["mode"] = mode_s;
      j["holds"] = ok;
      j["length"] = length;
      return emit(j, ok);
    }

    if (*reduct) {
      FinStructure M = parse_structure(read_file(model_path));
      std::cout << serialize_structure(unary_reduct(M));
      return 0;
    }

    if (*orbits_cmd) {
      FinStructure M = parse_structure(read_file(model_path));
      std::vector<int> A =
          params_text.empty() ? std::vector<int>{} : parse_elements(M, params_text);
      auto cls = type_orbits(M, A, arity);
      json j;
      j["arity"] = arity;
      j["classes"] = cls;
      int nc = 0;
      for (int c : cls) nc = std::max(nc, c + 1);
      j["count"] = nc;
      return emit(j, true);
    }
  } catch (const std::exception& e) {
    json j;
    j["error"] = e.what();
    std::cout << j.dump(2) << std::endl;
    return 2;
  }
  return 2;
}
