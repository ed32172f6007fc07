// Batch front end: lift / verify / equiv / catalog / hull / canon.
//
// Exit codes: 0 success or positive verdict, 1 negative verdict,
// 2 usage, parse or cap errors. Output is deterministic for fixed inputs.

#include <iostream>
#include <memory>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "cutlift/catalog.hpp"
#include "cutlift/equivalence.hpp"
#include "cutlift/errors.hpp"
#include "cutlift/io.hpp"
#include "cutlift/trielim.hpp"
#include "cutlift/verify.hpp"

namespace {

using namespace cutlift;

constexpr int kExitOk = 0;
constexpr int kExitNegative = 1;
constexpr int kExitUsage = 2;

constexpr int kDefaultCliNodeCap = 18;

std::string join_set(const NodeSet& s) {
  std::string out = "{";
  for (std::size_t i = 0; i < s.size(); ++i) out += (i ? "," : "") + s[i];
  return out + "}";
}

// Input files are either bundles (graph --- inequality) or bare inequality
// files paired with --graph.
Inequality load_inequality(const std::string& in_path, const std::string& graph_path) {
  std::string text = read_file(in_path);
  std::istringstream in(text);
  std::string line;
  bool is_bundle = false;
  while (std::getline(in, line))
    if (line == "---") {
      is_bundle = true;
      break;
    }
  if (is_bundle) return parse_bundle(text);
  if (graph_path.empty())
    throw Error("'" + in_path + "' is a bare inequality file; pass --graph");
  auto g = std::make_shared<const Graph>(parse_graph(read_file(graph_path)));
  return parse_inequality(text, std::move(g));
}

void write_output(const std::string& out_path, const Inequality& q) {
  const bool bundle = out_path.size() >= 4 &&
                      out_path.compare(out_path.size() - 4, 4, ".cib") == 0;
  write_file(out_path, bundle ? serialize_bundle(q) : serialize_inequality(q));
}

void enforce_cli_cap(const Graph& g, int max_nodes, int hard_cap) {
  int cap = std::min(max_nodes, hard_cap);
  if (g.node_count() > cap)
    throw CapExceeded("graph has " + std::to_string(g.node_count()) +
                      " nodes, above the CLI cap " + std::to_string(cap) +
                      " (raise with --max-nodes; hard cap " +
                      std::to_string(hard_cap) + ")");
}

// "members@vpart[@wpart[@wlabels]]" groups joined by ';'.
std::vector<KPartiteGroup> parse_kpartite_groups(const std::string& spec, int& k) {
  std::vector<KPartiteGroup> groups;
  k = 0;
  std::istringstream in(spec);
  std::string chunk;
  while (std::getline(in, chunk, ';')) {
    if (chunk.empty()) continue;
    std::vector<std::string> fields;
    std::istringstream cs(chunk);
    std::string field;
    while (std::getline(cs, field, '@')) fields.push_back(field);
    if (fields.size() < 2 || fields.size() > 4)
      throw Error("bad k-partite group '" + chunk +
                  "', expected members@vpart[@wpart[@wlabels]]");
    KPartiteGroup g;
    std::istringstream ms(fields[0]);
    std::string m;
    while (std::getline(ms, m, ','))
      if (!m.empty()) g.members.push_back(m);
    g.v_part = std::stoi(fields[1]);
    if (fields.size() >= 3) g.w_part = std::stoi(fields[2]);
    if (fields.size() == 4) {
      std::istringstream ws(fields[3]);
      while (std::getline(ws, m, ','))
        if (!m.empty()) g.w_labels.push_back(m);
    }
    k = std::max({k, g.v_part, g.w_part});
    groups.push_back(std::move(g));
  }
  return groups;
}

const char* state_word(ConditionState s) {
  switch (s) {
    case ConditionState::Pass: return "PASS";
    case ConditionState::Fail: return "FAIL";
    case ConditionState::NotVerified: return "NOT_VERIFIED";
  }
  return "?";
}

void print_condition(const std::string& name, const ConditionReport& c) {
  std::cout << "condition " << name << " " << state_word(c.state) << " # "
            << c.detail << "\n";
}

int cmd_lift(const std::string& in, const std::string& graph_path,
             const std::string& plan_path, const std::string& target_path,
             std::vector<int> bipartite, const std::string& kpartite,
             const std::string& out, bool check_conditions, bool prune,
             int max_nodes) {
  Inequality q = load_inequality(in, graph_path);

  std::optional<EliminationResult> result;
  bool conditions_violated = false;

  if (!plan_path.empty()) {
    if (target_path.empty()) throw Error("--plan needs --target <graph file>");
    EliminationPlan plan = parse_plan(read_file(plan_path));
    auto target = std::make_shared<const Graph>(parse_graph(read_file(target_path)));
    if (check_conditions) {
      enforce_cli_cap(q.graph(), max_nodes, kFacetNodeCap);
      FacetConditionReport rep = check_facet_conditions(q, *target, plan);
      print_condition("input-facet", rep.input_facet);
      print_condition("neighborhoods", rep.neighborhoods);
      print_condition("support", rep.support);
      print_condition("w-independent", rep.w_independent);
      conditions_violated = rep.violated();
    }
    result = eliminate(q, target, plan);
  } else if (!bipartite.empty() || !kpartite.empty()) {
    Layout layout;
    if (!bipartite.empty()) {
      layout = build_bipartite_layout(bipartite[0], bipartite[1]);
    } else {
      int k = 0;
      auto groups = parse_kpartite_groups(kpartite, k);
      layout = build_kpartite_layout(groups, k);
    }
    if (!(q.graph() == *layout.source))
      throw Error("inequality graph does not match the layout's source K_n");
    if (check_conditions) {
      enforce_cli_cap(q.graph(), max_nodes, kFacetNodeCap);
      ConditionReport facet_rep, triangle_rep, layout_rep;
      layout_rep.state = ConditionState::Pass;
      layout_rep.detail = "grouping conditions validated by construction";
      triangle_rep.state = is_triangle_inequality(q) ? ConditionState::Fail
                                                     : ConditionState::Pass;
      triangle_rep.detail = triangle_rep.state == ConditionState::Pass
                                ? "input is not a triangle inequality"
                                : "input is a triangle inequality";
      try {
        FacetResult fr = is_facet(q);
        facet_rep.state = fr.facet ? ConditionState::Pass : ConditionState::Fail;
        facet_rep.detail = fr.facet ? "input is facet inducing"
                                    : "input is not facet inducing";
      } catch (const CapExceeded&) {
        facet_rep.state = ConditionState::NotVerified;
        facet_rep.detail = "graph too large for brute-force facet check";
      }
      print_condition("layout", layout_rep);
      print_condition("input-facet", facet_rep);
      print_condition("non-triangle", triangle_rep);
      conditions_violated = facet_rep.state == ConditionState::Fail ||
                            triangle_rep.state == ConditionState::Fail;
    }
    result = eliminate_multistage(q, layout, prune).result;
  } else {
    throw Error("pick one of --plan, --bipartite, --kpartite");
  }

  std::cout << "LIFTED " << result->output.graph().name() << " support="
            << result->output.support_size() << " rhs="
            << format_rational(result->output.rhs()) << "\n";
  if (!out.empty()) write_output(out, result->output);
  return conditions_violated ? kExitNegative : kExitOk;
}

int cmd_verify(const std::string& in, const std::string& graph_path, bool facet,
               bool valid, bool certificate, int max_nodes) {
  if (facet == valid) throw Error("pick exactly one of --facet / --valid");
  Inequality q = load_inequality(in, graph_path);
  enforce_cli_cap(q.graph(), max_nodes, facet ? kFacetNodeCap : kValidityNodeCap);

  auto violation = find_violation(q);
  if (violation) {
    std::cout << "INVALID S=" << join_set(mask_to_set(q.graph(), *violation)) << "\n";
    return kExitNegative;
  }
  if (valid) {
    std::cout << "VALID\n";
    return kExitOk;
  }
  FacetResult fr = is_facet(q);
  std::cout << (fr.facet ? "FACET" : "NOT_FACET") << " dim="
            << fr.certificate.affine_dim << " need=" << q.graph().edge_count() - 1
            << "\n";
  if (certificate)
    for (const auto& root : fr.certificate.roots)
      std::cout << "root " << join_set(root) << "\n";
  return fr.facet ? kExitOk : kExitNegative;
}

int cmd_equiv(const std::string& a_path, const std::string& b_path,
              const std::string& graph_path, std::vector<int> fast_bipartite,
              bool cross_check) {
  Inequality a = load_inequality(a_path, graph_path);
  Inequality b = load_inequality(b_path, graph_path);

  if (!fast_bipartite.empty()) {
    int p = fast_bipartite[0], q = fast_bipartite[1];
    EquivResult fast = fast_equiv_bipartite(a, b, p, q);
    std::cout << (fast.equivalent ? "EQUIV" : "NOT_EQUIV") << " criterion=bipartite\n";
    if (cross_check) {
      Layout layout = build_bipartite_layout(p, q);
      Inequality la = eliminate_multistage(a, layout).result.output;
      Inequality lb = eliminate_multistage(b, layout).result.output;
      EquivResult brute = are_ps_equivalent(la, lb);
      std::cout << (brute.equivalent ? "EQUIV" : "NOT_EQUIV")
                << " criterion=brute-lifted\n";
      if (brute.equivalent != fast.equivalent) {
        std::cout << "MISMATCH\n";
        return kExitUsage;
      }
    }
    return fast.equivalent ? kExitOk : kExitNegative;
  }

  EquivResult res = are_ps_equivalent(a, b);
  if (res.equivalent) {
    std::cout << "EQUIV sigma=" << cycle_notation(a.graph(), res.witness->perm)
              << " S=" << join_set(res.witness->switching) << "\n";
    return kExitOk;
  }
  std::cout << "NOT_EQUIV\n";
  return kExitNegative;
}

int cmd_catalog(const std::string& family, int n, int f_count,
                const std::string& b_csv, const std::string& labels_csv,
                const std::string& out) {
  std::optional<Inequality> q;
  if (family == "pentagonal") {
    if (labels_csv.empty()) {
      q = make_pentagonal();
    } else {
      std::vector<std::string> labels;
      std::istringstream ls(labels_csv);
      std::string tok;
      while (std::getline(ls, tok, ','))
        if (!tok.empty()) labels.push_back(tok);
      q = make_pentagonal(labels);
    }
  } else if (family == "triangle") {
    q = make_triangle();
  } else if (family == "cycle") {
    if (n < 3) throw Error("cycle family needs --n >= 3");
    auto g = std::make_shared<const Graph>(Graph::cycle(n));
    std::vector<std::string> nodes;
    for (int i = 1; i <= n; ++i) nodes.push_back(std::to_string(i));
    std::vector<int> f;
    for (int i = 0; i < f_count; ++i) f.push_back(i);
    q = make_cycle(g, nodes, f);
  } else if (family == "hypermetric") {
    std::vector<long long> b;
    std::istringstream bs(b_csv);
    std::string tok;
    while (std::getline(bs, tok, ','))
      if (!tok.empty()) b.push_back(std::stoll(tok));
    if (b.empty()) throw Error("hypermetric family needs --b");
    q = make_hypermetric(b);
  } else {
    throw Error("unknown family '" + family +
                "' (families: triangle, cycle, pentagonal, hypermetric)");
  }

  if (out.empty()) {
    std::cout << serialize_bundle(*q);
  } else {
    write_output(out, *q);
    std::cout << "WROTE " << out << "\n";
  }
  return kExitOk;
}

int cmd_hull(const std::string& graph_path) {
  auto g = std::make_shared<const Graph>(parse_graph(read_file(graph_path)));
  std::vector<Inequality> facets = hull_oracle(g);
  std::cout << "FACETS " << facets.size() << "\n";
  for (const auto& f : facets) {
    std::cout << "---\n";
    std::cout << serialize_inequality(f);
  }
  return kExitOk;
}

int cmd_canon(const std::string& in, const std::string& graph_path,
              const std::string& out) {
  Inequality q = load_inequality(in, graph_path);
  Inequality canon = canonical_form(q);
  if (out.empty())
    std::cout << serialize_inequality(canon);
  else
    write_output(out, canon);
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"cut-polytope inequality lifting toolkit"};
  app.require_subcommand(1);

  // lift
  auto* lift = app.add_subcommand("lift", "triangular elimination of an inequality");
  std::string l_in, l_graph, l_plan, l_target, l_kpartite, l_out;
  std::vector<int> l_bipartite;
  bool l_check = false, l_prune = false;
  int l_max_nodes = kDefaultCliNodeCap;
  lift->add_option("--in", l_in, "inequality file or bundle")->required();
  lift->add_option("--graph", l_graph, "graph file for a bare inequality");
  lift->add_option("--plan", l_plan, "elimination plan file");
  lift->add_option("--target", l_target, "target graph file (with --plan)");
  lift->add_option("--bipartite", l_bipartite, "p q")->expected(2);
  lift->add_option("--kpartite", l_kpartite, "members@vpart[@wpart[@wlabels]];...");
  lift->add_option("--out", l_out, "output file (.cib extension bundles the graph)");
  lift->add_flag("--check-conditions", l_check, "report the facet-preservation conditions");
  lift->add_flag("--prune", l_prune, "drop associated nodes of zero-coefficient edges");
  lift->add_option("--max-nodes", l_max_nodes, "CLI node cap for condition checks");

  // verify
  auto* verify = app.add_subcommand("verify", "validity / facet check by enumeration");
  std::string v_in, v_graph;
  bool v_facet = false, v_valid = false, v_cert = false;
  int v_max_nodes = kDefaultCliNodeCap;
  verify->add_option("--in", v_in, "inequality file or bundle")->required();
  verify->add_option("--graph", v_graph, "graph file for a bare inequality");
  verify->add_flag("--facet", v_facet, "test facetness");
  verify->add_flag("--valid", v_valid, "test validity");
  verify->add_flag("--certificate", v_cert, "dump the affinely independent roots");
  verify->add_option("--max-nodes", v_max_nodes, "CLI node cap");

  // equiv
  auto* equiv = app.add_subcommand("equiv", "permutation-switching equivalence");
  std::string e_a, e_b, e_graph;
  std::vector<int> e_fast;
  bool e_cross = false;
  equiv->add_option("--a", e_a, "first inequality")->required();
  equiv->add_option("--b", e_b, "second inequality")->required();
  equiv->add_option("--graph", e_graph, "shared graph file for bare inequalities");
  equiv->add_option("--fast-bipartite", e_fast, "p q: the K_n source criterion")
      ->expected(2);
  equiv->add_flag("--cross-check", e_cross,
                  "also brute-force the lifted pair and compare");

  // catalog
  auto* catalog = app.add_subcommand("catalog", "generate a named inequality family");
  std::string c_family, c_b, c_labels, c_out;
  int c_n = 0, c_f = 1;
  catalog->add_option("family", c_family, "triangle|cycle|pentagonal|hypermetric")
      ->required();
  catalog->add_option("--n", c_n, "cycle length");
  catalog->add_option("--F", c_f, "cycle: |F|, taken as the first F cycle edges");
  catalog->add_option("--b", c_b, "hypermetric b-vector, comma separated");
  catalog->add_option("--labels", c_labels, "pentagonal: 5 node labels");
  catalog->add_option("--out", c_out, "output file");

  // hull
  auto* hull = app.add_subcommand("hull", "brute-force facet list of a tiny graph");
  std::string h_graph;
  hull->add_option("--graph", h_graph, "graph file")->required();

  // canon
  auto* canon = app.add_subcommand("canon", "canonical representative of the orbit");
  std::string n_in, n_graph, n_out;
  canon->add_option("--in", n_in, "inequality file or bundle")->required();
  canon->add_option("--graph", n_graph, "graph file for a bare inequality");
  canon->add_option("--out", n_out, "output file");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (lift->parsed())
      return cmd_lift(l_in, l_graph, l_plan, l_target, l_bipartite, l_kpartite,
                      l_out, l_check, l_prune, l_max_nodes);
    if (verify->parsed())
      return cmd_verify(v_in, v_graph, v_facet, v_valid, v_cert, v_max_nodes);
    if (equiv->parsed()) return cmd_equiv(e_a, e_b, e_graph, e_fast, e_cross);
    if (catalog->parsed())
      return cmd_catalog(c_family, c_n, c_f, c_b, c_labels, c_out);
    if (hull->parsed()) return cmd_hull(h_graph);
    if (canon->parsed()) return cmd_canon(n_in, n_graph, n_out);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}
