#include "cutlift/trielim.hpp"

#include <algorithm>
#include <set>

#include "cutlift/errors.hpp"
#include "cutlift/verify.hpp"

namespace cutlift {

namespace {

// Coefficient the form places on the eliminated edge uv.
int uv_contribution(FormKind k) {
  switch (k) {
    case FormKind::UV_W: return 1;
    case FormKind::WV_U: return -1;
    case FormKind::UW_V: return -1;
    case FormKind::UVW: return 1;
    case FormKind::Canonical: break;
  }
  throw Error("unresolved form");
}

FormKind resolve_form(const PlanEntry& entry, const Rational& alpha) {
  if (entry.form == FormKind::Canonical)
    return alpha <= 0 ? FormKind::UV_W : FormKind::UW_V;
  if (alpha != 0 && alpha + abs(alpha) * uv_contribution(entry.form) != 0)
    throw Error("form " + std::string(form_token(entry.form)) + " for edge " +
                entry.u + " " + entry.v + " does not cancel its coefficient");
  return entry.form;
}

}  // namespace

EliminationResult eliminate(const Inequality& q, GraphPtr target,
                            const EliminationPlan& plan) {
  const Graph& g = q.graph();
  check_trielim_graph(g, *target, plan);

  std::vector<Rational> coeffs(target->edge_count());
  for (const auto& e : target->edges()) {
    int src = g.edge_index(target->label(e.u), target->label(e.v));
    if (src >= 0) coeffs[static_cast<std::size_t>(target->edge_index(e.u, e.v))] = q.coeff(src);
  }

  Rational rhs = q.rhs();
  EliminationPlan resolved;
  for (const auto& entry : plan.entries) {
    Rational alpha = q.coeff(entry.u, entry.v);
    PlanEntry r = entry;
    r.form = resolve_form(entry, alpha);
    resolved.entries.push_back(r);
    if (alpha == 0) continue;

    Rational mag = abs(alpha);
    FormExpansion exp = expand_form({r.form, r.u, r.v, r.w});
    for (const auto& [a, b, c] : exp.terms) {
      auto key = std::minmax(a, b);
      if (key == std::minmax(entry.u, entry.v)) continue;  // cancelled
      int e = target->edge_index(a, b);
      if (e < 0) throw Error("form edge " + a + " " + b + " missing from target");
      coeffs[e] += mag * c;
    }
    rhs += mag * exp.rhs;
  }

  Inequality output(target, std::move(coeffs), rhs);
  return EliminationResult{std::move(output), std::move(resolved), rhs - q.rhs(),
                           q.graph_ptr()};
}

CollapseBackResult collapse_back(const EliminationResult& res) {
  const Graph& source = *res.source;

  NodeSet preswitch;
  for (const auto& e : res.plan_used.entries)
    if (e.form == FormKind::UVW) preswitch.push_back(e.w);
  std::sort(preswitch.begin(), preswitch.end());

  Inequality cur = preswitch.empty() ? res.output
                                     : apply_switching(res.output, preswitch);
  for (const auto& e : res.plan_used.entries) {
    // WV_U restores the coefficient through u; the other forms through v.
    const std::string& keep = (e.form == FormKind::WV_U) ? e.u : e.v;
    cur = collapse(cur, keep, e.w);
  }

  // Re-seat onto the source graph; contraction can leave zero-coefficient
  // edges that the source never had.
  const Graph& got = cur.graph();
  std::vector<Rational> coeffs(source.edge_count());
  for (int e = 0; e < got.edge_count(); ++e) {
    const auto& edge = got.edges()[e];
    int idx = source.edge_index(got.label(edge.u), got.label(edge.v));
    if (idx >= 0) {
      coeffs[idx] = cur.coeff(e);
    } else if (cur.coeff(e) != 0) {
      throw Error("collapse-back left support on edge " + got.label(edge.u) + " " +
                  got.label(edge.v) + " outside the source graph");
    }
  }
  return CollapseBackResult{Inequality(res.source, std::move(coeffs), cur.rhs()),
                            std::move(preswitch)};
}

bool FacetConditionReport::violated() const {
  auto bad = [](const ConditionReport& c) { return c.state == ConditionState::Fail; };
  return bad(input_facet) || bad(neighborhoods) || bad(support) || bad(w_independent);
}

bool FacetConditionReport::all_pass() const {
  auto ok = [](const ConditionReport& c) { return c.state == ConditionState::Pass; };
  return ok(input_facet) && ok(neighborhoods) && ok(support) && ok(w_independent);
}

FacetConditionReport check_facet_conditions(const Inequality& q, const Graph& target,
                                            const EliminationPlan& plan) {
  const Graph& g = q.graph();
  check_trielim_graph(g, target, plan);

  FacetConditionReport report;

  // (i) by brute force when the graph is small enough
  try {
    FacetResult fr = is_facet(q);
    report.input_facet.state = fr.facet ? ConditionState::Pass : ConditionState::Fail;
    report.input_facet.detail = fr.facet
                                    ? "input is facet inducing (dim " +
                                          std::to_string(fr.certificate.affine_dim) + ")"
                                    : "input is not facet inducing";
  } catch (const CapExceeded&) {
    report.input_facet.state = ConditionState::NotVerified;
    report.input_facet.detail = "graph too large for brute-force facet check";
  } catch (const Error& e) {
    report.input_facet.state = ConditionState::Fail;
    report.input_facet.detail = e.what();
  }

  // (ii) neighborhoods of the associated nodes
  report.neighborhoods.state = ConditionState::Pass;
  report.neighborhoods.detail = "all associated-node neighborhoods admissible";
  for (const auto& e : plan.entries) {
    int w = target.node_index(e.w);
    for (int l : target.neighbors(w)) {
      const std::string& ll = target.label(l);
      if (ll == e.u || ll == e.v) continue;
      bool ok = g.has_edge(e.u, ll) && g.has_edge(e.v, ll);
      if (!ok) {
        report.neighborhoods.state = ConditionState::Fail;
        report.neighborhoods.detail = "condition (ii) fails at node " + e.w +
                                      ": neighbor " + ll +
                                      " is not a common neighbor of " + e.u + " and " +
                                      e.v + " in the source";
        break;
      }
    }
    if (report.neighborhoods.state == ConditionState::Fail) break;
  }

  // (iii) literal complete-support test, then the >3-node shortcut
  Graph supp = support_graph(q);
  report.support.state = ConditionState::Pass;
  for (const auto& e : plan.entries) {
    std::set<int> allowed;
    int uv = g.edge_index(e.u, e.v);
    if (uv >= 0) allowed.insert(uv);
    int w = target.node_index(e.w);
    for (int l : target.neighbors(w)) {
      const std::string& ll = target.label(l);
      if (ll == e.u || ll == e.v) continue;
      int ul = g.edge_index(e.u, ll), vl = g.edge_index(e.v, ll);
      if (ul >= 0) allowed.insert(ul);
      if (vl >= 0) allowed.insert(vl);
    }
    bool contained = true;
    for (int idx = 0; idx < g.edge_count(); ++idx)
      if (q.coeff(idx) != 0 && !allowed.count(idx)) {
        contained = false;
        break;
      }
    if (contained) {
      report.support.state = ConditionState::Fail;
      report.support.detail = "condition (iii) fails: support lies inside the star of " +
                              e.u + " " + e.v;
      break;
    }
  }
  if (report.support.state == ConditionState::Pass) {
    if (supp.node_count() > 3) {
      report.support.detail = "support graph has " +
                              std::to_string(supp.node_count()) +
                              " nodes (> 3), condition (iii) holds";
    } else {
      report.support.state = ConditionState::NotVerified;
      report.support.detail = "support graph has only " +
                              std::to_string(supp.node_count()) +
                              " nodes; condition (iii) not guaranteed";
    }
  }

  // independence of the associated nodes (implied by (ii), reported anyway)
  report.w_independent.state = ConditionState::Pass;
  report.w_independent.detail = "associated nodes form an independent set";
  for (std::size_t i = 0; i < plan.entries.size(); ++i)
    for (std::size_t j = i + 1; j < plan.entries.size(); ++j)
      if (target.has_edge(plan.entries[i].w, plan.entries[j].w)) {
        report.w_independent.state = ConditionState::Fail;
        report.w_independent.detail = "associated nodes " + plan.entries[i].w +
                                      " and " + plan.entries[j].w + " are adjacent";
      }

  return report;
}

MultistageResult eliminate_multistage(const Inequality& q, const Layout& layout,
                                      bool prune_unused) {
  const Graph& source = *layout.source;
  if (source.node_count() < 5)
    throw Error("multistage elimination needs a source with at least 5 nodes");
  if (!(q.graph() == source))
    throw Error("inequality does not live on the layout's source graph");
  if (is_triangle_inequality(q))
    throw Error("triangle inequality rejected: multistage elimination requires a "
                "non-triangle input");
  check_trielim_graph(source, *layout.target, layout.plan);

  GraphPtr cur_graph = q.graph_ptr();
  Inequality cur = q;
  std::vector<StageRecord> records;
  EliminationPlan resolved;

  for (std::size_t l = 0; l < layout.stages.size(); ++l) {
    if (layout.stages[l].empty()) {
      records.push_back({cur_graph, cur});
      continue;
    }
    EliminationPlan stage_plan;
    for (std::size_t idx : layout.stages[l])
      stage_plan.entries.push_back(layout.plan.entries[idx]);

    // G^(l): drop the stage's clique edges, join the stage's associated
    // nodes to everything already present.
    std::set<std::pair<std::string, std::string>> dropped;
    for (const auto& e : stage_plan.entries) {
      auto key = std::minmax(e.u, e.v);
      dropped.insert({key.first, key.second});
    }
    std::vector<std::string> nodes = cur_graph->node_labels();
    std::vector<std::pair<std::string, std::string>> edges;
    for (const auto& e : cur_graph->edges()) {
      auto key = std::minmax(cur_graph->label(e.u), cur_graph->label(e.v));
      if (!dropped.count({key.first, key.second}))
        edges.emplace_back(key.first, key.second);
    }
    for (const auto& e : stage_plan.entries) {
      for (const auto& existing : nodes) edges.emplace_back(e.w, existing);
      nodes.push_back(e.w);
    }
    auto next = std::make_shared<const Graph>(
        Graph(source.name() + "_stage" + std::to_string(l + 1), std::move(nodes),
              edges));

    EliminationResult step = eliminate(cur, next, stage_plan);
    for (const auto& e : step.plan_used.entries) resolved.entries.push_back(e);
    cur = std::move(step.output);
    cur_graph = next;
    records.push_back({cur_graph, cur});
  }

  // Restrict onto the target (optionally minus unused associated nodes).
  GraphPtr target = layout.target;
  if (prune_unused) {
    std::set<std::string> unused;
    EliminationPlan kept;
    for (const auto& e : resolved.entries) {
      if (q.coeff(e.u, e.v) == 0)
        unused.insert(e.w);
      else
        kept.entries.push_back(e);
    }
    if (!unused.empty()) {
      std::vector<std::string> nodes;
      std::vector<std::pair<std::string, std::string>> edges;
      for (const auto& l : layout.target->node_labels())
        if (!unused.count(l)) nodes.push_back(l);
      for (const auto& e : layout.target->edges()) {
        const std::string& a = layout.target->label(e.u);
        const std::string& b = layout.target->label(e.v);
        if (!unused.count(a) && !unused.count(b)) edges.emplace_back(a, b);
      }
      target = std::make_shared<const Graph>(
          Graph(layout.target->name() + "_pruned", std::move(nodes), edges));
      resolved = std::move(kept);
    }
  }

  std::vector<Rational> coeffs(target->edge_count());
  for (int e = 0; e < cur.graph().edge_count(); ++e) {
    if (cur.coeff(e) == 0) continue;
    const auto& edge = cur.graph().edges()[e];
    int idx = target->edge_index(cur.graph().label(edge.u), cur.graph().label(edge.v));
    if (idx < 0)
      throw Error("internal: staged elimination left support outside the target");
    coeffs[idx] = cur.coeff(e);
  }

  EliminationResult final{Inequality(target, std::move(coeffs), cur.rhs()),
                          std::move(resolved), cur.rhs() - q.rhs(), q.graph_ptr()};
  return MultistageResult{std::move(final), std::move(records)};
}

}  // namespace cutlift
