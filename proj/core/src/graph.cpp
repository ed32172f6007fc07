#include "cutlift/graph.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "cutlift/errors.hpp"

namespace cutlift {

namespace {

void require(bool ok, const std::string& msg) {
  if (!ok) throw Error(msg);
}

bool valid_label(const std::string& s) {
  if (s.empty()) return false;
  for (char c : s)
    if (c == '#' || std::isspace(static_cast<unsigned char>(c))) return false;
  return true;
}

}  // namespace

Graph::Graph(std::string name, std::vector<std::string> nodes,
             const std::vector<std::pair<std::string, std::string>>& edges)
    : name_(std::move(name)), labels_(std::move(nodes)) {
  std::sort(labels_.begin(), labels_.end());
  require(std::adjacent_find(labels_.begin(), labels_.end()) == labels_.end(),
          "duplicate node label");
  for (const auto& l : labels_)
    require(valid_label(l), "invalid node label '" + l + "'");

  const int n = node_count();
  edge_lookup_.assign(static_cast<std::size_t>(n) * n, -1);
  std::set<std::pair<int, int>> seen;
  for (const auto& [a, b] : edges) {
    int u = node_index(a), v = node_index(b);
    require(u >= 0, "edge endpoint '" + a + "' is not a declared node");
    require(v >= 0, "edge endpoint '" + b + "' is not a declared node");
    require(u != v, "loop edge at '" + a + "'");
    if (u > v) std::swap(u, v);
    seen.insert({u, v});
  }
  edges_.reserve(seen.size());
  for (auto [u, v] : seen) {
    edge_lookup_[static_cast<std::size_t>(u) * n + v] =
        edge_lookup_[static_cast<std::size_t>(v) * n + u] =
            static_cast<int>(edges_.size());
    edges_.push_back({u, v});
  }
}

Graph Graph::complete(int n) {
  std::vector<std::string> labels;
  for (int i = 1; i <= n; ++i) labels.push_back(std::to_string(i));
  return complete("K" + std::to_string(n), std::move(labels));
}

Graph Graph::complete(std::string name, std::vector<std::string> labels) {
  std::vector<std::pair<std::string, std::string>> edges;
  for (std::size_t i = 0; i < labels.size(); ++i)
    for (std::size_t j = i + 1; j < labels.size(); ++j)
      edges.emplace_back(labels[i], labels[j]);
  return Graph(std::move(name), std::move(labels), edges);
}

Graph Graph::cycle(int n) {
  require(n >= 3, "cycle needs at least 3 nodes");
  std::vector<std::string> labels;
  std::vector<std::pair<std::string, std::string>> edges;
  for (int i = 1; i <= n; ++i) {
    labels.push_back(std::to_string(i));
    edges.emplace_back(std::to_string(i), std::to_string(i % n + 1));
  }
  return Graph("C" + std::to_string(n), std::move(labels), edges);
}

Graph Graph::complete_multipartite(std::string name,
                                   std::vector<std::vector<std::string>> parts) {
  std::vector<std::string> labels;
  std::vector<std::pair<std::string, std::string>> edges;
  for (const auto& p : parts) labels.insert(labels.end(), p.begin(), p.end());
  for (std::size_t a = 0; a < parts.size(); ++a)
    for (std::size_t b = a + 1; b < parts.size(); ++b)
      for (const auto& u : parts[a])
        for (const auto& v : parts[b]) edges.emplace_back(u, v);
  return Graph(std::move(name), std::move(labels), edges);
}

int Graph::node_index(const std::string& label) const {
  auto it = std::lower_bound(labels_.begin(), labels_.end(), label);
  if (it == labels_.end() || *it != label) return -1;
  return static_cast<int>(it - labels_.begin());
}

int Graph::edge_index(int u, int v) const {
  if (u < 0 || v < 0 || u >= node_count() || v >= node_count() || u == v) return -1;
  return edge_lookup_[static_cast<std::size_t>(u) * node_count() + v];
}

int Graph::edge_index(const std::string& u, const std::string& v) const {
  return edge_index(node_index(u), node_index(v));
}

std::vector<int> Graph::neighbors(int v) const {
  std::vector<int> out;
  for (int u = 0; u < node_count(); ++u)
    if (edge_index(u, v) >= 0) out.push_back(u);
  return out;
}

int Graph::degree(int v) const { return static_cast<int>(neighbors(v).size()); }

const char* form_token(FormKind k) {
  switch (k) {
    case FormKind::UV_W: return "uv.w";
    case FormKind::WV_U: return "wv.u";
    case FormKind::UW_V: return "uw.v";
    case FormKind::UVW: return "uvw";
    case FormKind::Canonical: return "canonical";
  }
  return "?";
}

FormKind form_from_token(const std::string& token) {
  if (token == "uv.w") return FormKind::UV_W;
  if (token == "wv.u") return FormKind::WV_U;
  if (token == "uw.v") return FormKind::UW_V;
  if (token == "uvw") return FormKind::UVW;
  if (token == "canonical") return FormKind::Canonical;
  throw Error("unknown triangular form token '" + token + "'");
}

void EliminationPlan::validate(const Graph& g) const {
  std::set<std::pair<std::string, std::string>> f;
  std::set<std::string> ws;
  for (const auto& e : entries) {
    require(g.has_edge(e.u, e.v),
            "plan eliminates unknown edge " + e.u + " " + e.v);
    auto key = std::minmax(e.u, e.v);
    require(f.insert({key.first, key.second}).second,
            "plan eliminates edge " + e.u + " " + e.v + " twice");
    require(!g.has_node(e.w), "associated node '" + e.w + "' already in graph");
    require(valid_label(e.w), "invalid associated node label '" + e.w + "'");
    require(ws.insert(e.w).second, "associated node '" + e.w + "' reused");
  }
}

Graph contract_edge(const Graph& g, const std::string& keep, const std::string& drop) {
  int ku = g.node_index(keep), kv = g.node_index(drop);
  require(ku >= 0 && kv >= 0 && g.edge_index(ku, kv) >= 0,
          "unknown edge " + keep + " " + drop);
  std::vector<std::string> nodes;
  for (const auto& l : g.node_labels())
    if (l != drop) nodes.push_back(l);
  std::vector<std::pair<std::string, std::string>> edges;
  for (const auto& e : g.edges()) {
    std::string a = g.label(e.u), b = g.label(e.v);
    if (a == drop) a = keep;
    if (b == drop) b = keep;
    if (a == b) continue;
    edges.emplace_back(a, b);
  }
  return Graph(g.name() + "/" + keep + drop, std::move(nodes), edges);
}

Graph build_trielim_graph(const Graph& g, const EliminationPlan& plan,
                          const std::vector<std::pair<std::string, std::string>>& extra_edges,
                          const std::string& name) {
  plan.validate(g);
  std::set<std::pair<std::string, std::string>> f;
  for (const auto& e : plan.entries) {
    auto key = std::minmax(e.u, e.v);
    f.insert({key.first, key.second});
  }

  std::vector<std::string> nodes = g.node_labels();
  for (const auto& e : plan.entries) nodes.push_back(e.w);

  std::vector<std::pair<std::string, std::string>> edges;
  for (const auto& e : g.edges()) {
    auto key = std::minmax(g.label(e.u), g.label(e.v));
    if (!f.count({key.first, key.second})) edges.emplace_back(key.first, key.second);
  }
  for (const auto& e : plan.entries) {
    edges.emplace_back(e.w, e.u);
    edges.emplace_back(e.w, e.v);
  }
  for (const auto& [a, b] : extra_edges) {
    auto key = std::minmax(a, b);
    require(!f.count({key.first, key.second}),
            "extra edge " + a + " " + b + " re-introduces an eliminated edge");
    edges.emplace_back(a, b);
  }
  return Graph(name.empty() ? g.name() + "_te" : name, std::move(nodes), edges);
}

void check_trielim_graph(const Graph& g, const Graph& gp, const EliminationPlan& plan) {
  plan.validate(g);

  std::set<std::string> expected_nodes(g.node_labels().begin(), g.node_labels().end());
  for (const auto& e : plan.entries) expected_nodes.insert(e.w);
  std::set<std::string> actual_nodes(gp.node_labels().begin(), gp.node_labels().end());
  require(expected_nodes == actual_nodes,
          "target node set is not V plus the associated nodes");

  std::set<std::pair<std::string, std::string>> f;
  for (const auto& e : plan.entries) {
    auto key = std::minmax(e.u, e.v);
    f.insert({key.first, key.second});
    require(gp.has_edge(e.w, e.u) && gp.has_edge(e.w, e.v),
            "target is missing a required edge at associated node " + e.w);
  }
  // E' and E must agree exactly off F.
  for (const auto& e : g.edges()) {
    auto key = std::minmax(g.label(e.u), g.label(e.v));
    bool eliminated = f.count({key.first, key.second}) > 0;
    bool present = gp.has_edge(key.first, key.second);
    if (eliminated)
      require(!present, "eliminated edge " + key.first + " " + key.second +
                            " is still present in the target");
    else
      require(present, "edge " + key.first + " " + key.second +
                           " of the source is missing from the target");
  }
}

std::pair<int, int> bipartite_dims(int p, int q) {
  return {p + q * (q - 1) / 2, q + p * (p - 1) / 2};
}

Layout build_kpartite_layout(const std::vector<KPartiteGroup>& groups, int k) {
  require(k >= 1, "need at least one part");
  require(!groups.empty(), "need at least one group");

  // condition (ii): distinct V_l land in distinct parts
  for (std::size_t a = 0; a < groups.size(); ++a) {
    require(groups[a].v_part >= 1 && groups[a].v_part <= k,
            "group " + std::to_string(a + 1) + " has part index out of range");
    for (std::size_t b = a + 1; b < groups.size(); ++b)
      require(groups[a].v_part != groups[b].v_part,
              "condition (ii) violated: groups " + std::to_string(a + 1) + " and " +
                  std::to_string(b + 1) + " share part " +
                  std::to_string(groups[a].v_part));
  }

  std::vector<std::string> kn_labels;
  for (const auto& gr : groups)
    kn_labels.insert(kn_labels.end(), gr.members.begin(), gr.members.end());
  const int n = static_cast<int>(kn_labels.size());
  auto source = std::make_shared<const Graph>(
      Graph::complete("K" + std::to_string(n), kn_labels));

  EliminationPlan plan;
  std::vector<std::vector<std::size_t>> stages;
  std::vector<std::vector<std::string>> parts(k);

  for (std::size_t l = 0; l < groups.size(); ++l) {
    const auto& gr = groups[l];
    parts[gr.v_part - 1].insert(parts[gr.v_part - 1].end(), gr.members.begin(),
                                gr.members.end());

    // clique edges of V_l in sorted order
    std::vector<std::string> members = gr.members;
    std::sort(members.begin(), members.end());
    std::vector<std::pair<std::string, std::string>> clique;
    for (std::size_t i = 0; i < members.size(); ++i)
      for (std::size_t j = i + 1; j < members.size(); ++j)
        clique.emplace_back(members[i], members[j]);

    stages.emplace_back();
    if (clique.empty()) continue;

    require(gr.w_part >= 1 && gr.w_part <= k,
            "condition (i) violated: group " + std::to_string(l + 1) +
                " has no valid part for its associated nodes");
    require(gr.w_part != gr.v_part,
            "condition (i) violated: group " + std::to_string(l + 1) +
                " places its nodes and associated nodes in the same part " +
                std::to_string(gr.v_part));
    require(gr.w_labels.empty() || gr.w_labels.size() == clique.size(),
            "group " + std::to_string(l + 1) + " supplies " +
                std::to_string(gr.w_labels.size()) + " associated labels for " +
                std::to_string(clique.size()) + " clique edges");

    for (std::size_t i = 0; i < clique.size(); ++i) {
      PlanEntry e;
      e.u = clique[i].first;
      e.v = clique[i].second;
      e.w = gr.w_labels.empty() ? "W_" + e.u + "_" + e.v : gr.w_labels[i];
      stages.back().push_back(plan.entries.size());
      plan.entries.push_back(e);
      parts[gr.w_part - 1].push_back(e.w);
    }
  }

  for (int i = 0; i < k; ++i)
    require(!parts[i].empty(), "part " + std::to_string(i + 1) + " is empty");

  std::string name = "K";
  for (int i = 0; i < k; ++i)
    name += (i ? "_" : "") + std::to_string(parts[i].size());
  auto target = std::make_shared<const Graph>(
      Graph::complete_multipartite(name, parts));

  plan.validate(*source);
  check_trielim_graph(*source, *target, plan);
  return Layout{source, target, std::move(plan), std::move(stages)};
}

Layout build_bipartite_layout(int p, int q) {
  require(p >= 1 && q >= 1, "p and q must be positive");
  require(p + q >= 5, "p+q must be at least 5");
  require(p <= 9 && q <= 9, "side labels support at most 9 nodes per side");

  KPartiteGroup a, b;
  for (int i = 1; i <= p; ++i) a.members.push_back("A" + std::to_string(i));
  for (int j = 1; j <= q; ++j) b.members.push_back("B" + std::to_string(j));
  a.v_part = 1;
  a.w_part = 2;  // B_ii' lives on the B side
  b.v_part = 2;
  b.w_part = 1;
  for (int i = 1; i <= p; ++i)
    for (int i2 = i + 1; i2 <= p; ++i2)
      a.w_labels.push_back("B" + std::to_string(i) + std::to_string(i2));
  for (int j = 1; j <= q; ++j)
    for (int j2 = j + 1; j2 <= q; ++j2)
      b.w_labels.push_back("A" + std::to_string(j) + std::to_string(j2));

  Layout layout = build_kpartite_layout({a, b}, 2);
  auto [r, s] = bipartite_dims(p, q);
  require(layout.target->node_count() == r + s, "bipartite layout size mismatch");
  require(layout.target->edge_count() == r * s, "bipartite layout edge mismatch");
  return layout;
}

}  // namespace cutlift
