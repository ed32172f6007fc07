#ifndef CUTLIFT_TESTS_HELPERS_HPP
#define CUTLIFT_TESTS_HELPERS_HPP

#include <algorithm>
#include <memory>
#include <random>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "cutlift/graph.hpp"
#include "cutlift/inequality.hpp"

namespace cutlift::testing {

inline GraphPtr shared(Graph g) { return std::make_shared<const Graph>(std::move(g)); }

inline GraphPtr k(int n) { return shared(Graph::complete(n)); }

inline GraphPtr k3113() {
  return shared(Graph::complete_multipartite(
      "K3_1_1_3", {{"1", "2", "3"}, {"4"}, {"5"}, {"6", "7", "8"}}));
}

inline std::pair<std::string, std::string> ekey(const std::string& a,
                                                const std::string& b) {
  return a < b ? std::make_pair(a, b) : std::make_pair(b, a);
}

// Small integer coefficients in [-3, 3], arbitrary rhs in [-4, 4].
inline Inequality random_inequality(GraphPtr g, std::mt19937& rng) {
  std::uniform_int_distribution<int> coeff(-3, 3), rhs(-4, 4);
  std::vector<Rational> coeffs(g->edge_count());
  for (auto& c : coeffs) c = coeff(rng);
  return Inequality(std::move(g), std::move(coeffs), Rational(rhs(rng)));
}

// Random plan eliminating `t` edges of g, fresh labels w1..wt.
inline EliminationPlan random_plan(const Graph& g, int t, std::mt19937& rng) {
  std::vector<int> edge_ids(g.edge_count());
  for (int i = 0; i < g.edge_count(); ++i) edge_ids[i] = i;
  std::shuffle(edge_ids.begin(), edge_ids.end(), rng);
  EliminationPlan plan;
  for (int i = 0; i < t; ++i) {
    const auto& e = g.edges()[edge_ids[i]];
    plan.entries.push_back(
        {g.label(e.u), g.label(e.v), "w" + std::to_string(i + 1), FormKind::Canonical});
  }
  return plan;
}

// Random extra edges for a triangular-elimination target: any pair over
// V + W that is neither eliminated, nor a required w-edge, nor an edge of
// g, kept with the given percentage.
inline std::vector<std::pair<std::string, std::string>> random_extra_edges(
    const Graph& g, const EliminationPlan& plan, std::mt19937& rng, int percent) {
  std::vector<std::string> labels = g.node_labels();
  std::set<std::pair<std::string, std::string>> skip;
  for (const auto& e : plan.entries) {
    labels.push_back(e.w);
    skip.insert(ekey(e.u, e.v));
    skip.insert(ekey(e.w, e.u));
    skip.insert(ekey(e.w, e.v));
  }
  std::uniform_int_distribution<int> dice(0, 99);
  std::vector<std::pair<std::string, std::string>> extra;
  for (std::size_t i = 0; i < labels.size(); ++i)
    for (std::size_t j = i + 1; j < labels.size(); ++j) {
      if (skip.count(ekey(labels[i], labels[j]))) continue;
      if (g.has_node(labels[i]) && g.has_node(labels[j]) &&
          g.has_edge(labels[i], labels[j]))
        continue;  // kept automatically by build_trielim_graph
      if (dice(rng) < percent) extra.emplace_back(labels[i], labels[j]);
    }
  return extra;
}

}  // namespace cutlift::testing

#endif
