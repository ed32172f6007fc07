#include "cutlift/catalog.hpp"

#include <memory>
#include <set>

#include "cutlift/errors.hpp"
#include "cutlift/verify.hpp"

namespace cutlift {

Inequality make_cycle(GraphPtr g, const std::vector<std::string>& cycle_nodes,
                      const std::vector<int>& f_positions) {
  const std::size_t len = cycle_nodes.size();
  if (len < 3) throw Error("a cycle needs at least 3 nodes");
  std::set<std::string> distinct(cycle_nodes.begin(), cycle_nodes.end());
  if (distinct.size() != len) throw Error("cycle repeats a node");
  if (f_positions.size() % 2 == 0) throw Error("|F| must be odd");

  std::set<int> fset(f_positions.begin(), f_positions.end());
  if (fset.size() != f_positions.size()) throw Error("duplicate position in F");
  for (int pos : f_positions)
    if (pos < 0 || pos >= static_cast<int>(len))
      throw Error("F position " + std::to_string(pos) + " outside the cycle");

  Inequality::CoeffList coeffs;
  for (std::size_t i = 0; i < len; ++i) {
    const std::string& u = cycle_nodes[i];
    const std::string& v = cycle_nodes[(i + 1) % len];
    if (!g->has_edge(u, v))
      throw Error("not a cycle in the graph: missing edge " + u + " " + v);
    coeffs.emplace_back(u, v, Rational(fset.count(static_cast<int>(i)) ? 1 : -1));
  }
  return Inequality(std::move(g), coeffs,
                    Rational(static_cast<int>(f_positions.size()) - 1));
}

Inequality make_pentagonal() {
  return make_pentagonal({"1", "2", "3", "4", "5"});
}

Inequality make_pentagonal(const std::vector<std::string>& labels) {
  if (labels.size() != 5) throw Error("pentagonal inequality needs 5 labels");
  auto g = std::make_shared<const Graph>(Graph::complete("K5", labels));
  Inequality::CoeffList coeffs;
  coeffs.emplace_back(labels[0], labels[1], Rational(1));
  coeffs.emplace_back(labels[2], labels[3], Rational(1));
  coeffs.emplace_back(labels[2], labels[4], Rational(1));
  coeffs.emplace_back(labels[3], labels[4], Rational(1));
  for (int u = 0; u <= 1; ++u)
    for (int v = 2; v <= 4; ++v)
      coeffs.emplace_back(labels[u], labels[v], Rational(-1));
  return Inequality(std::move(g), coeffs, Rational(0));
}

Inequality make_hypermetric(const std::vector<long long>& b) {
  long long sum = 0;
  for (long long bi : b) sum += bi;
  if (sum != 1) throw Error("hypermetric b-vector must sum to 1");
  const int n = static_cast<int>(b.size());
  auto g = std::make_shared<const Graph>(Graph::complete(n));
  std::vector<Rational> coeffs(g->edge_count());
  for (int i = 1; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j)
      coeffs[g->edge_index(std::to_string(i), std::to_string(j))] =
          Rational(b[i - 1]) * Rational(b[j - 1]);
  Inequality out(g, std::move(coeffs), Rational(0));
  if (n <= kValidityNodeCap && !is_valid(out))
    throw Error("internal: hypermetric formula produced an invalid inequality");
  return out;
}

Inequality make_triangle() {
  auto g = std::make_shared<const Graph>(Graph::complete(3));
  return Inequality(g,
                    Inequality::CoeffList{{"1", "2", Rational(1)},
                                          {"1", "3", Rational(-1)},
                                          {"2", "3", Rational(-1)}},
                    Rational(0));
}

}  // namespace cutlift
