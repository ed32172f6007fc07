#include "cutlift/equivalence.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <numeric>

#include "cutlift/errors.hpp"
#include "cutlift/verify.hpp"

namespace cutlift {

std::optional<PartStructure> multipartite_parts(const Graph& g) {
  const int n = g.node_count();
  std::vector<int> comp(n, -1);
  int ncomp = 0;
  for (int s = 0; s < n; ++s) {
    if (comp[s] >= 0) continue;
    // component of the complement graph
    std::vector<int> stack{s};
    comp[s] = ncomp;
    while (!stack.empty()) {
      int v = stack.back();
      stack.pop_back();
      for (int u = 0; u < n; ++u)
        if (u != v && comp[u] < 0 && g.edge_index(u, v) < 0) {
          comp[u] = ncomp;
          stack.push_back(u);
        }
    }
    ++ncomp;
  }
  // complete multipartite iff adjacency is exactly "different component"
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      if ((g.edge_index(u, v) >= 0) != (comp[u] != comp[v])) return std::nullopt;

  PartStructure ps;
  ps.parts.resize(ncomp);
  for (int v = 0; v < n; ++v) ps.parts[comp[v]].push_back(v);
  std::sort(ps.parts.begin(), ps.parts.end());
  return ps;
}

PartPermGroup PartPermGroup::of_graph(const Graph& g) {
  auto ps = multipartite_parts(g);
  if (!ps)
    throw Error("unsupported graph family: automorphisms are generated only for "
                "complete multipartite graphs");
  return PartPermGroup(g.node_count(), std::move(ps->parts), true);
}

PartPermGroup PartPermGroup::bipartite_sides(const Graph& g, int p, int q) {
  std::vector<std::vector<int>> sides(2);
  for (int i = 1; i <= p; ++i) {
    int idx = g.node_index("A" + std::to_string(i));
    if (idx < 0) throw Error("expected node A" + std::to_string(i));
    sides[0].push_back(idx);
  }
  for (int j = 1; j <= q; ++j) {
    int idx = g.node_index("B" + std::to_string(j));
    if (idx < 0) throw Error("expected node B" + std::to_string(j));
    sides[1].push_back(idx);
  }
  if (p + q != g.node_count()) throw Error("graph has extra nodes beyond A_i/B_j");
  std::sort(sides[0].begin(), sides[0].end());
  std::sort(sides[1].begin(), sides[1].end());
  return PartPermGroup(g.node_count(), std::move(sides), true);
}

Int PartPermGroup::size() const {
  auto factorial = [](std::size_t k) {
    Int f = 1;
    for (std::size_t i = 2; i <= k; ++i) f *= static_cast<unsigned>(i);
    return f;
  };
  Int total = 1;
  std::map<std::size_t, std::size_t> class_count;
  for (const auto& part : parts_) {
    total *= factorial(part.size());
    class_count[part.size()] += 1;
  }
  if (block_swaps_)
    for (const auto& [sz, cnt] : class_count) total *= factorial(cnt);
  return total;
}

void PartPermGroup::for_each(const std::function<bool(const std::vector<int>&)>& fn) const {
  const std::size_t m = parts_.size();

  // part indices grouped by size, each class permuted as whole blocks
  std::map<std::size_t, std::vector<std::size_t>> classes;
  for (std::size_t l = 0; l < m; ++l) classes[parts_[l].size()].push_back(l);

  std::vector<std::vector<std::size_t>> class_parts;
  for (auto& [sz, list] : classes) class_parts.push_back(list);

  std::vector<std::vector<std::size_t>> block_perm;  // per class
  for (const auto& list : class_parts) {
    std::vector<std::size_t> ident(list.size());
    std::iota(ident.begin(), ident.end(), 0);
    block_perm.push_back(ident);
  }

  std::vector<std::size_t> block_target(m);  // part l -> image part
  std::vector<std::vector<int>> within(m);
  std::vector<int> perm(node_count_);

  std::function<bool(std::size_t)> iter_within = [&](std::size_t l) -> bool {
    if (l == m) {
      for (std::size_t i = 0; i < m; ++i) {
        const auto& src = parts_[i];
        const auto& dst = parts_[block_target[i]];
        for (std::size_t k = 0; k < src.size(); ++k)
          perm[src[k]] = dst[within[i][k]];
      }
      return fn(perm);
    }
    std::vector<int> w(parts_[l].size());
    std::iota(w.begin(), w.end(), 0);
    do {
      within[l] = w;
      if (iter_within(l + 1)) return true;
    } while (std::next_permutation(w.begin(), w.end()));
    return false;
  };

  std::function<bool(std::size_t)> iter_blocks = [&](std::size_t c) -> bool {
    if (c == class_parts.size()) return iter_within(0);
    std::vector<std::size_t> assign(class_parts[c].size());
    std::iota(assign.begin(), assign.end(), 0);
    do {
      for (std::size_t i = 0; i < assign.size(); ++i)
        block_target[class_parts[c][i]] = class_parts[c][assign[i]];
      if (iter_blocks(c + 1)) return true;
      if (!block_swaps_) break;
    } while (std::next_permutation(assign.begin(), assign.end()));
    return false;
  };

  iter_blocks(0);
}

namespace {

// Sorted incident |coefficient| lists per node, grouped by degree. Invariant
// under both switching and permutation.
std::map<int, std::vector<std::vector<Rational>>> node_profiles(const Inequality& q) {
  const Graph& g = q.graph();
  std::map<int, std::vector<std::vector<Rational>>> out;
  for (int v = 0; v < g.node_count(); ++v) {
    std::vector<Rational> inc;
    for (int u : g.neighbors(v)) inc.push_back(abs(q.coeff(g.edge_index(u, v))));
    std::sort(inc.begin(), inc.end());
    out[g.degree(v)].push_back(std::move(inc));
  }
  for (auto& [d, list] : out) std::sort(list.begin(), list.end());
  return out;
}

NodeSet normalized_switch_set(const Graph& g, CutMask mask) {
  const int n = g.node_count();
  CutMask full = (n >= 32) ? ~CutMask{0} : (CutMask{1} << n) - 1;
  CutMask comp = ~mask & full;
  if (std::popcount(comp) < std::popcount(mask)) mask = comp;
  return mask_to_set(g, mask);
}

// Search for (sigma, S) with q2 == switch(permute(q1, sigma), S).
std::optional<EquivWitness> orbit_search(const Inequality& q1, const Inequality& q2,
                                         const PartPermGroup& group) {
  const Graph& g = q1.graph();
  const int n = g.node_count();
  const int ne = g.edge_count();
  const std::uint64_t nswitch = std::uint64_t{1} << (n - 1);

  if (group.size() * nswitch > 100000000) throw CapExceeded("equivalence search budget exceeded");

  std::optional<EquivWitness> found;
  std::vector<Rational> permuted(ne);
  group.for_each([&](const std::vector<int>& perm) {
    for (int e = 0; e < ne; ++e) {
      const auto& edge = g.edges()[e];
      permuted[e] = q1.coeff(g.edge_index(perm[edge.u], perm[edge.v]));
    }
    for (std::uint64_t s = 0; s < nswitch; ++s) {
      bool match = true;
      for (int e = 0; e < ne && match; ++e) {
        const auto& edge = g.edges()[e];
        if (cut_coord(static_cast<CutMask>(s), edge.u, edge.v))
          match = permuted[e] == -q2.coeff(e);
        else
          match = permuted[e] == q2.coeff(e);
      }
      if (!match) continue;
      Rational shift = 0;
      for (int e = 0; e < ne; ++e) {
        const auto& edge = g.edges()[e];
        if (permuted[e] != 0 && cut_coord(static_cast<CutMask>(s), edge.u, edge.v))
          shift += permuted[e];
      }
      if (q1.rhs() - shift != q2.rhs()) continue;
      EquivWitness w;
      w.perm = perm;
      w.switching = normalized_switch_set(g, static_cast<CutMask>(s));
      w.note = "second = switching of permuted first";
      found = std::move(w);
      return true;
    }
    return false;
  });
  return found;
}

}  // namespace

Inequality apply_witness(const Inequality& q1, const EquivWitness& w) {
  return apply_switching(apply_permutation(q1, w.perm), w.switching);
}

EquivResult are_ps_equivalent(const Inequality& q1, const Inequality& q2,
                              const EquivOptions& opts) {
  if (!(q1.graph() == q2.graph()))
    throw Error("inequalities live on different graphs");
  PartPermGroup group = PartPermGroup::of_graph(q1.graph());

  if (node_profiles(q1) != node_profiles(q2)) {
    if (opts.verify_shortcircuit && orbit_search(q1, q2, group))
      throw Error("internal: orbit invariant misclassified an equivalent pair");
    return {false, std::nullopt};
  }

  auto witness = orbit_search(q1, q2, group);
  if (!witness) return {false, std::nullopt};
  return {true, std::move(witness)};
}

Inequality canonical_form(const Inequality& q) {
  const Graph& g = q.graph();
  PartPermGroup group = PartPermGroup::of_graph(g);
  const int n = g.node_count();
  const int ne = g.edge_count();
  const std::uint64_t nswitch = std::uint64_t{1} << (n - 1);
  if (group.size() * nswitch > 100000000)
    throw CapExceeded("canonical form search budget exceeded");

  Inequality base = normalized(q);
  std::vector<Rational> best;
  Rational best_rhs = 0;
  std::vector<Rational> permuted(ne), candidate(ne);

  group.for_each([&](const std::vector<int>& perm) {
    for (int e = 0; e < ne; ++e) {
      const auto& edge = g.edges()[e];
      permuted[e] = base.coeff(g.edge_index(perm[edge.u], perm[edge.v]));
    }
    for (std::uint64_t s = 0; s < nswitch; ++s) {
      Rational shift = 0;
      for (int e = 0; e < ne; ++e) {
        const auto& edge = g.edges()[e];
        if (cut_coord(static_cast<CutMask>(s), edge.u, edge.v)) {
          candidate[e] = -permuted[e];
          shift += permuted[e];
        } else {
          candidate[e] = permuted[e];
        }
      }
      Rational rhs = base.rhs() - shift;
      if (best.empty() || candidate < best ||
          (candidate == best && rhs < best_rhs)) {
        best = candidate;
        best_rhs = rhs;
      }
    }
    return false;
  });
  return Inequality(q.graph_ptr(), std::move(best), std::move(best_rhs));
}

EquivResult fast_equiv_bipartite(const Inequality& a, const Inequality& b, int p,
                                 int q) {
  if (!(a.graph() == b.graph())) throw Error("inequalities live on different graphs");
  const Graph& g = a.graph();
  const int n = p + q;
  if (n < 5) throw Error("bipartite criterion needs p+q >= 5");
  if (g.node_count() != n || g.edge_count() != n * (n - 1) / 2)
    throw Error("source graph is not the complete graph on the A/B labels");

  if (is_triangle_inequality(a) || is_triangle_inequality(b))
    throw Error("triangle inequalities are rejected: the bipartite criterion's "
                "converse fails for them (lifted triangles can be equivalent while "
                "the sources are not)");
  if (!is_facet(a).facet || !is_facet(b).facet)
    throw Error("bipartite criterion requires facet-inducing inputs");

  PartPermGroup group = PartPermGroup::bipartite_sides(g, p, q);
  auto witness = orbit_search(a, b, group);
  if (!witness) return {false, std::nullopt};
  return {true, std::move(witness)};
}

}  // namespace cutlift
