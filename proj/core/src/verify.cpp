#include "cutlift/verify.hpp"

#include <algorithm>
#include <cstdlib>
#include <numeric>
#include <set>
#include <thread>
#include <tuple>

#include "cutlift/errors.hpp"
#include "cutlift/ratmat.hpp"

namespace cutlift {

namespace {

// Integral view of a (positively rescaled) inequality for the hot
// enumeration loops. Falls back to rationals when the numbers do not fit.
struct FastEval {
  std::vector<std::tuple<int, int, long long>> terms;
  long long rhs = 0;
};

std::optional<FastEval> fast_eval(const Inequality& q) {
  Inequality n = normalized(q);
  const Int bound = Int(1) << 62;
  Int total = 0;
  FastEval fe;
  for (int e = 0; e < n.graph().edge_count(); ++e) {
    const Rational& c = n.coeff(e);
    if (c == 0) continue;
    if (denominator(c) != 1) return std::nullopt;
    total += abs(numerator(c));
    const auto& edge = n.graph().edges()[e];
    fe.terms.emplace_back(edge.u, edge.v, numerator(c).convert_to<long long>());
  }
  if (denominator(n.rhs()) != 1) return std::nullopt;
  total += abs(numerator(n.rhs()));
  if (total >= bound) return std::nullopt;
  fe.rhs = numerator(n.rhs()).convert_to<long long>();
  return fe;
}

int pick_threads(int requested, std::uint64_t total) {
  if (total < (std::uint64_t{1} << 15)) return 1;
  int t = requested;
  if (t <= 0) {
    if (const char* env = std::getenv("CUTLIFT_THREADS")) t = std::atoi(env);
    if (t <= 0) t = static_cast<int>(std::thread::hardware_concurrency());
  }
  return std::clamp(t, 1, 64);
}

// Runs fn(chunk_index, begin, end) over T contiguous chunks of [0, total).
template <typename Fn>
void run_chunks(std::uint64_t total, int threads, Fn fn) {
  if (threads <= 1) {
    fn(0, 0, total);
    return;
  }
  std::vector<std::thread> pool;
  std::uint64_t per = (total + threads - 1) / threads;
  for (int t = 0; t < threads; ++t) {
    std::uint64_t lo = per * t, hi = std::min(total, per * (t + 1));
    if (lo >= hi) break;
    pool.emplace_back([&, t, lo, hi] { fn(t, lo, hi); });
  }
  for (auto& th : pool) th.join();
}

std::vector<Rational> mask_point(const Graph& g, CutMask mask) {
  std::vector<Rational> row(g.edge_count());
  for (int e = 0; e < g.edge_count(); ++e)
    row[e] = cut_coord(mask, g.edges()[e].u, g.edges()[e].v);
  return row;
}

}  // namespace

std::optional<CutMask> find_violation(const Inequality& q, int threads) {
  const Graph& g = q.graph();
  if (g.node_count() > kValidityNodeCap)
    throw CapExceeded("validity check capped at " + std::to_string(kValidityNodeCap) +
                      " nodes, graph has " + std::to_string(g.node_count()));
  const std::uint64_t total = cut_count(g);
  const int t = pick_threads(threads, total);

  auto fe = fast_eval(q);
  std::vector<std::uint64_t> firsts(static_cast<std::size_t>(t), total);
  run_chunks(total, t, [&](int chunk, std::uint64_t lo, std::uint64_t hi) {
    if (fe) {
      for (std::uint64_t m = lo; m < hi; ++m) {
        long long acc = 0;
        for (const auto& [u, v, c] : fe->terms)
          acc += c & -static_cast<long long>((m >> u ^ m >> v) & 1);
        if (acc > fe->rhs) {
          firsts[chunk] = m;
          return;
        }
      }
    } else {
      for (std::uint64_t m = lo; m < hi; ++m)
        if (q.evaluate(static_cast<CutMask>(m)) > q.rhs()) {
          firsts[chunk] = m;
          return;
        }
    }
  });
  std::uint64_t best = *std::min_element(firsts.begin(), firsts.end());
  if (best == total) return std::nullopt;
  return static_cast<CutMask>(best);
}

bool is_valid(const Inequality& q, int threads) {
  return !find_violation(q, threads).has_value();
}

std::vector<CutMask> root_masks(const Inequality& q, int threads) {
  const Graph& g = q.graph();
  if (g.node_count() > kValidityNodeCap)
    throw CapExceeded("root enumeration capped at " +
                      std::to_string(kValidityNodeCap) + " nodes");
  const std::uint64_t total = cut_count(g);
  const int t = pick_threads(threads, total);

  auto fe = fast_eval(q);
  std::vector<std::vector<CutMask>> found(static_cast<std::size_t>(t));
  run_chunks(total, t, [&](int chunk, std::uint64_t lo, std::uint64_t hi) {
    for (std::uint64_t m = lo; m < hi; ++m) {
      bool root;
      if (fe) {
        long long acc = 0;
        for (const auto& [u, v, c] : fe->terms)
          acc += c & -static_cast<long long>((m >> u ^ m >> v) & 1);
        root = acc == fe->rhs;
      } else {
        root = q.evaluate(static_cast<CutMask>(m)) == q.rhs();
      }
      if (root) found[chunk].push_back(static_cast<CutMask>(m));
    }
  });
  std::vector<CutMask> out;
  for (auto& part : found) out.insert(out.end(), part.begin(), part.end());
  return out;
}

std::vector<NodeSet> roots(const Inequality& q) {
  std::vector<NodeSet> out;
  for (CutMask m : root_masks(q)) out.push_back(mask_to_set(q.graph(), m));
  return out;
}

FacetResult is_facet(const Inequality& q) {
  const Graph& g = q.graph();
  if (g.node_count() > kFacetNodeCap)
    throw CapExceeded("facet check capped at " + std::to_string(kFacetNodeCap) +
                      " nodes, graph has " + std::to_string(g.node_count()));
  if (auto bad = find_violation(q))
    throw Error("inequality is not valid (violated by S={" +
                [&] {
                  std::string s;
                  for (const auto& l : mask_to_set(g, *bad)) s += (s.empty() ? "" : ",") + l;
                  return s;
                }() +
                "})");

  std::vector<CutMask> rts = root_masks(q);
  FacetResult res;
  if (rts.empty()) {
    res.certificate.affine_dim = -1;
    return res;  // cannot happen for valid inequalities on nonempty graphs
  }

  std::vector<Rational> origin = mask_point(g, rts[0]);
  RowBasis basis(g.edge_count());
  res.certificate.roots.push_back(mask_to_set(g, rts[0]));
  for (std::size_t i = 1; i < rts.size(); ++i) {
    if (basis.rank() == g.edge_count()) break;
    std::vector<Rational> row = mask_point(g, rts[i]);
    for (int e = 0; e < g.edge_count(); ++e) row[e] -= origin[e];
    if (basis.try_add(std::move(row)))
      res.certificate.roots.push_back(mask_to_set(g, rts[i]));
  }
  res.certificate.affine_dim = basis.rank();

  // Homogeneous case: the cone route (linear rank of the roots) has to give
  // the same dimension.
  if (q.rhs() == 0) {
    RowBasis lin(g.edge_count());
    for (CutMask m : rts) lin.try_add(mask_point(g, m));
    if (lin.rank() != res.certificate.affine_dim)
      throw Error("internal: cone and polytope root ranks disagree");
  }

  res.facet = res.certificate.affine_dim == g.edge_count() - 1;
  return res;
}

PruneVerdict degree2_prune(const Inequality& q) {
  const Graph& g = q.graph();
  for (int l = 0; l < g.node_count(); ++l) {
    std::vector<int> supp;  // support neighbors of l
    for (int u : g.neighbors(l))
      if (q.coeff(g.edge_index(l, u)) != 0) supp.push_back(u);
    if (supp.empty() || supp.size() > 2) continue;

    std::vector<std::pair<int, int>> candidates;
    if (supp.size() == 2) {
      if (g.edge_index(supp[0], supp[1]) >= 0) candidates.emplace_back(supp[0], supp[1]);
    } else {
      for (int v : g.neighbors(l))
        if (v != supp[0] && g.edge_index(supp[0], v) >= 0)
          candidates.emplace_back(supp[0], v);
    }
    for (auto [u, v] : candidates) {
      // triangle l,u,v with support at l confined to lu, lv
      bool exception = false;
      if (is_triangle_inequality(q)) {
        Graph supp_g = support_graph(q);
        exception = supp_g.node_count() == 3 && supp_g.has_node(g.label(l)) &&
                    supp_g.has_node(g.label(u)) && supp_g.has_node(g.label(v));
      }
      if (!exception)
        return {true, "support node " + g.label(l) + " reaches only " + g.label(u) +
                          " and " + g.label(v) + " of a triangle"};
    }
  }
  return {false, "no triangle meets the pruning hypotheses"};
}

namespace {

// Integer kernel vector of a d x (d+1) integer matrix of full row rank
// (empty result when the rows are dependent). Forward Bareiss keeps the
// entries integral minors; the back-substitution divisions are exact
// because the kernel scaled to x_free = (last pivot) has minor-sized
// integer components. Entries stay far inside int64 for d <= 12.
std::vector<long long> hyperplane_normal(std::vector<std::vector<long long>> m) {
  const int rows = static_cast<int>(m.size());
  const int cols = rows + 1;
  std::vector<int> pivot_cols;
  long long prev = 1;
  int r = 0;
  for (int c = 0; c < cols && r < rows; ++c) {
    int pivot = -1;
    for (int i = r; i < rows; ++i)
      if (m[i][c] != 0) {
        pivot = i;
        break;
      }
    if (pivot < 0) continue;
    std::swap(m[r], m[pivot]);
    for (int i = r + 1; i < rows; ++i) {
      for (int j = c + 1; j < cols; ++j)
        m[i][j] = (m[r][c] * m[i][j] - m[i][c] * m[r][j]) / prev;
      m[i][c] = 0;
    }
    prev = m[r][c];
    pivot_cols.push_back(c);
    ++r;
  }
  if (r < rows) return {};

  int free_col = 0;
  for (int c = 0, p = 0; c < cols; ++c) {
    if (p < rows && pivot_cols[p] == c)
      ++p;
    else
      free_col = c;
  }
  std::vector<long long> x(cols, 0);
  x[free_col] = m[rows - 1][pivot_cols[rows - 1]];
  for (int i = rows - 1; i >= 0; --i) {
    long long acc = 0;
    for (int j = pivot_cols[i] + 1; j < cols; ++j)
      if (x[j] != 0) acc += m[i][j] * x[j];
    x[pivot_cols[i]] = -acc / m[i][pivot_cols[i]];
  }
  return x;
}

std::vector<long long> primitive(std::vector<long long> v) {
  long long g = 0;
  for (long long c : v) g = std::gcd(g, c);
  if (g > 1)
    for (long long& c : v) c /= g;
  return v;
}

}  // namespace

std::vector<Inequality> hull_oracle(GraphPtr g) {
  const int d = g->edge_count();
  if (d > 12) throw CapExceeded("hull oracle capped at 12 edges");
  if (g->node_count() > 6) throw CapExceeded("hull oracle capped at 6 nodes");
  if (d == 0) return {};

  const int m = static_cast<int>(cut_count(*g));
  std::vector<std::vector<long long>> pts(m, std::vector<long long>(d));
  for (int i = 0; i < m; ++i)
    for (int e = 0; e < d; ++e)
      pts[i][e] = cut_coord(static_cast<CutMask>(i), g->edges()[e].u, g->edges()[e].v);

  // budget on C(m, d)
  {
    double combos = 1;
    for (int i = 0; i < d; ++i) combos = combos * (m - i) / (i + 1);
    if (combos > 5e7) throw CapExceeded("hull oracle subset budget exceeded");
  }

  std::set<std::vector<long long>> seen;  // sign-fixed primitive (a, -a0)
  std::vector<int> comb(d);
  for (int i = 0; i < d; ++i) comb[i] = i;
  if (m < d) return {};

  std::vector<Inequality> facets;
  while (true) {
    // rows [point | 1]; kernel = (a, -a0)
    std::vector<std::vector<long long>> mat(d, std::vector<long long>(d + 1));
    for (int i = 0; i < d; ++i) {
      for (int e = 0; e < d; ++e) mat[i][e] = pts[comb[i]][e];
      mat[i][d] = 1;
    }
    std::vector<long long> normal = hyperplane_normal(std::move(mat));
    if (!normal.empty()) {
      normal = primitive(std::move(normal));
      // dedup key ignores orientation; validity picks it afterwards
      std::vector<long long> key = normal;
      for (long long c : key) {
        if (c == 0) continue;
        if (c < 0)
          for (long long& k : key) k = -k;
        break;
      }
      if (seen.insert(key).second) {
        int below = 0, above = 0;
        for (int i = 0; i < m; ++i) {
          long long v = normal[d];
          for (int e = 0; e < d; ++e)
            if (pts[i][e]) v += normal[e];
          if (v > 0) ++above;
          if (v < 0) ++below;
        }
        if ((above == 0) != (below == 0)) {  // supporting and proper
          if (above > 0)
            for (long long& c : normal) c = -c;
          std::vector<Rational> a(d);
          for (int e = 0; e < d; ++e) a[e] = normal[e];
          facets.push_back(Inequality(g, std::move(a), Rational(-normal[d])));
        }
      }
    }

    int i = d - 1;
    while (i >= 0 && comb[i] == m - d + i) --i;
    if (i < 0) break;
    ++comb[i];
    for (int j = i + 1; j < d; ++j) comb[j] = comb[j - 1] + 1;
  }

  std::sort(facets.begin(), facets.end(), [](const Inequality& x, const Inequality& y) {
    if (x.coeffs() != y.coeffs()) return x.coeffs() < y.coeffs();
    return x.rhs() < y.rhs();
  });
  return facets;
}

}  // namespace cutlift
