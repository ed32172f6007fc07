#include "cutlift/inequality.hpp"

#include <algorithm>
#include <numeric>
#include <set>

#include "cutlift/errors.hpp"

namespace cutlift {

Inequality::Inequality(GraphPtr g, std::vector<Rational> coeffs, Rational rhs)
    : g_(std::move(g)), coeffs_(std::move(coeffs)), rhs_(std::move(rhs)) {
  if (static_cast<int>(coeffs_.size()) != g_->edge_count())
    throw Error("coefficient vector does not match the graph's edge count");
}

Inequality::Inequality(GraphPtr g, const CoeffList& coeffs, Rational rhs)
    : g_(std::move(g)), coeffs_(g_->edge_count()), rhs_(std::move(rhs)) {
  for (const auto& [u, v, c] : coeffs) {
    int e = g_->edge_index(u, v);
    if (e < 0) throw Error("coefficient on non-edge " + u + " " + v);
    coeffs_[e] += c;
  }
}

const Rational& Inequality::coeff(const std::string& u, const std::string& v) const {
  int e = g_->edge_index(u, v);
  if (e < 0) throw Error("coefficient on non-edge " + u + " " + v);
  return coeffs_[e];
}

int Inequality::support_size() const {
  return static_cast<int>(
      std::count_if(coeffs_.begin(), coeffs_.end(),
                    [](const Rational& c) { return c != 0; }));
}

bool Inequality::is_zero() const { return support_size() == 0 && rhs_ == 0; }

Rational Inequality::evaluate(CutMask mask) const {
  Rational acc = 0;
  const auto& edges = g_->edges();
  for (std::size_t e = 0; e < coeffs_.size(); ++e)
    if (coeffs_[e] != 0 && cut_coord(mask, edges[e].u, edges[e].v))
      acc += coeffs_[e];
  return acc;
}

bool Inequality::operator==(const Inequality& other) const {
  return rhs_ == other.rhs_ && coeffs_ == other.coeffs_ && *g_ == *other.g_;
}

Inequality apply_switching(const Inequality& q, const NodeSet& s) {
  return apply_switching(q, node_set_mask(q.graph(), s));
}

Inequality apply_switching(const Inequality& q, CutMask mask) {
  const Graph& g = q.graph();
  std::vector<Rational> coeffs = q.coeffs();
  Rational shift = 0;
  for (std::size_t e = 0; e < coeffs.size(); ++e) {
    if (coeffs[e] == 0) continue;
    if (cut_coord(mask, g.edges()[e].u, g.edges()[e].v)) {
      shift += coeffs[e];
      coeffs[e] = -coeffs[e];
    }
  }
  return Inequality(q.graph_ptr(), std::move(coeffs), q.rhs() - shift);
}

std::vector<int> permutation_indices(const Graph& g,
                                     const std::map<std::string, std::string>& sigma) {
  std::vector<int> perm(g.node_count());
  std::iota(perm.begin(), perm.end(), 0);
  for (const auto& [from, to] : sigma) {
    int i = g.node_index(from), j = g.node_index(to);
    if (i < 0) throw Error("permutation maps unknown node '" + from + "'");
    if (j < 0) throw Error("permutation maps to unknown node '" + to + "'");
    perm[i] = j;
  }
  std::vector<bool> hit(g.node_count(), false);
  for (int i : perm) {
    if (hit[i]) throw Error("permutation is not a bijection on the nodes");
    hit[i] = true;
  }
  return perm;
}

bool is_automorphism(const Graph& g, const std::vector<int>& perm) {
  for (const auto& e : g.edges())
    if (g.edge_index(perm[e.u], perm[e.v]) < 0) return false;
  return true;
}

std::string cycle_notation(const Graph& g, const std::vector<int>& perm) {
  std::string out;
  std::vector<bool> seen(perm.size(), false);
  for (std::size_t i = 0; i < perm.size(); ++i) {
    if (seen[i] || perm[i] == static_cast<int>(i)) continue;
    out += "(";
    std::size_t j = i;
    bool first = true;
    while (!seen[j]) {
      seen[j] = true;
      if (!first) out += " ";
      out += g.label(static_cast<int>(j));
      first = false;
      j = static_cast<std::size_t>(perm[j]);
    }
    out += ")";
  }
  return out.empty() ? "()" : out;
}

Inequality apply_permutation(const Inequality& q, const std::vector<int>& perm) {
  const Graph& g = q.graph();
  if (static_cast<int>(perm.size()) != g.node_count())
    throw Error("permutation size does not match the node count");
  if (!is_automorphism(g, perm))
    throw Error("permutation is not an automorphism of the graph");
  std::vector<Rational> coeffs(g.edge_count());
  for (int e = 0; e < g.edge_count(); ++e) {
    const auto& edge = g.edges()[e];
    coeffs[e] = q.coeff(g.edge_index(perm[edge.u], perm[edge.v]));
  }
  return Inequality(q.graph_ptr(), std::move(coeffs), q.rhs());
}

Inequality apply_permutation(const Inequality& q,
                             const std::map<std::string, std::string>& sigma) {
  return apply_permutation(q, permutation_indices(q.graph(), sigma));
}

Inequality collapse(const Inequality& q, const std::string& keep,
                    const std::string& drop) {
  const Graph& g = q.graph();
  auto merged = std::make_shared<const Graph>(contract_edge(g, keep, drop));
  std::vector<Rational> coeffs(merged->edge_count());
  for (int e = 0; e < merged->edge_count(); ++e) {
    const auto& edge = merged->edges()[e];
    const std::string& a = merged->label(edge.u);
    const std::string& b = merged->label(edge.v);
    if (a != keep && b != keep) {
      coeffs[e] = q.coeff(a, b);
      continue;
    }
    const std::string& other = (a == keep) ? b : a;
    int via_u = g.edge_index(keep, other);
    int via_v = g.edge_index(drop, other);
    Rational c = 0;
    if (via_u >= 0) c += q.coeff(via_u);
    if (via_v >= 0) c += q.coeff(via_v);
    coeffs[e] = c;
  }
  return Inequality(std::move(merged), std::move(coeffs), q.rhs());
}

Inequality zero_lift(const Inequality& q, GraphPtr super) {
  const Graph& g = q.graph();
  for (const auto& l : g.node_labels())
    if (!super->has_node(l))
      throw Error("not a subgraph: node '" + l + "' missing from the supergraph");
  for (const auto& e : g.edges())
    if (!super->has_edge(g.label(e.u), g.label(e.v)))
      throw Error("not a subgraph: edge " + g.label(e.u) + " " + g.label(e.v) +
                  " missing from the supergraph");
  std::vector<Rational> coeffs(super->edge_count());
  for (int e = 0; e < g.edge_count(); ++e)
    coeffs[super->edge_index(g.label(g.edges()[e].u), g.label(g.edges()[e].v))] =
        q.coeff(e);
  return Inequality(std::move(super), std::move(coeffs), q.rhs());
}

Graph support_graph(const Inequality& q) {
  const Graph& g = q.graph();
  std::set<std::string> nodes;
  std::vector<std::pair<std::string, std::string>> edges;
  for (int e = 0; e < g.edge_count(); ++e) {
    if (q.coeff(e) == 0) continue;
    const auto& edge = g.edges()[e];
    nodes.insert(g.label(edge.u));
    nodes.insert(g.label(edge.v));
    edges.emplace_back(g.label(edge.u), g.label(edge.v));
  }
  return Graph(g.name() + "_supp",
               std::vector<std::string>(nodes.begin(), nodes.end()), edges);
}

Inequality normalized(const Inequality& q) {
  Int num_gcd = 0, den_lcm = 1;
  auto feed = [&](const Rational& r) {
    if (r == 0) return;
    num_gcd = gcd(num_gcd, numerator(r));
    den_lcm = lcm(den_lcm, denominator(r));
  };
  for (const auto& c : q.coeffs()) feed(c);
  feed(q.rhs());
  if (num_gcd == 0) return q;  // zero inequality with zero rhs
  Rational scale = Rational(den_lcm, abs(num_gcd));
  std::vector<Rational> coeffs = q.coeffs();
  for (auto& c : coeffs) c *= scale;
  return Inequality(q.graph_ptr(), std::move(coeffs), q.rhs() * scale);
}

FormExpansion expand_form(const TriangularForm& f) {
  if (f.u == f.v || f.u == f.w || f.v == f.w)
    throw Error("triangular form needs three distinct nodes");
  FormExpansion e;
  switch (f.kind) {
    case FormKind::UV_W:
      e.terms = {{f.u, f.v, 1}, {f.u, f.w, -1}, {f.v, f.w, -1}};
      break;
    case FormKind::WV_U:
      e.terms = {{f.v, f.w, 1}, {f.u, f.w, -1}, {f.u, f.v, -1}};
      break;
    case FormKind::UW_V:
      e.terms = {{f.u, f.w, 1}, {f.u, f.v, -1}, {f.v, f.w, -1}};
      break;
    case FormKind::UVW:
      e.terms = {{f.u, f.v, 1}, {f.u, f.w, 1}, {f.v, f.w, 1}};
      e.rhs = 2;
      break;
    case FormKind::Canonical:
      throw Error("canonical is a plan placeholder, not an expandable form");
  }
  return e;
}

Inequality form_inequality(const TriangularForm& f, GraphPtr g) {
  FormExpansion e = expand_form(f);
  Inequality::CoeffList coeffs;
  for (const auto& [u, v, c] : e.terms) coeffs.emplace_back(u, v, Rational(c));
  return Inequality(std::move(g), coeffs, Rational(e.rhs));
}

bool is_triangle_inequality(const Inequality& q) {
  if (q.support_size() != 3) return false;
  const Graph& g = q.graph();
  std::set<int> nodes;
  Rational mag = 0;
  int positives = 0;
  for (int e = 0; e < g.edge_count(); ++e) {
    const Rational& c = q.coeff(e);
    if (c == 0) continue;
    nodes.insert(g.edges()[e].u);
    nodes.insert(g.edges()[e].v);
    Rational a = abs(c);
    if (mag == 0)
      mag = a;
    else if (a != mag)
      return false;
    if (c > 0) ++positives;
  }
  if (nodes.size() != 3) return false;
  if (positives == 1) return q.rhs() == 0;
  if (positives == 3) return q.rhs() == 2 * mag;
  return false;
}

}  // namespace cutlift
