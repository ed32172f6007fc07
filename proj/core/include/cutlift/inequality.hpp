#ifndef CUTLIFT_INEQUALITY_HPP
#define CUTLIFT_INEQUALITY_HPP

#include <map>
#include <optional>
#include <string>
#include <tuple>
#include <vector>

#include "cutlift/cut.hpp"
#include "cutlift/graph.hpp"
#include "cutlift/rational.hpp"

namespace cutlift {

// a^T x <= a_0 over the edges of a fixed graph. Coefficients are stored
// densely in edge-index order; absent (zero) entries are simply zero and
// are omitted by the serializer. Values are immutable.
class Inequality {
 public:
  using CoeffList = std::vector<std::tuple<std::string, std::string, Rational>>;

  explicit Inequality(GraphPtr g)
      : g_(std::move(g)), coeffs_(g_->edge_count()), rhs_(0) {}
  Inequality(GraphPtr g, std::vector<Rational> coeffs, Rational rhs);
  // Convenience constructor from (u, v, coefficient) triples. Throws on a
  // pair that is not an edge of the graph.
  Inequality(GraphPtr g, const CoeffList& coeffs, Rational rhs);

  const Graph& graph() const { return *g_; }
  GraphPtr graph_ptr() const { return g_; }
  const std::vector<Rational>& coeffs() const { return coeffs_; }
  const Rational& coeff(int edge_idx) const { return coeffs_[edge_idx]; }
  const Rational& coeff(const std::string& u, const std::string& v) const;
  const Rational& rhs() const { return rhs_; }

  int support_size() const;
  bool is_zero() const;

  // a^T delta(S) for the subset mask.
  Rational evaluate(CutMask mask) const;

  // Same graph (structurally), same coefficients, same rhs. No scaling
  // normalization happens here.
  bool operator==(const Inequality& other) const;

 private:
  GraphPtr g_;
  std::vector<Rational> coeffs_;
  Rational rhs_;
};

// ---- symmetry / reduction algebra ----

// The S-switching: signs flip on edges cut by S, rhs drops by a^T delta(S).
// Involutive; S and its complement act identically.
Inequality apply_switching(const Inequality& q, const NodeSet& s);
Inequality apply_switching(const Inequality& q, CutMask mask);

// The sigma-permutation a'_ij = a_{sigma(i)sigma(j)}. sigma must be an
// automorphism of the graph (checked).
Inequality apply_permutation(const Inequality& q,
                             const std::map<std::string, std::string>& sigma);
// Index-form permutation: perm[i] = index of sigma(node i). Checked.
Inequality apply_permutation(const Inequality& q, const std::vector<int>& perm);

// The uv-collapsing on G/uv; the merged node carries the label `keep`.
Inequality collapse(const Inequality& q, const std::string& keep,
                    const std::string& drop);

// Same coefficients on the subgraph's edges, zero elsewhere, same rhs.
// Throws if q's graph is not a subgraph of `super`.
Inequality zero_lift(const Inequality& q, GraphPtr super);

// Subgraph spanned by the edges with nonzero coefficient.
Graph support_graph(const Inequality& q);

// Scales by lcm(denominators)/gcd(numerators) over coefficients and rhs:
// the primitive integral representative with the same orientation.
Inequality normalized(const Inequality& q);

// A triangular form instantiated on three distinct nodes.
struct TriangularForm {
  FormKind kind = FormKind::UV_W;
  std::string u, v, w;
};

// The form's linear expression as (edge endpoints, coefficient) terms plus
// its right-hand side (0 for the homogeneous kinds, 2 for the triangle
// perimeter kind).
struct FormExpansion {
  std::vector<std::tuple<std::string, std::string, int>> terms;
  int rhs = 0;
};

FormExpansion expand_form(const TriangularForm& f);

// The expansion as an Inequality over a graph containing the triangle uvw.
Inequality form_inequality(const TriangularForm& f, GraphPtr g);

// True when q is, up to positive scaling, one of the four switchings of the
// triangle inequality on some triangle of its graph.
bool is_triangle_inequality(const Inequality& q);

// Permutations as label maps; helpers shared by equivalence and the CLI.
std::vector<int> permutation_indices(const Graph& g,
                                     const std::map<std::string, std::string>& sigma);
bool is_automorphism(const Graph& g, const std::vector<int>& perm);
std::string cycle_notation(const Graph& g, const std::vector<int>& perm);

}  // namespace cutlift

#endif
