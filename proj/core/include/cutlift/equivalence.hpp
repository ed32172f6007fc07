#ifndef CUTLIFT_EQUIVALENCE_HPP
#define CUTLIFT_EQUIVALENCE_HPP

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "cutlift/inequality.hpp"
#include "cutlift/rational.hpp"

namespace cutlift {

// Automorphism orbits are generated, not discovered: the supported graphs
// are the complete multipartite ones (complete graphs included, as all-
// singleton parts), whose group is the within-part symmetric groups plus
// permutations of equal-size parts.
struct PartStructure {
  std::vector<std::vector<int>> parts;  // node indices, each sorted
};

// Parts of a complete multipartite graph, nullopt for any other family.
std::optional<PartStructure> multipartite_parts(const Graph& g);

class PartPermGroup {
 public:
  // Group of the complete multipartite graph; throws Error("unsupported
  // graph family") otherwise.
  static PartPermGroup of_graph(const Graph& g);
  // S_p x S_q on K_{p+q} labeled A1..Ap,B1..Bq, with the matched A/B swap
  // when p == q. Used by the bipartite equivalence criterion.
  static PartPermGroup bipartite_sides(const Graph& g, int p, int q);

  Int size() const;
  // Visits every permutation (as a node-index map); stops early when the
  // visitor returns true. Identity comes first.
  void for_each(const std::function<bool(const std::vector<int>&)>& fn) const;

 private:
  PartPermGroup(int nodes, std::vector<std::vector<int>> parts, bool block_swaps)
      : node_count_(nodes), parts_(std::move(parts)), block_swaps_(block_swaps) {}
  int node_count_;
  std::vector<std::vector<int>> parts_;
  bool block_swaps_;
};

struct EquivWitness {
  std::vector<int> perm;  // node-index permutation of the shared graph
  NodeSet switching;      // normalized to the smaller of S / complement
  std::string note;       // direction: maps the first inequality onto the second
};

struct EquivResult {
  bool equivalent = false;
  std::optional<EquivWitness> witness;
};

struct EquivOptions {
  // Re-run the full search when an orbit invariant says "not equivalent";
  // a disagreement is an internal error. Used by tests.
  bool verify_shortcircuit = false;
};

// q2 == apply_switching(apply_permutation(q1, w.perm), w.switching)?
Inequality apply_witness(const Inequality& q1, const EquivWitness& w);

// Exhaustive search over Aut(G) x anchored switchings. Both inequalities
// must live on the same complete multipartite graph; the search budget
// |Aut| * 2^(n-1) is capped at 1e8.
EquivResult are_ps_equivalent(const Inequality& q1, const Inequality& q2,
                              const EquivOptions& opts = {});

// Lexicographically minimal normalized inequality over the full
// permutation-switching orbit; equal canonical forms iff PS-equivalent.
Inequality canonical_form(const Inequality& q);

// The bipartite-lift equivalence criterion on K_n sources, n = p+q >= 5:
// searches (S_p x S_q [x matched swap]) x switchings. Inputs must be
// non-triangle facet-inducing inequalities; triangle inputs are rejected
// because the criterion's converse fails for them.
EquivResult fast_equiv_bipartite(const Inequality& a, const Inequality& b, int p,
                                 int q);

}  // namespace cutlift

#endif
