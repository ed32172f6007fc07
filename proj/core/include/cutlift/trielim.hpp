#ifndef CUTLIFT_TRIELIM_HPP
#define CUTLIFT_TRIELIM_HPP

#include <string>
#include <vector>

#include "cutlift/graph.hpp"
#include "cutlift/inequality.hpp"

namespace cutlift {

// Output of eliminating the plan's edges from an inequality:
//   output - input = sum_i |a_{u_i v_i}| * form_i   (as formal expressions)
// with zero output coefficient on every eliminated edge.
struct EliminationResult {
  Inequality output;
  EliminationPlan plan_used;  // forms resolved, no Canonical left
  Rational rhs_shift;         // a'_0 - a_0
  GraphPtr source;            // graph the input lived on
};

// Eliminates per the plan. Canonical entries resolve to UV_W when the
// eliminated coefficient is <= 0 and UW_V when it is > 0; an explicit form
// that fails to cancel the eliminated coefficient is an error.
EliminationResult eliminate(const Inequality& q, GraphPtr target,
                            const EliminationPlan& plan);

struct CollapseBackResult {
  Inequality restored;
  // Associated nodes whose perimeter form required a switching before the
  // contractions; empty for canonical eliminations.
  NodeSet preswitched;
};

// Undoes an elimination by contracting every associated node back onto an
// endpoint of its edge. Perimeter (uvw) forms are switched away first and
// reported.
CollapseBackResult collapse_back(const EliminationResult& res);

enum class ConditionState { Pass, Fail, NotVerified };

struct ConditionReport {
  ConditionState state = ConditionState::NotVerified;
  std::string detail;
};

// Per-condition verdicts for the facet-preservation sufficient conditions.
struct FacetConditionReport {
  ConditionReport input_facet;    // (i) input facet inducing (brute force when small)
  ConditionReport neighborhoods;  // (ii) N_G'(w_i)\{u_i,v_i} inside N_G(u_i) cap N_G(v_i)
  ConditionReport support;        // (iii) not completely supported by the u_i/v_i star
  ConditionReport w_independent;  // associated nodes pairwise non-adjacent
  bool violated() const;          // any hard Fail
  bool all_pass() const;
};

FacetConditionReport check_facet_conditions(const Inequality& q, const Graph& target,
                                            const EliminationPlan& plan);

// Audit trail of one staged elimination step.
struct StageRecord {
  GraphPtr graph;
  Inequality ineq;
};

struct MultistageResult {
  EliminationResult result;
  std::vector<StageRecord> stages;  // G^(1)..G^(m) with their inequalities
};

// Staged elimination K_n -> layout.target through the intermediate joins,
// with canonical forms throughout. Rejects sources with fewer than five
// nodes and triangle inequalities. With prune_unused, associated nodes of
// zero-coefficient edges are dropped from the output graph.
MultistageResult eliminate_multistage(const Inequality& q, const Layout& layout,
                                      bool prune_unused = false);

}  // namespace cutlift

#endif
