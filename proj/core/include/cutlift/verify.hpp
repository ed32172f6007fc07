#ifndef CUTLIFT_VERIFY_HPP
#define CUTLIFT_VERIFY_HPP

#include <optional>
#include <string>
#include <vector>

#include "cutlift/inequality.hpp"

namespace cutlift {

inline constexpr int kValidityNodeCap = 24;
inline constexpr int kFacetNodeCap = 20;

// Smallest violating anchored subset, or nullopt when the inequality holds
// on every cut. threads = 0 picks CUTLIFT_THREADS / hardware.
std::optional<CutMask> find_violation(const Inequality& q, int threads = 0);
bool is_valid(const Inequality& q, int threads = 0);

// All anchored subsets whose cut vectors satisfy the inequality with
// equality, in increasing mask order.
std::vector<CutMask> root_masks(const Inequality& q, int threads = 0);
std::vector<NodeSet> roots(const Inequality& q);

// A maximal affinely independent set of roots. affine_dim = |roots| - 1
// when taken from is_facet.
struct FacetCertificate {
  std::vector<NodeSet> roots;
  int affine_dim = -1;
};

struct FacetResult {
  bool facet = false;
  FacetCertificate certificate;
};

// Facet test by exhaustive root enumeration and exact affine rank. Requires
// a valid inequality (throws otherwise). For homogeneous inequalities the
// affine and linear root ranks are computed on both routes and must agree.
FacetResult is_facet(const Inequality& q);

struct PruneVerdict {
  bool not_facet = false;  // false means "inconclusive"
  std::string detail;
};

// Degree-2 pruning: a support node whose support edges reach only two
// nodes u,v of a triangle rules the inequality out, unless the inequality
// is the triangle inequality on those three nodes.
PruneVerdict degree2_prune(const Inequality& q);

// Complete irredundant facet list of the cut polytope of a tiny graph,
// by brute force over |E|-subsets of cut vectors. Independent of is_facet;
// the two are cross-checked in tests. Caps: |E| <= 12, |V| <= 6.
std::vector<Inequality> hull_oracle(GraphPtr g);

}  // namespace cutlift

#endif
