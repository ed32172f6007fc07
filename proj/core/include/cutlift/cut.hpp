#ifndef CUTLIFT_CUT_HPP
#define CUTLIFT_CUT_HPP

#include <cstdint>
#include <functional>
#include <vector>

#include "cutlift/graph.hpp"

namespace cutlift {

// Node-subset masks are bit i = node index i. The enumeration anchor is the
// lexicographically greatest node (the highest index); anchored masks never
// set its bit, which picks one representative per complementary pair
// {S, V\S}.
using CutMask = std::uint32_t;

inline constexpr int kEnumNodeCap = 24;

// 0/1 incidence of edge (u,v) against the subset mask.
inline int cut_coord(CutMask mask, int u, int v) {
  return static_cast<int>(((mask >> u) ^ (mask >> v)) & 1u);
}

// A cut vector delta_G(S). Stores the subset; coordinates are computed on
// demand so enumeration at the node cap stays cheap.
class CutVector {
 public:
  CutVector(GraphPtr g, CutMask members) : g_(std::move(g)), members_(members) {}

  const Graph& graph() const { return *g_; }
  CutMask members() const { return members_; }
  int coord(int edge_idx) const {
    const auto& e = g_->edges()[edge_idx];
    return cut_coord(members_, e.u, e.v);
  }
  std::vector<int> coords() const;
  NodeSet source_set() const;

  // delta(S) = delta(V\S); vectors compare by coordinates.
  bool operator==(const CutVector& other) const;

 private:
  GraphPtr g_;
  CutMask members_;
};

CutMask node_set_mask(const Graph& g, const NodeSet& s);
NodeSet mask_to_set(const Graph& g, CutMask mask);

// Normalizes to the representative without the anchor node.
CutMask anchored(const Graph& g, CutMask mask);

CutVector cut_vector(GraphPtr g, const NodeSet& s);

// Number of anchored cuts, 2^(|V|-1). Throws CapExceeded beyond the node cap.
std::uint64_t cut_count(const Graph& g);

// All anchored cuts in increasing mask order.
std::vector<CutVector> enumerate_cuts(GraphPtr g);

// Visits anchored masks 0 .. 2^(|V|-1)-1 in order.
void for_each_cut_mask(const Graph& g, const std::function<void(CutMask)>& fn);

}  // namespace cutlift

#endif
