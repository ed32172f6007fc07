#include "cutlift/cut.hpp"

#include <algorithm>

#include "cutlift/errors.hpp"

namespace cutlift {

std::vector<int> CutVector::coords() const {
  std::vector<int> out(g_->edge_count());
  for (int e = 0; e < g_->edge_count(); ++e) out[e] = coord(e);
  return out;
}

NodeSet CutVector::source_set() const { return mask_to_set(*g_, members_); }

bool CutVector::operator==(const CutVector& other) const {
  if (!(*g_ == other.graph())) return false;
  return anchored(*g_, members_) == anchored(*g_, other.members_);
}

CutMask node_set_mask(const Graph& g, const NodeSet& s) {
  CutMask mask = 0;
  for (const auto& label : s) {
    int idx = g.node_index(label);
    if (idx < 0) throw Error("unknown node '" + label + "' in subset");
    mask |= CutMask{1} << idx;
  }
  return mask;
}

NodeSet mask_to_set(const Graph& g, CutMask mask) {
  NodeSet out;
  for (int i = 0; i < g.node_count(); ++i)
    if (mask >> i & 1u) out.push_back(g.label(i));
  return out;
}

CutMask anchored(const Graph& g, CutMask mask) {
  const int anchor = g.node_count() - 1;
  const CutMask full = (g.node_count() >= 32)
                           ? ~CutMask{0}
                           : (CutMask{1} << g.node_count()) - 1;
  if (mask >> anchor & 1u) return ~mask & full & ~(CutMask{1} << anchor);
  return mask;
}

CutVector cut_vector(GraphPtr g, const NodeSet& s) {
  return CutVector(g, node_set_mask(*g, s));
}

std::uint64_t cut_count(const Graph& g) {
  if (g.node_count() > kEnumNodeCap)
    throw CapExceeded("cut enumeration capped at " + std::to_string(kEnumNodeCap) +
                      " nodes, graph has " + std::to_string(g.node_count()));
  if (g.node_count() == 0) return 1;
  return std::uint64_t{1} << (g.node_count() - 1);
}

std::vector<CutVector> enumerate_cuts(GraphPtr g) {
  const std::uint64_t total = cut_count(*g);
  std::vector<CutVector> out;
  out.reserve(total);
  for (std::uint64_t mask = 0; mask < total; ++mask)
    out.emplace_back(g, static_cast<CutMask>(mask));
  return out;
}

void for_each_cut_mask(const Graph& g, const std::function<void(CutMask)>& fn) {
  const std::uint64_t total = cut_count(g);
  for (std::uint64_t mask = 0; mask < total; ++mask)
    fn(static_cast<CutMask>(mask));
}

}  // namespace cutlift
