#ifndef CUTLIFT_GRAPH_HPP
#define CUTLIFT_GRAPH_HPP

#include <memory>
#include <string>
#include <utility>
#include <vector>

namespace cutlift {

// Labeled simple undirected graph. Immutable after construction; every
// operation below returns a new graph. Nodes iterate in sorted label order
// and edges in sorted (lo,hi) label-pair order, so serialization and cut
// enumeration are deterministic.
class Graph {
 public:
  struct Edge {
    int u, v;  // node indices, u < v
    bool operator==(const Edge&) const = default;
  };

  Graph(std::string name, std::vector<std::string> nodes,
        const std::vector<std::pair<std::string, std::string>>& edges);

  // K_n on labels "1".."n".
  static Graph complete(int n);
  static Graph complete(std::string name, std::vector<std::string> labels);
  // Cycle 1-2-...-n-1.
  static Graph cycle(int n);
  static Graph complete_multipartite(std::string name,
                                     std::vector<std::vector<std::string>> parts);

  const std::string& name() const { return name_; }
  int node_count() const { return static_cast<int>(labels_.size()); }
  int edge_count() const { return static_cast<int>(edges_.size()); }
  const std::vector<std::string>& node_labels() const { return labels_; }
  const std::vector<Edge>& edges() const { return edges_; }
  const std::string& label(int v) const { return labels_[v]; }

  // -1 when absent.
  int node_index(const std::string& label) const;
  int edge_index(int u, int v) const;
  int edge_index(const std::string& u, const std::string& v) const;
  bool has_node(const std::string& label) const { return node_index(label) >= 0; }
  bool has_edge(const std::string& u, const std::string& v) const {
    return edge_index(u, v) >= 0;
  }

  std::vector<int> neighbors(int v) const;
  int degree(int v) const;

  // Structural equality: same labels, same edges. Names are not compared.
  bool operator==(const Graph& other) const {
    return labels_ == other.labels_ && edges_ == other.edges_;
  }

 private:
  std::string name_;
  std::vector<std::string> labels_;  // sorted
  std::vector<Edge> edges_;          // sorted by (u,v)
  std::vector<int> edge_lookup_;     // n*n matrix, edge index or -1
};

using GraphPtr = std::shared_ptr<const Graph>;

// Node subsets are sorted label lists in the public API.
using NodeSet = std::vector<std::string>;

// The four triangle expressions used to cancel an eliminated edge, plus
// the "pick by sign" placeholder used in plans:
//   UV_W: x_uv - x_uw - x_vw   (rhs 0)
//   WV_U: x_vw - x_uw - x_uv   (rhs 0)
//   UW_V: x_uw - x_uv - x_vw   (rhs 0)
//   UVW:  x_uv + x_uw + x_vw   (rhs 2)
enum class FormKind { UV_W, WV_U, UW_V, UVW, Canonical };

const char* form_token(FormKind k);
FormKind form_from_token(const std::string& token);

// One eliminated edge u v with its fresh associated node w.
struct PlanEntry {
  std::string u, v, w;
  FormKind form = FormKind::Canonical;
};

struct EliminationPlan {
  std::vector<PlanEntry> entries;

  // Checks entries against the source graph: uv in E, distinct, w fresh
  // and pairwise distinct. Throws Error on violation.
  void validate(const Graph& g) const;
};

// Contraction G/uv. The merged node carries the label `keep`; neighbor
// sets are unioned, duplicate edges dropped.
Graph contract_edge(const Graph& g, const std::string& keep, const std::string& drop);

// G' = (V + {w_i}, (E \ F) + {w_i u_i, w_i v_i} + extra_edges). Throws if
// an extra edge re-introduces an edge of F.
Graph build_trielim_graph(const Graph& g, const EliminationPlan& plan,
                          const std::vector<std::pair<std::string, std::string>>& extra_edges,
                          const std::string& name = "");

// Checks that gp is a triangular elimination of g with respect to plan:
// V' = V + {w_i}, all w-edges present, E' and E agree exactly off F.
// Throws Error naming the failed requirement.
void check_trielim_graph(const Graph& g, const Graph& gp, const EliminationPlan& plan);

// A source graph, a target graph and the plan connecting them, with the
// plan entries grouped into per-part stages for staged elimination.
struct Layout {
  GraphPtr source;
  GraphPtr target;
  EliminationPlan plan;
  std::vector<std::vector<std::size_t>> stages;  // indices into plan.entries
};

// One group of the K_n node partition: its members, the target part
// holding them, the target part holding the associated nodes, and
// (optionally) explicit labels for the associated nodes in clique-edge
// order. w_part and w_labels are ignored when members.size() < 2.
struct KPartiteGroup {
  std::vector<std::string> members;
  int v_part = 0;  // 1-based
  int w_part = 0;  // 1-based
  std::vector<std::string> w_labels;
};

// K_n -> complete k-partite layout. Validates the two grouping conditions
// (each V_l and W_l wholly inside distinct parts; distinct V_l in distinct
// parts) and throws Error naming the violated condition.
Layout build_kpartite_layout(const std::vector<KPartiteGroup>& groups, int k);

// (r, s) for the K_n -> K_{r,s} construction: r = p + C(q,2), s = q + C(p,2).
std::pair<int, int> bipartite_dims(int p, int q);

// K_{p+q} on A_1..A_p, B_1..B_q -> K_{r,s}; eliminates the within-side
// edges, associating A_iA_i' with B_ii' and B_jB_j' with A_jj'.
Layout build_bipartite_layout(int p, int q);

}  // namespace cutlift

#endif
