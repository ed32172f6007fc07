#ifndef CUTLIFT_IO_HPP
#define CUTLIFT_IO_HPP

#include <string>

#include "cutlift/graph.hpp"
#include "cutlift/inequality.hpp"

namespace cutlift {

// Line-oriented ASCII formats, '#' comments, exact rationals as p/q.
// Serialization is sorted and byte-deterministic; parse(serialize(x)) == x.
//
// graph:  "graph <name>" / "node <label>"... / "edge <u> <v>"...
// ineq:   "ineq over <graphname>" / "coef <u> <v> <p>/<q>"... / "rhs <p>/<q>"
// plan:   "elim <u> <v> -> <w> <form>" with form in
//         {uv.w, wv.u, uw.v, uvw, canonical}
// bundle: graph, a line "---", then the inequality (.cib)

Graph parse_graph(const std::string& text);
std::string serialize_graph(const Graph& g);

// The inequality file names its graph; the structure comes from `g`, whose
// name must match.
Inequality parse_inequality(const std::string& text, GraphPtr g);
std::string serialize_inequality(const Inequality& q);

EliminationPlan parse_plan(const std::string& text);
std::string serialize_plan(const EliminationPlan& plan);

Inequality parse_bundle(const std::string& text);
std::string serialize_bundle(const Inequality& q);

std::string read_file(const std::string& path);
void write_file(const std::string& path, const std::string& content);

}  // namespace cutlift

#endif
