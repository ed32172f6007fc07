#ifndef CUTLIFT_CATALOG_HPP
#define CUTLIFT_CATALOG_HPP

#include <string>
#include <vector>

#include "cutlift/inequality.hpp"

namespace cutlift {

// sum_{e in F} x_e - sum_{e in C\F} x_e <= |F|-1 for a cycle C given as a
// closed node sequence and an odd subset F of its edges (by position in the
// sequence). Throws when C is not a cycle of g or |F| is even.
Inequality make_cycle(GraphPtr g, const std::vector<std::string>& cycle_nodes,
                      const std::vector<int>& f_positions);

// The facet-inducing pentagonal inequality on K_5:
//   x_12 + x_34 + x_35 + x_45 - sum_{u<=2, 3<=v} x_uv <= 0,
// with the five labels assignable for re-labeled copies.
Inequality make_pentagonal();
Inequality make_pentagonal(const std::vector<std::string>& labels);

// sum_{i<j} b_i b_j x_ij <= 0 on K_n, requiring sum b_i = 1. The formula is
// catalog content from the literature, so validity is re-established by
// enumeration before returning (within the node cap).
Inequality make_hypermetric(const std::vector<long long>& b);

// x_12 - x_13 - x_23 <= 0 on K_3.
Inequality make_triangle();

}  // namespace cutlift

#endif
