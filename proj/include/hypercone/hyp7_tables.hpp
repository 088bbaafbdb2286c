#pragma once

// Reference data for HYP_7: the 26 non-hypermetric CUT_7 facet orbits, the
// matching non-cut ray orbits, and the reference incidence and adjacency
// tables. Ray orbits are ordered R_1..R_29 (R_1..R_3 the cuts by |S| = 1, 2,
// 3); facet orbits F_1..F_14 follow b^1..b^14.

#include <array>
#include <vector>

namespace hypercone::tables {

extern const std::array<std::array<int, 21>, 26> kCut7Facets;
extern const std::array<std::array<int, 21>, 26> kHyp7Rays;
extern const std::array<std::vector<int>, 26> kSwitchLabels;
extern const std::array<std::array<int, 14>, 29> kIncidence;
extern const std::array<int, 29> kRayOrbitSizes;
extern const std::array<std::array<int, 3>, 29> kRayCutAdjacency;
extern const std::array<int, 29> kRayAdjacencyTotals;
extern const std::array<std::array<int, 14>, 14> kFacetAdjacency;
extern const std::array<int, 14> kFacetAdjacencyTotals;
extern const std::array<int, 14> kFacetOrbitSizes;

}  // namespace hypercone::tables
