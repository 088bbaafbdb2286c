#include "hypercone/hyp7_tables.hpp"

namespace hypercone::tables {

// Non-hypermetric CUT_7 facet representatives O_1..O_26, oriented as <F, d> >= 0.
const std::array<std::array<int, 21>, 26> kCut7Facets = {{
    {-1, -1, 0, 0, 1, 1, -1, 0, 1, 0, 1, 1, 0, 1, 0, 1, -1, 1, 1, -1, 0},
    {-1, 1, 0, 0, -1, 1, 1, 0, -1, 0, 1, -1, 0, 1, 0, -1, 1, 1, 1, 1, 0},
    {-1, 1, 0, 0, 1, 1, 1, 0, -1, 0, 1, 1, 0, -1, 0, 1, 1, -1, -1, 1, 0},
    {-1, -1, -1, 1, 1, 1, -1, 0, 0, 1, 1, 0, 1, 0, 1, 1, 1, 1, 0, -1, -1},
    {-1, 1, -1, 1, 1, -1, 1, 0, 0, 1, -1, 0, -1, 0, 1, 1, 1, -1, 0, 1, 1},
    {1, 1, -1, 1, 1, -1, -1, 0, 0, -1, 1, 0, -1, 0, 1, 1, 1, -1, 0, 1, 1},
    {1, 1, 1, 1, 1, -1, -1, 0, 0, -1, 1, 0, -1, 0, 1, -1, -1, 1, 0, 1, 1},
    {-1, -1, -1, 0, 1, 2, -1, 0, 1, 1, 2, 0, 1, 1, 2, -1, 1, 1, 0, -1, -2},
    {1, 1, -1, 0, 1, -2, -1, 0, 1, -1, 2, 0, 1, -1, 2, 1, 1, -1, 0, -1, 2},
    {-1, -1, -1, 0, 1, 2, -1, 0, -1, 1, 2, 0, -1, 1, 2, 1, 1, 1, 0, 1, -2},
    {-1, 1, -1, 0, 1, 2, 1, 0, -1, 1, 2, 0, 1, -1, -2, 1, 1, 1, 0, 1, -2},
    {1, 1, 1, 0, -1, 2, -1, 0, 1, 1, -2, 0, 1, 1, -2, -1, 1, -1, 0, 1, 2},
    {1, 1, -1, 0, -1, 2, -1, 0, 1, 1, -2, 0, 1, 1, -2, 1, -1, 1, 0, 1, 2},
    {-1, -1, 1, 0, -1, 2, -1, 0, 1, -1, 2, 0, 1, -1, 2, 1, 1, -1, 0, -1, 2},
    {-1, -1, -2, 1, 1, 2, 0, -1, 1, 1, 2, -2, 1, 1, 1, 2, 2, 3, -1, -2, -2},
    {-1, 1, -2, -1, 1, 2, 0, -1, -1, 1, 2, 2, 1, -1, -1, -2, 2, 3, 1, 2, -2},
    {-1, -1, 2, -1, 1, 2, 0, 1, -1, 1, 2, 2, -1, 1, 1, 2, -2, -3, 1, 2, -2},
    {-1, 1, 2, -1, -1, 2, 0, 1, -1, -1, 2, -2, 1, 1, -1, 2, 2, -3, -1, 2, 2},
    {1, 1, -2, -1, -1, 2, 0, 1, 1, 1, -2, 2, 1, 1, -1, -2, -2, 3, -1, 2, 2},
    {1, 1, 2, -1, -1, 2, 0, -1, 1, 1, -2, -2, 1, 1, -1, 2, 2, -3, -1, 2, 2},
    {-1, -1, 2, -1, -1, 2, 0, 1, -1, -1, 2, 2, -1, -1, 1, 2, 2, -3, -1, 2, 2},
    {-1, -1, -2, 1, 2, 3, -1, -2, 1, 2, 3, -2, 1, 2, 3, 2, 3, 5, -2, -3, -5},
    {-1, 1, -2, 1, -2, 3, 1, -2, 1, -2, 3, 2, -1, 2, -3, 2, -3, 5, 2, -3, 5},
    {-1, -1, 2, 1, 2, -3, -1, 2, 1, 2, -3, 2, 1, 2, -3, -2, -3, 5, -2, 3, 5},
    {-1, -1, -2, -1, 2, 3, -1, -2, -1, 2, 3, -2, -1, 2, 3, -2, 3, 5, 2, 3, -5},
    {-1, -1, 2, -1, 2, 3, -1, 2, -1, 2, 3, 2, -1, 2, 3, 2, -3, -5, 2, 3, -5},
}};

// Non-cut HYP_7 ray generators R_4..R_29; row k pairs with kCut7Facets[k].
const std::array<std::array<int, 21>, 26> kHyp7Rays = {{
    {2, 2, 2, 2, 1, 1, 2, 1, 1, 2, 1, 1, 1, 1, 2, 1, 2, 1, 1, 2, 2},
    {2, 1, 2, 1, 2, 1, 1, 1, 2, 1, 1, 2, 1, 1, 1, 2, 1, 1, 1, 1, 1},
    {2, 1, 1, 1, 1, 1, 1, 2, 2, 2, 1, 1, 1, 2, 1, 1, 1, 2, 2, 1, 2},
    {2, 2, 2, 1, 1, 2, 2, 1, 2, 1, 1, 1, 1, 2, 1, 1, 1, 1, 1, 2, 2},
    {2, 1, 2, 1, 1, 1, 1, 1, 2, 1, 2, 2, 2, 1, 1, 1, 1, 2, 1, 1, 1},
    {1, 1, 2, 1, 1, 1, 2, 2, 1, 2, 1, 2, 2, 1, 1, 1, 1, 2, 1, 1, 1},
    {1, 1, 1, 1, 1, 1, 2, 1, 1, 2, 1, 1, 2, 1, 1, 2, 2, 1, 1, 1, 1},
    {2, 2, 2, 2, 2, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 2, 1, 1, 1, 2, 2},
    {1, 1, 2, 1, 2, 2, 1, 2, 1, 2, 1, 2, 1, 2, 1, 1, 1, 2, 2, 2, 1},
    {2, 2, 2, 1, 2, 1, 1, 1, 2, 1, 1, 1, 2, 1, 1, 1, 1, 1, 2, 1, 2},
    {2, 1, 2, 1, 2, 1, 2, 1, 2, 1, 1, 2, 1, 2, 2, 1, 1, 1, 2, 1, 2},
    {1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 2, 1, 1, 1, 2, 2, 1, 2, 1, 1, 1},
    {1, 1, 2, 1, 1, 1, 1, 2, 1, 1, 2, 2, 1, 1, 2, 1, 2, 1, 1, 1, 1},
    {2, 2, 1, 2, 1, 1, 1, 2, 1, 2, 1, 2, 1, 2, 1, 1, 1, 2, 2, 2, 1},
    {2, 2, 2, 2, 2, 1, 1, 1, 1, 1, 1, 2, 1, 1, 2, 1, 1, 1, 1, 2, 2},
    {2, 1, 2, 1, 2, 1, 2, 1, 2, 1, 1, 1, 1, 2, 1, 2, 1, 1, 2, 1, 2},
    {2, 2, 1, 1, 2, 1, 1, 2, 2, 1, 1, 1, 2, 1, 2, 1, 2, 2, 2, 1, 2},
    {2, 1, 1, 1, 1, 1, 2, 2, 2, 2, 1, 2, 1, 1, 1, 1, 1, 2, 1, 1, 1},
    {1, 1, 2, 1, 1, 1, 1, 2, 1, 1, 2, 1, 1, 1, 1, 2, 2, 1, 1, 1, 1},
    {1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 2, 2, 1, 1, 1, 1, 1, 2, 1, 1, 1},
    {2, 2, 1, 1, 1, 1, 1, 2, 2, 2, 1, 1, 2, 2, 2, 1, 1, 2, 1, 1, 1},
    {1, 1, 2, 2, 1, 1, 1, 2, 2, 1, 1, 2, 2, 1, 1, 1, 2, 1, 2, 2, 2},
    {1, 2, 2, 2, 2, 1, 2, 2, 2, 2, 1, 1, 1, 1, 2, 1, 1, 1, 1, 2, 1},
    {1, 1, 1, 2, 1, 2, 1, 1, 2, 1, 2, 1, 2, 1, 2, 2, 1, 1, 2, 1, 1},
    {1, 1, 2, 1, 1, 1, 1, 2, 1, 1, 1, 2, 1, 1, 1, 2, 2, 1, 1, 1, 2},
    {1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 2, 1, 1, 2},
}};

// Cut set S (1-based) switching the first facet of a class onto row k; empty for class bases.
const std::array<std::vector<int>, 26> kSwitchLabels = {{
    {},
    {3, 5, 6},
    {3, 5, 4},
    {},
    {3, 7},
    {2, 3, 7},
    {1, 5, 6},
    {},
    {1, 4, 6},
    {5},
    {3, 5},
    {1, 7},
    {7, 4, 1},
    {6, 4},
    {},
    {5, 3},
    {5, 4},
    {1, 2, 7},  // {2, 6, 7} is not incident to the class base; {1, 2, 7} is
    {7, 4, 1},
    {1, 7},
    {4, 5, 6},
    {},
    {3, 6},
    {7, 4},
    {5},
    {5, 4},
}};

const std::array<std::array<int, 14>, 29> kIncidence = {{
    {90, 150, 150, 180, 20, 15, 15, 180, 30, 30, 180, 180, 120, 120},
    {80, 130, 80, 220, 20, 60, 0, 180, 40, 10, 240, 100, 320, 10},
    {75, 126, 96, 180, 18, 36, 12, 156, 30, 12, 162, 132, 240, 84},
    {13, 7, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0},
    {14, 6, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0},
    {13, 7, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0},
    {14, 5, 0, 0, 1, 0, 0, 0, 0, 0, 0, 0, 0, 0},
    {15, 4, 0, 0, 1, 0, 0, 0, 0, 0, 0, 0, 0, 0},
    {14, 5, 0, 0, 1, 0, 0, 0, 0, 0, 0, 0, 0, 0},
    {15, 5, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0},
    {11, 7, 1, 1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0},
    {11, 7, 0, 2, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0},
    {12, 6, 2, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0},
    {11, 7, 0, 2, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0},
    {12, 7, 0, 1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0},
    {12, 6, 0, 2, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0},
    {12, 6, 2, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0},
    {10, 6, 0, 2, 1, 0, 0, 1, 0, 0, 0, 0, 0, 0},
    {11, 5, 1, 1, 1, 0, 0, 1, 0, 0, 0, 0, 0, 0},
    {10, 6, 0, 2, 1, 1, 0, 0, 0, 0, 0, 0, 0, 0},
    {10, 6, 1, 1, 1, 1, 0, 0, 0, 0, 0, 0, 0, 0},
    {11, 6, 1, 0, 1, 0, 0, 1, 0, 0, 0, 0, 0, 0},
    {11, 6, 0, 2, 1, 0, 0, 0, 0, 0, 0, 0, 0, 0},
    {11, 6, 2, 0, 0, 0, 1, 0, 0, 0, 0, 0, 0, 0},
    {7, 6, 1, 3, 0, 1, 0, 1, 0, 0, 0, 0, 1, 0},
    {8, 5, 2, 2, 0, 0, 0, 2, 0, 0, 1, 0, 0, 0},
    {8, 6, 0, 3, 0, 0, 0, 2, 0, 0, 0, 1, 0, 0},
    {8, 6, 4, 0, 0, 0, 1, 0, 0, 0, 0, 0, 0, 1},
    {8, 6, 0, 4, 0, 2, 0, 0, 0, 0, 0, 0, 0, 0},
}};

const std::array<int, 29> kRayOrbitSizes = {7, 21, 35, 2520, 2520, 2520, 2520, 1260, 1260, 252, 2520, 2520, 2520, 2520, 1260, 1260, 630, 2520, 2520, 1260, 840, 840, 420, 420, 840, 630, 420, 210, 105};

const std::array<std::array<int, 3>, 29> kRayCutAdjacency = {{
    {6, 21, 35},
    {7, 20, 35},
    {7, 21, 34},
    {3, 6, 11},
    {4, 7, 9},
    {3, 7, 10},
    {3, 7, 10},
    {4, 7, 9},
    {3, 8, 9},
    {5, 5, 10},
    {3, 6, 11},
    {2, 8, 10},
    {4, 5, 11},
    {2, 8, 10},
    {4, 7, 9},
    {3, 9, 8},
    {4, 4, 12},
    {2, 8, 10},
    {3, 7, 10},
    {1, 10, 9},
    {2, 9, 9},
    {4, 6, 10},
    {4, 7, 9},
    {5, 1, 14},
    {1, 9, 10},
    {2, 8, 10},
    {3, 6, 11},
    {5, 1, 14},
    {2, 12, 6},
}};

const std::array<int, 29> kRayAdjacencyTotals = {15662, 12532, 10664, 20, 20, 20, 20, 20, 20, 20, 20, 20, 20, 20, 20, 20, 20, 20, 20, 20, 20, 20, 20, 20, 20, 20, 20, 20, 20};

const std::array<std::array<int, 14>, 14> kFacetAdjacency = {{
    {86, 168, 110, 216, 35, 56, 13, 196, 14, 6, 54, 36, 64, 18},
    {84, 116, 62, 114, 3, 5, 1, 18, 0, 0, 15, 12, 24, 6},
    {55, 62, 9, 20, 1, 1, 1, 4, 1, 1, 6, 0, 4, 4},
    {54, 57, 10, 25, 2, 2, 0, 6, 1, 0, 3, 3, 6, 0},
    {105, 18, 6, 24, 0, 3, 0, 12, 0, 0, 0, 0, 0, 0},
    {56, 10, 2, 8, 1, 2, 0, 8, 0, 0, 0, 0, 8, 0},
    {65, 10, 10, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 10},
    {49, 9, 2, 6, 1, 2, 0, 5, 0, 0, 3, 2, 2, 0},
    {14, 0, 2, 4, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0},
    {15, 0, 5, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0},
    {9, 5, 2, 2, 0, 0, 0, 2, 0, 0, 0, 0, 0, 0},
    {9, 6, 0, 3, 0, 0, 0, 2, 0, 0, 0, 0, 0, 0},
    {8, 6, 1, 3, 0, 1, 0, 1, 0, 0, 0, 0, 0, 0},
    {9, 6, 4, 0, 0, 0, 1, 0, 0, 0, 0, 0, 0, 0},
}};

const std::array<int, 14> kFacetAdjacencyTotals = {1072, 460, 169, 169, 168, 95, 95, 81, 20, 20, 20, 20, 20, 20};

const std::array<int, 14> kFacetOrbitSizes = {105, 210, 210, 420, 35, 105, 21, 420, 105, 42, 630, 420, 840, 210};

}  // namespace hypercone::tables
