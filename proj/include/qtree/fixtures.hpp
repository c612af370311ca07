#pragma once

#include "qtree/spectral.hpp"
#include "qtree/tree.hpp"

#include <string>
#include <vector>

namespace qtree::fixtures {

/// Base tree with the two distinguished vertices of a worked example.
struct MarkedTree {
    Tree tree;
    Vertex v1;
    Vertex v2;
};

/// Spider with legs (1,1,1,2,2); v1 is the degree-5 center, v2 the degree-2
/// vertex on the first long leg.
MarkedTree spider_tree();

/// 12-vertex tree with interior degrees {4,4,2,2,2,2} carrying a
/// non-symmetric pair of degree-2 vertices with equal characteristic pairs.
MarkedTree twelve_vertex_tree();

/// All 12-vertex trees with an interior root whose Neumann function is
/// s^5 (256z^6 - 192z^4 + 36z^2 - 1), each with the degree-2 vertex pairs
/// (different orbits) whose Dirichlet functions agree.
std::vector<MarkedTree> search_twelve_vertex_trees();

struct FixtureCheck {
    std::string name;
    bool passed;
    std::string detail;
};

/// The worked examples as exact checks.
std::vector<FixtureCheck> run_fixtures();

}  // namespace qtree::fixtures
