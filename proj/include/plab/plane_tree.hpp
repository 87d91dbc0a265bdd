#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "plab/plabic_graph.hpp"

namespace plab {

struct WrongBoundaryCount : std::runtime_error {
    explicit WrongBoundaryCount(const std::string& what) : std::runtime_error(what) {}
};

bool is_forest(const PlabicGraph& g);
int num_components(const PlabicGraph& g);

// k = (#components) + sum over internal black vertices of (deg - 2); equals
// 1 + sum for a connected tree.
int k_statistic(const PlabicGraph& t);

struct BalanceReport {
    bool balanced = true;
    int witness_edge = -1;
    int witness_value = 0;  // the side count that left [1, m]
};

// For every edge and both sides: 1 <= |boundary in side| - m * sum over
// internal blacks in the side of (deg - 2) <= m, degrees taken in the whole
// tree. Requires n == k*m + 1 for k the tree's k-statistic.
BalanceReport is_m_balanced(const PlabicGraph& t, int m);

// Same per-edge counts without the boundary-count precondition.
BalanceReport balance_scan(const PlabicGraph& t, int m);

// Exhaustively removes bivalent internal vertices and contracts same-colored
// adjacent internal pairs. The result has internal vertices of degree >= 3
// with adjacent internal vertices of opposite colors.
PlabicGraph canonicalize_tree(const PlabicGraph& t);

// Rooted rotation-ordered encoding of a canonical plane tree, for equality.
std::string encode_plane_tree(const PlabicGraph& t);

// Move-equivalent bipartite tree (every edge joins a white vertex to a black
// or boundary vertex) with all internal black vertices trivalent.
PlabicGraph to_bipartite_trivalent_black(const PlabicGraph& t);

// Bipartite form without the trivalent requirement: inserts a bivalent white
// on every edge joining two black-ish vertices.
PlabicGraph to_bipartite(const PlabicGraph& t);

}  // namespace plab
