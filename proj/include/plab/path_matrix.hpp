#pragma once

#include <map>
#include <stdexcept>
#include <vector>

#include "plab/matrix.hpp"
#include "plab/orientation.hpp"
#include "plab/plabic_graph.hpp"
#include "plab/rational.hpp"

namespace plab {

struct CyclicOrientation : std::runtime_error {
    CyclicOrientation() : std::runtime_error("orientation contains a directed cycle") {}
};

using EdgeWeights = std::map<int, Rat>;

// Boundary measurement matrix of an acyclic perfect orientation: identity in
// the source columns, signed path sums elsewhere. Signs are the standard
// column resigning by source positions, making every Plucker coordinate a
// subtraction-free expression in the weights.
MatQ path_matrix(const PlabicGraph& g, const Orientation& o, const EdgeWeights& w);

// Flow generating function: sum over vertex-disjoint path systems from the
// source set to `targets` of the per-path weight products. Brute force; this
// is the independent route against exact minors of the path matrix.
Rat flow_polynomial(const PlabicGraph& g, const Orientation& o, const EdgeWeights& w, const std::vector<int>& targets);

// Per-edge weight factor in the direction tail->head: w for white-to-black,
// 1/w for black-to-white.
Rat step_weight(const PlabicGraph& g, const Orientation& o, const EdgeWeights& w, int e);

struct GaugeFix {
    std::vector<int> unit_edges;  // spanning forest, weight set to 1
    std::vector<int> free_edges;
};

struct Infeasible : std::runtime_error {
    explicit Infeasible(const std::string& what) : std::runtime_error(what) {}
};

// Spanning forest containing the required edges, each component holding
// exactly one boundary vertex.
GaugeFix gauge_fix(const PlabicGraph& g, const std::vector<int>& required_edges = {});

}  // namespace plab
