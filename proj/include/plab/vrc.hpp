#pragma once

#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "plab/matrix.hpp"
#include "plab/moves.hpp"
#include "plab/multivector.hpp"
#include "plab/orientation.hpp"
#include "plab/plabic_graph.hpp"
#include "plab/rng.hpp"

namespace plab {

struct NotGeneric : std::runtime_error {
    explicit NotGeneric(const std::string& what) : std::runtime_error(what) {}
};
struct KernelDimensionError : std::runtime_error {
    explicit KernelDimensionError(const std::string& what) : std::runtime_error(what) {}
};
struct DegenerateVrc : std::runtime_error {
    explicit DegenerateVrc(const std::string& what) : std::runtime_error(what) {}
};
struct RankDeficientSources : std::runtime_error {
    RankDeficientSources() : std::runtime_error("no acyclic reverse orientation with full-rank source columns") {}
};

// Vectors on black vertices plus nonzero edge coefficients such that the
// neighbors of every white vertex satisfy an exact linear relation.
struct VRC {
    PlabicGraph graph;
    int m = 0;
    std::map<int, std::vector<Rat>> vectors;  // black vertices, boundary included
    std::map<int, Rat> coeffs;                // per alive edge

    MatQ boundary() const;
    bool relations_hold() const;
    bool nondegenerate() const;  // all internal vectors nonzero
    void gauge_at(int vertex, const Rat& t);
};

// Leaf-to-root multivector labels: leaves carry their column, whites wedge
// their children, blacks shuffle theirs. `expected` holds the graph-statistic
// dimension of each non-root vertex; `ok` reports whether every non-root
// label is nonzero of that grade with the grade inside [1, m].
struct SubspaceLabels {
    int root = -1;
    std::map<int, Multivector<Rat>> f;
    std::map<int, int> expected;
    bool ok = true;
    int witness_vertex = -1;
};

SubspaceLabels subspace_labels(const PlabicGraph& tree, int root, const MatQ& z);

// The extension that pads every boundary edge with a bivalent white + black
// pair; genericity for the tree quantifies over all its internal roots.
PlabicGraph extend_tree(const PlabicGraph& tree);
bool generic_for_tree(const PlabicGraph& tree, const MatQ& z, std::string* why = nullptr);

// The unique (up to gauge) configuration on an amplitree with boundary z:
// vectors from black-rooted labels, coefficients from white-vertex kernels.
VRC build_tree_vrc(const PlabicGraph& tree, const MatQ& z);

// Draws z until build_tree_vrc succeeds; throws NotGeneric past the cap.
VRC build_tree_vrc_random(const PlabicGraph& tree, int m, Rng& rng, int cap = 32, MatQ* z_out = nullptr);

// Path-sum reconstruction of the vectors from boundary data and coefficients:
// per edge, black-to-white steps multiply by r_e and white-to-black steps by
// -1/r_e. `boundary_vecs` has one column per boundary position.
std::map<int, std::vector<Rat>> vectors_from_paths(const PlabicGraph& g, const Orientation& o,
                                                   const Mat<Rat>& boundary_vecs, const std::map<int, Rat>& coeffs);

// Boundary of the companion (n-k)-configuration with the same coefficients:
// source columns are extended to a basis, the rest propagate along paths. The
// top m rows reproduce z exactly.
MatQ lift_to_big_vrc(const PlabicGraph& g, const VRC& v);

// Square-move transport: colors flip, the interface is re-padded with
// bivalent vertices, the two interior vectors and six interior coefficients
// are re-solved from the fixed exterior.
VRC transport_square_move(const VRC& v, const SquareFace& face);

}  // namespace plab
