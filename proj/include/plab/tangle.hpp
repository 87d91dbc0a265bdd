#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "plab/orientation.hpp"
#include "plab/plabic_graph.hpp"

namespace plab {

struct ArityMismatch : std::runtime_error {
    explicit ArityMismatch(const std::string& what) : std::runtime_error(what) {}
};

// Inner disk: labels clockwise from the disk's star, each attached to a core
// vertex (an internal black vertex, or a bare boundary vertex for columns
// that pass through unchanged).
struct Blob {
    std::vector<std::string> labels;
    std::vector<int> attach;

    int arity() const { return static_cast<int>(labels.size()); }
    int attach_of(const std::string& label) const;
};

struct Tangle {
    PlabicGraph core;
    std::vector<Blob> blobs;

    void validate() const;
};

// Per-blob brushing data: an acyclic reverse perfect orientation and
// vertex-disjoint paths from boundary vertices to the attached vertices.
// Labels attached at boundary vertices carry trivial paths.
struct BrushPath {
    int source_pos = -1;      // boundary position
    std::vector<int> edges;   // directed along the orientation; empty = trivial
};
struct BlobBrushing {
    Orientation orient;
    std::map<std::string, BrushPath> paths;
};
struct Brushing {
    std::vector<BlobBrushing> per_blob;
};

// Identity tangle: bare boundary vertices, one blob attached straight across.
Tangle identity_tangle(int d);

// Vertex/edge id translation from the inner tangle into the composition.
struct ComposeMaps {
    std::map<int, int> vmap;  // inner internal vertex -> composed vertex
    std::map<int, int> emap;  // inner edge -> composed edge
};

// Insert tangle `inner` into blob i of `outer` (0-based), gluing inner's
// outer boundary to the attachment vertices; inner's blobs replace blob i.
Tangle compose(const Tangle& outer, int i, const Tangle& inner, ComposeMaps* maps = nullptr);

// Renumber inner disks: new blob j is old blob perm[j].
Tangle permute_blobs(const Tangle& t, const std::vector<int>& perm);

// Canonical structural encoding (relabels vertices breadth-first from the
// boundary); equal strings mean equal tangles.
std::string tangle_encoding(const Tangle& t);

struct BrushingSearch {
    bool found = false;
    Brushing brushing;
    // certificate for the failing blob: best achievable flow and a vertex cut
    int blob = -1;
    int max_flow = 0;
    int targets = 0;
    std::vector<int> cut_vertices;
};

// Searches acyclic reverse perfect orientations (up to the cap, per blob) and
// solves a unit-vertex-capacity disjoint-path problem per candidate.
BrushingSearch find_brushing(const Tangle& t, long orientation_cap = 10000);

// Brushing with prescribed path sources per label (tree cores: the path is
// the unique one joining the source to the attached vertex).
Brushing make_tree_brushing(const Tangle& t, const std::map<std::string, int>& path_source);

}  // namespace plab
