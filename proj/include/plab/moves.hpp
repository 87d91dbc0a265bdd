#pragma once

#include <stdexcept>
#include <vector>

#include "plab/plabic_graph.hpp"

namespace plab {

struct PatternMismatch : std::runtime_error {
    explicit PatternMismatch(const std::string& what) : std::runtime_error(what) {}
};

// Subdivides edge e with a new degree-2 vertex of the given color; returns the
// new vertex id. The two replacement edges take e's rotation slots.
int insert_bivalent(PlabicGraph& g, int e, char color);

// Removes a degree-2 internal vertex, merging its two edges into one; returns
// the merged edge id.
int remove_bivalent(PlabicGraph& g, int v);

// Merges the two same-colored internal endpoints of e; returns the surviving
// vertex id. Rotations are spliced at the removed edge.
int contract_edge(PlabicGraph& g, int e);

// Splits internal vertex v: `count` rotation-consecutive edges starting at
// rotation index `rot_start` move to a new same-colored vertex joined to v by
// a new edge. Returns the new vertex id.
int expand_vertex(PlabicGraph& g, int v, int rot_start, int count);

// A quadrilateral face bounded by four alternating trivalent internal
// vertices, listed cyclically.
struct SquareFace {
    std::vector<int> verts;  // 4 vertices
    std::vector<int> edges;  // 4 edges, edges[i] joins verts[i], verts[(i+1)%4]
};

std::vector<SquareFace> find_square_faces(const PlabicGraph& g);

// (M1) square move: switch the colors of the four vertices.
void apply_square_move(PlabicGraph& g, const SquareFace& f);

// Square move keeping the graph bipartite: after the color flip, each of the
// four external edges gets a bivalent vertex of the color restoring proper
// bicoloring. Returns the inserted vertex ids, indexed like f.verts.
std::vector<int> apply_square_move_bipartite(PlabicGraph& g, const SquareFace& f);

// Dissolves all bivalent internal vertices (skipping any whose two edges
// close a bubble), repeating until none remain.
void dissolve_bivalents(PlabicGraph& g);

}  // namespace plab
