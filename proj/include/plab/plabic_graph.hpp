#pragma once

#include <string>
#include <vector>

namespace plab {

// Embedded bicolored graph in a disk: vertices carry a color and an optional
// boundary position; per-vertex rotations list incident edges clockwise.
// Ids are stable; deleted elements keep their slot with alive == false.
class PlabicGraph {
public:
    struct Vertex {
        char color = 'b';      // 'b' or 'w'
        int boundary_pos = 0;  // 1..n for boundary vertices, 0 for internal
        std::vector<int> rot;  // incident edge ids, clockwise
        bool alive = false;
    };
    struct Edge {
        int u = -1, v = -1;
        bool alive = false;
    };

    PlabicGraph() = default;
    explicit PlabicGraph(int n_boundary) : nb_(n_boundary) {}

    int n() const { return nb_; }
    const std::vector<Vertex>& verts() const { return verts_; }
    const std::vector<Edge>& edges() const { return edges_; }
    const Vertex& vert(int v) const { return verts_[v]; }
    const Edge& edge(int e) const { return edges_[e]; }
    bool declared_reduced = false;

    int add_internal(char color);
    int add_boundary(int pos, char color = 'b');
    // Appends the edge at the end of both rotations.
    int add_edge(int u, int v);
    // Inserts the edge at a given rotation position of each endpoint.
    int add_edge_at(int u, int upos, int v, int vpos);

    void remove_edge(int e);
    void remove_vertex(int v);  // must be isolated
    void set_color(int v, char c) { verts_[v].color = c; }
    void set_rotation(int v, std::vector<int> rot) { verts_[v].rot = std::move(rot); }
    // Re-attach endpoint `from` of edge e to vertex `to` (rotations untouched).
    void repoint_edge(int e, int from, int to);
    int add_dead_vertex_slot();
    int add_dead_edge_slot();

    bool is_boundary(int v) const { return verts_[v].boundary_pos > 0; }
    bool is_internal(int v) const { return verts_[v].alive && verts_[v].boundary_pos == 0; }
    int degree(int v) const { return static_cast<int>(verts_[v].rot.size()); }
    int other_end(int e, int v) const { return edges_[e].u == v ? edges_[e].v : edges_[e].u; }
    int boundary_vertex(int pos) const;  // -1 if absent
    std::vector<int> neighbors(int v) const;
    std::vector<int> alive_vertices() const;
    std::vector<int> alive_edges() const;
    int rot_index(int v, int e) const;

    // Replace edge `old_e` with `new_e` in v's rotation, in place.
    void replace_in_rotation(int v, int old_e, int new_e);

    int num_alive_vertices() const;
    int num_alive_edges() const;

    // Faces of the disk embedding, counted through the Euler relation with the
    // boundary circle closed off. Requires every component to touch the boundary.
    int num_faces() const;

    // Local consistency: rotations match incidences, boundary degrees are one
    // (degree-zero boundary vertices are tolerated when `allow_bare`),
    // every internal vertex connects to some boundary vertex.
    void validate(bool allow_bare = false) const;

    bool connected_to_boundary(int v) const;

    // Identifies vertex `dst` with `src`: all edges at src are re-attached to
    // dst (rotation order preserved, appended), src is removed.
    void absorb_vertex(int dst, int src);

private:
    int nb_ = 0;
    std::vector<Vertex> verts_;
    std::vector<Edge> edges_;
};

// `plabic v1` text format.
std::string write_plabic(const PlabicGraph& g);
PlabicGraph read_plabic(const std::string& text);

// Canonical relabeling by breadth-first discovery from boundary vertices in
// position order, neighbors in rotation order; equal strings mean isomorphic
// embedded graphs with matching boundary labels.
std::string canonical_encoding(const PlabicGraph& g);

}  // namespace plab
