#include "plab/moves.hpp"

#include <algorithm>
#include <set>

namespace plab {

int insert_bivalent(PlabicGraph& g, int e, char color) {
    if (!g.edge(e).alive) throw PatternMismatch("insert_bivalent: dead edge");
    int u = g.edge(e).u, v = g.edge(e).v;
    int w = g.add_internal(color);
    int upos = g.rot_index(u, e);
    int vpos = g.rot_index(v, e);
    g.remove_edge(e);
    int e1 = g.add_edge(u, w);
    int e2 = g.add_edge(w, v);
    auto ru = g.vert(u).rot;
    ru.pop_back();
    ru.insert(ru.begin() + upos, e1);
    g.set_rotation(u, ru);
    auto rv = g.vert(v).rot;
    rv.pop_back();
    rv.insert(rv.begin() + vpos, e2);
    g.set_rotation(v, rv);
    g.set_rotation(w, {e1, e2});
    return w;
}

int remove_bivalent(PlabicGraph& g, int v) {
    if (!g.is_internal(v) || g.degree(v) != 2) throw PatternMismatch("remove_bivalent: not an internal bivalent vertex");
    int e1 = g.vert(v).rot[0], e2 = g.vert(v).rot[1];
    int a = g.other_end(e1, v), b = g.other_end(e2, v);
    if (a == b) throw PatternMismatch("remove_bivalent: would create a loop");
    int apos = g.rot_index(a, e1);
    int bpos = g.rot_index(b, e2);
    g.remove_edge(e1);
    g.remove_edge(e2);
    g.remove_vertex(v);
    int e = g.add_edge(a, b);
    auto ra = g.vert(a).rot;
    ra.pop_back();
    ra.insert(ra.begin() + apos, e);
    g.set_rotation(a, ra);
    auto rb = g.vert(b).rot;
    rb.pop_back();
    rb.insert(rb.begin() + bpos, e);
    g.set_rotation(b, rb);
    return e;
}

int contract_edge(PlabicGraph& g, int e) {
    int u = g.edge(e).u, v = g.edge(e).v;
    if (u == v) throw PatternMismatch("contract_edge: loop");
    if (!g.is_internal(u) || !g.is_internal(v)) throw PatternMismatch("contract_edge: endpoints must be internal");
    if (g.vert(u).color != g.vert(v).color) throw PatternMismatch("contract_edge: endpoints must share a color");
    // Splice v's rotation into u's at the slot of e, preserving the embedding:
    // u keeps its edges in order, with v's other edges (rotated to start just
    // after e) inserted where e was.
    int upos = g.rot_index(u, e);
    int vpos = g.rot_index(v, e);
    std::vector<int> vrot = g.vert(v).rot;
    std::vector<int> spliced;
    for (size_t i = 1; i < vrot.size(); ++i) spliced.push_back(vrot[(vpos + i) % vrot.size()]);
    for (int x : spliced) g.repoint_edge(x, v, u);
    g.remove_edge(e);
    auto ru = g.vert(u).rot;
    ru.insert(ru.begin() + upos, spliced.begin(), spliced.end());
    g.set_rotation(u, ru);
    g.set_rotation(v, {});
    g.remove_vertex(v);
    return u;
}

int expand_vertex(PlabicGraph& g, int v, int rot_start, int count) {
    if (!g.is_internal(v)) throw PatternMismatch("expand_vertex: internal vertices only");
    int d = g.degree(v);
    if (count < 1 || count >= d) throw PatternMismatch("expand_vertex: bad split size");
    std::vector<int> rot = g.vert(v).rot;
    std::vector<int> moved, kept;
    for (int i = 0; i < d; ++i) {
        int idx = (rot_start + i) % d;
        if (i < count) moved.push_back(rot[idx]);
        else kept.push_back(rot[idx]);
    }
    int w = g.add_internal(g.vert(v).color);
    for (int e : moved) g.repoint_edge(e, v, w);
    int link = g.add_edge(v, w);
    std::vector<int> wrot = moved;
    wrot.push_back(link);
    std::vector<int> vrot = kept;
    vrot.push_back(link);
    g.set_rotation(w, wrot);
    g.set_rotation(v, vrot);
    return w;
}

std::vector<SquareFace> find_square_faces(const PlabicGraph& g) {
    // Quadrilaterals of trivalent internal vertices with alternating colors,
    // found combinatorially (inputs are constructed with such cycles bounding
    // faces).
    std::vector<SquareFace> out;
    std::set<std::vector<int>> seen;
    auto edge_between = [&](int u, int v) -> int {
        for (int e : g.vert(u).rot)
            if (g.other_end(e, u) == v) return e;
        return -1;
    };
    for (int a : g.alive_vertices()) {
        if (!g.is_internal(a) || g.degree(a) != 3) continue;
        for (int e1 : g.vert(a).rot) {
            int b = g.other_end(e1, a);
            if (!g.is_internal(b) || g.degree(b) != 3 || g.vert(b).color == g.vert(a).color) continue;
            for (int e2 : g.vert(b).rot) {
                int c = g.other_end(e2, b);
                if (c == a || !g.is_internal(c) || g.degree(c) != 3 || g.vert(c).color == g.vert(b).color) continue;
                for (int e3 : g.vert(c).rot) {
                    int d = g.other_end(e3, c);
                    if (d == b || d == a || !g.is_internal(d) || g.degree(d) != 3) continue;
                    if (g.vert(d).color == g.vert(c).color) continue;
                    int e4 = edge_between(d, a);
                    if (e4 < 0 || g.vert(d).color == g.vert(a).color) continue;
                    std::vector<int> key{a, b, c, d};
                    std::sort(key.begin(), key.end());
                    if (seen.count(key)) continue;
                    seen.insert(key);
                    SquareFace f;
                    f.verts = {a, b, c, d};
                    f.edges = {e1, e2, e3, e4};
                    out.push_back(f);
                }
            }
        }
    }
    return out;
}

void apply_square_move(PlabicGraph& g, const SquareFace& f) {
    for (int v : f.verts) g.set_color(v, g.vert(v).color == 'b' ? 'w' : 'b');
}

std::vector<int> apply_square_move_bipartite(PlabicGraph& g, const SquareFace& f) {
    apply_square_move(g, f);
    std::set<int> square_edges(f.edges.begin(), f.edges.end());
    std::vector<int> inserted;
    for (int v : f.verts) {
        int ext = -1;
        for (int e : g.vert(v).rot)
            if (!square_edges.count(e)) ext = e;
        if (ext < 0) throw PatternMismatch("square move: missing external edge");
        // the vertex now has the same color as before the flip on the outside
        char fix_color = g.vert(v).color == 'b' ? 'w' : 'b';
        inserted.push_back(insert_bivalent(g, ext, fix_color));
    }
    return inserted;
}

void dissolve_bivalents(PlabicGraph& g) {
    bool changed = true;
    while (changed) {
        changed = false;
        for (int v : g.alive_vertices()) {
            if (!g.is_internal(v) || g.degree(v) != 2) continue;
            int a = g.other_end(g.vert(v).rot[0], v);
            int b = g.other_end(g.vert(v).rot[1], v);
            if (a == b) continue;
            remove_bivalent(g, v);
            changed = true;
        }
    }
}

}  // namespace plab
