#include "plab/plane_tree.hpp"

#include <functional>
#include <queue>
#include <sstream>

#include "plab/moves.hpp"

namespace plab {

int num_components(const PlabicGraph& g) {
    std::vector<char> seen(g.verts().size(), 0);
    int comps = 0;
    for (int v : g.alive_vertices()) {
        if (seen[v]) continue;
        ++comps;
        std::queue<int> q;
        q.push(v);
        seen[v] = 1;
        while (!q.empty()) {
            int x = q.front();
            q.pop();
            for (int y : g.neighbors(x))
                if (!seen[y]) { seen[y] = 1; q.push(y); }
        }
    }
    return comps;
}

bool is_forest(const PlabicGraph& g) {
    return g.num_alive_edges() == g.num_alive_vertices() - num_components(g);
}

int k_statistic(const PlabicGraph& t) {
    int k = num_components(t);
    for (int v : t.alive_vertices())
        if (t.is_internal(v) && t.vert(v).color == 'b') k += t.degree(v) - 2;
    return k;
}

namespace {

// Side statistics of the component of `start` after deleting edge `cut`.
struct SideStats {
    int boundary = 0;
    int black_deg_excess = 0;  // sum over internal blacks of (deg - 2)
};

SideStats side_stats(const PlabicGraph& g, int cut, int start) {
    SideStats s;
    std::vector<char> seen(g.verts().size(), 0);
    std::queue<int> q;
    q.push(start);
    seen[start] = 1;
    while (!q.empty()) {
        int x = q.front();
        q.pop();
        if (g.vert(x).boundary_pos > 0) s.boundary++;
        else if (g.vert(x).color == 'b') s.black_deg_excess += g.degree(x) - 2;
        for (int e : g.vert(x).rot) {
            if (e == cut) continue;
            int y = g.other_end(e, x);
            if (!seen[y]) { seen[y] = 1; q.push(y); }
        }
    }
    return s;
}

}  // namespace

BalanceReport balance_scan(const PlabicGraph& t, int m) {
    BalanceReport rep;
    for (int e : t.alive_edges()) {
        for (int side : {t.edge(e).u, t.edge(e).v}) {
            SideStats s = side_stats(t, e, side);
            int q = s.boundary - m * s.black_deg_excess;
            if (q < 1 || q > m) {
                rep.balanced = false;
                rep.witness_edge = e;
                rep.witness_value = q;
                return rep;
            }
        }
    }
    return rep;
}

BalanceReport is_m_balanced(const PlabicGraph& t, int m) {
    if (!is_forest(t) || num_components(t) != 1) throw std::invalid_argument("is_m_balanced: expects a tree");
    int k = k_statistic(t);
    if (t.n() != k * m + 1)
        throw WrongBoundaryCount("is_m_balanced: n != k*m + 1 (n=" + std::to_string(t.n()) + ", k=" + std::to_string(k) + ")");
    return balance_scan(t, m);
}

PlabicGraph canonicalize_tree(const PlabicGraph& t) {
    PlabicGraph g = t;
    bool changed = true;
    while (changed) {
        changed = false;
        dissolve_bivalents(g);
        for (int e : g.alive_edges()) {
            int u = g.edge(e).u, v = g.edge(e).v;
            if (g.is_internal(u) && g.is_internal(v) && g.vert(u).color == g.vert(v).color) {
                contract_edge(g, e);
                changed = true;
                break;
            }
        }
    }
    return g;
}

std::string encode_plane_tree(const PlabicGraph& t) {
    int b1 = t.boundary_vertex(1);
    if (b1 < 0) throw std::invalid_argument("encode_plane_tree: boundary vertex 1 missing");
    std::ostringstream os;
    os << "n=" << t.n() << ";";
    std::function<void(int, int)> rec = [&](int v, int in_edge) {
        if (t.vert(v).boundary_pos > 0) {
            os << "b";
            return;
        }
        os << "(" << t.vert(v).color;
        int d = t.degree(v);
        int start = t.rot_index(v, in_edge);
        for (int i = 1; i < d; ++i) {
            int e = t.vert(v).rot[(start + i) % d];
            rec(t.other_end(e, v), e);
        }
        os << ")";
    };
    if (t.degree(b1) == 0) {
        os << "bare";
        return os.str();
    }
    int e0 = t.vert(b1).rot[0];
    rec(t.other_end(e0, b1), e0);
    return os.str();
}

PlabicGraph to_bipartite(const PlabicGraph& t) {
    PlabicGraph g = t;
    for (int e : g.alive_edges()) {
        int u = g.edge(e).u, v = g.edge(e).v;
        bool ub = g.vert(u).color == 'b';
        bool vb = g.vert(v).color == 'b';
        if (ub && vb) insert_bivalent(g, e, 'w');
        else if (!ub && !vb) insert_bivalent(g, e, 'b');
    }
    return g;
}

PlabicGraph to_bipartite_trivalent_black(const PlabicGraph& t) {
    PlabicGraph g = to_bipartite(t);
    bool changed = true;
    while (changed) {
        changed = false;
        for (int v : g.alive_vertices()) {
            if (!g.is_internal(v) || g.vert(v).color != 'b' || g.degree(v) <= 3) continue;
            int w = expand_vertex(g, v, 0, 2);
            // the connecting black-black edge is the last in both rotations
            insert_bivalent(g, g.vert(w).rot.back(), 'w');
            changed = true;
            break;
        }
    }
    return g;
}

}  // namespace plab
