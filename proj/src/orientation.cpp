#include "plab/orientation.hpp"

#include <algorithm>
#include <queue>

namespace plab {

std::vector<int> source_set(const PlabicGraph& g, const Orientation& o) {
    std::vector<int> src;
    for (int v : g.alive_vertices()) {
        const auto& vx = g.vert(v);
        if (vx.boundary_pos == 0 || vx.rot.empty()) continue;
        int e = vx.rot[0];
        if (o.tail(g, e) == v) src.push_back(vx.boundary_pos);
    }
    std::sort(src.begin(), src.end());
    return src;
}

std::vector<int> topological_order(const PlabicGraph& g, const Orientation& o) {
    std::vector<int> indeg(g.verts().size(), 0);
    for (int e : g.alive_edges()) indeg[o.head(g, e)]++;
    std::queue<int> q;
    std::vector<int> order;
    for (int v : g.alive_vertices())
        if (indeg[v] == 0) q.push(v);
    while (!q.empty()) {
        int v = q.front();
        q.pop();
        order.push_back(v);
        for (int e : g.vert(v).rot) {
            if (o.tail(g, e) != v) continue;
            int h = o.head(g, e);
            if (--indeg[h] == 0) q.push(h);
        }
    }
    return order;
}

bool is_acyclic(const PlabicGraph& g, const Orientation& o) {
    return static_cast<int>(topological_order(g, o).size()) == g.num_alive_vertices();
}

namespace {

struct SearchState {
    const PlabicGraph& g;
    bool reverse;
    long cap;
    long emitted = 0;
    const std::function<bool(const Orientation&)>& fn;
    bool stopped = false;

    std::vector<int> dir;
    // For each internal vertex, the count of already-assigned edges in the
    // constrained direction, and the number of unassigned incident edges.
    std::vector<int> special_count;
    std::vector<int> unassigned;

    SearchState(const PlabicGraph& g_, bool rev, long cap_, const std::function<bool(const Orientation&)>& fn_)
        : g(g_), reverse(rev), cap(cap_), fn(fn_) {
        dir.assign(g.edges().size(), -1);
        special_count.assign(g.verts().size(), 0);
        unassigned.assign(g.verts().size(), 0);
        for (int v : g.alive_vertices()) unassigned[v] = g.degree(v);
    }

    // The constrained direction at a vertex: for a perfect orientation, black
    // internal vertices need exactly one outgoing edge, whites one incoming;
    // the reverse flavor swaps colors.
    bool constrained(int v) const { return g.is_internal(v); }
    bool special_is_outgoing(int v) const {
        char c = g.vert(v).color;
        return reverse ? (c == 'w') : (c == 'b');
    }

    bool feasible(int v) const {
        if (!constrained(v)) return true;
        return special_count[v] <= 1 && special_count[v] + unassigned[v] >= 1;
    }

    bool assign(int e, int d) {
        const auto& ed = g.edge(e);
        dir[e] = d;
        for (int v : {ed.u, ed.v}) {
            unassigned[v]--;
            int head = (d == 0) ? ed.v : ed.u;
            bool outgoing_at_v = (v != head);
            if (constrained(v) && outgoing_at_v == special_is_outgoing(v)) special_count[v]++;
        }
        bool ok = feasible(ed.u) && feasible(ed.v) && final_ok(ed.u) && final_ok(ed.v);
        return ok;
    }

    bool final_ok(int v) const {
        if (!constrained(v)) return true;
        if (unassigned[v] > 0) return true;
        return special_count[v] == 1;
    }

    void unassign(int e) {
        const auto& ed = g.edge(e);
        int d = dir[e];
        for (int v : {ed.u, ed.v}) {
            unassigned[v]++;
            int head = (d == 0) ? ed.v : ed.u;
            bool outgoing_at_v = (v != head);
            if (constrained(v) && outgoing_at_v == special_is_outgoing(v)) special_count[v]--;
        }
        dir[e] = -1;
    }

    void search(const std::vector<int>& order, size_t i) {
        if (stopped) return;
        if (i == order.size()) {
            if (++emitted > cap) throw CapExceeded("orientation enumeration cap exceeded");
            Orientation o;
            o.reverse_flavor = reverse;
            o.dir = dir;
            if (!fn(o)) stopped = true;
            return;
        }
        int e = order[i];
        for (int d : {0, 1}) {
            if (assign(e, d)) search(order, i + 1);
            unassign(e);
            if (stopped) return;
        }
    }
};

}  // namespace

void for_each_orientation(const PlabicGraph& g, bool reverse, long cap,
                          const std::function<bool(const Orientation&)>& fn) {
    SearchState st(g, reverse, cap, fn);
    st.search(g.alive_edges(), 0);
}

std::vector<Orientation> enumerate_perfect_orientations(const PlabicGraph& g, long cap) {
    std::vector<Orientation> out;
    for_each_orientation(g, false, cap, [&](const Orientation& o) {
        out.push_back(o);
        return true;
    });
    return out;
}

std::set<std::vector<int>> positroid_bases(const PlabicGraph& g, long cap) {
    std::set<std::vector<int>> bases;
    for_each_orientation(g, false, cap, [&](const Orientation& o) {
        bases.insert(source_set(g, o));
        return true;
    });
    return bases;
}

TypeDim type_and_dim(const PlabicGraph& g) {
    TypeDim td;
    td.n = g.n();
    td.dim = g.num_faces() - 1;
    bool found = false;
    for_each_orientation(g, false, 1000000, [&](const Orientation& o) {
        td.k = static_cast<int>(source_set(g, o).size());
        found = true;
        return false;
    });
    if (!found) throw NotOrientable();
    return td;
}

Orientation find_acyclic_reverse_po(const PlabicGraph& g, std::optional<int> preferred_start, long cap) {
    std::optional<Orientation> best;
    std::vector<int> best_key;
    int n = g.n();
    auto cyclic_key = [&](const std::vector<int>& src) {
        std::vector<int> key;
        for (int s : src) key.push_back(((s - *preferred_start) % n + n) % n);
        std::sort(key.begin(), key.end());
        return key;
    };
    try {
        for_each_orientation(g, true, cap, [&](const Orientation& o) {
            if (!is_acyclic(g, o)) return true;
            if (!preferred_start) {
                best = o;
                return false;
            }
            std::vector<int> key = cyclic_key(source_set(g, o));
            if (!best || key < best_key) {
                best = o;
                best_key = key;
            }
            return true;
        });
    } catch (const CapExceeded&) {
        // keep the best orientation seen so far
    }
    if (!best) throw NotOrientable();
    return *best;
}

std::vector<Orientation> enumerate_acyclic_reverse_pos(const PlabicGraph& g, long cap) {
    std::vector<Orientation> out;
    try {
        for_each_orientation(g, true, cap, [&](const Orientation& o) {
            if (is_acyclic(g, o)) out.push_back(o);
            return true;
        });
    } catch (const CapExceeded&) {
        // return the prefix collected under the cap
    }
    return out;
}

Orientation reversed(const Orientation& o) {
    Orientation r = o;
    r.reverse_flavor = !o.reverse_flavor;
    for (auto& d : r.dir)
        if (d >= 0) d ^= 1;
    return r;
}

}  // namespace plab
