#include "plab/tangle.hpp"

#include <algorithm>
#include <functional>
#include <queue>
#include <set>
#include <sstream>

namespace plab {

int Blob::attach_of(const std::string& label) const {
    for (size_t i = 0; i < labels.size(); ++i)
        if (labels[i] == label) return attach[i];
    throw std::invalid_argument("Blob: unknown label " + label);
}

void Tangle::validate() const {
    core.validate(true);
    for (const auto& b : blobs) {
        if (b.labels.size() != b.attach.size()) throw std::logic_error("Tangle: ragged blob");
        for (int a : b.attach) {
            if (!core.vert(a).alive) throw std::logic_error("Tangle: dead attachment");
            bool internal_black = core.is_internal(a) && core.vert(a).color == 'b';
            bool bare_boundary = core.vert(a).boundary_pos > 0 && core.degree(a) == 0;
            if (!internal_black && !bare_boundary)
                throw std::logic_error("Tangle: attachments must be internal black or bare boundary vertices");
        }
    }
}

Tangle identity_tangle(int d) {
    Tangle t;
    t.core = PlabicGraph(d);
    Blob b;
    for (int pos = 1; pos <= d; ++pos) {
        int v = t.core.add_boundary(pos);
        b.labels.push_back(std::to_string(pos));
        b.attach.push_back(v);
    }
    t.blobs.push_back(b);
    return t;
}

Tangle compose(const Tangle& outer, int i, const Tangle& inner, ComposeMaps* maps) {
    if (i < 0 || i >= static_cast<int>(outer.blobs.size())) throw ArityMismatch("compose: no such blob");
    const Blob& hole = outer.blobs[i];
    if (hole.arity() != inner.core.n())
        throw ArityMismatch("compose: blob arity " + std::to_string(hole.arity()) + " vs inner boundary " +
                            std::to_string(inner.core.n()));

    Tangle out;
    out.core = outer.core;
    // import the inner core with fresh ids; inner boundary vertices glue onto
    // the attachment vertices
    std::map<int, int> vmap, emap;
    for (int v : inner.core.alive_vertices()) {
        const auto& vx = inner.core.vert(v);
        if (vx.boundary_pos > 0) continue;
        vmap[v] = out.core.add_internal(vx.color);
    }
    auto resolve = [&](int x) -> int {
        if (inner.core.vert(x).boundary_pos > 0) return hole.attach[inner.core.vert(x).boundary_pos - 1];
        return vmap.at(x);
    };
    for (int e : inner.core.alive_edges())
        emap[e] = out.core.add_edge(resolve(inner.core.edge(e).u), resolve(inner.core.edge(e).v));
    for (auto& [v, nv] : vmap) {
        std::vector<int> rot;
        for (int e : inner.core.vert(v).rot) rot.push_back(emap.at(e));
        out.core.set_rotation(nv, rot);
    }
    if (maps) {
        maps->vmap = vmap;
        maps->emap = emap;
    }

    for (int j = 0; j < static_cast<int>(outer.blobs.size()); ++j) {
        if (j == i) {
            for (const auto& ib : inner.blobs) {
                Blob nb;
                nb.labels = ib.labels;
                for (int a : ib.attach) nb.attach.push_back(resolve(a));
                out.blobs.push_back(nb);
            }
        } else {
            out.blobs.push_back(outer.blobs[j]);
        }
    }
    return out;
}

Tangle permute_blobs(const Tangle& t, const std::vector<int>& perm) {
    if (perm.size() != t.blobs.size()) throw std::invalid_argument("permute_blobs: size mismatch");
    Tangle out;
    out.core = t.core;
    for (int p : perm) out.blobs.push_back(t.blobs.at(p));
    return out;
}

std::string tangle_encoding(const Tangle& t) {
    const PlabicGraph& g = t.core;
    std::map<int, int> relabel;
    std::vector<int> order;
    auto visit = [&](int v) {
        if (relabel.count(v)) return;
        relabel[v] = static_cast<int>(order.size());
        order.push_back(v);
    };
    for (int pos = 1; pos <= g.n(); ++pos) {
        int b = g.boundary_vertex(pos);
        if (b >= 0) visit(b);
    }
    for (size_t qi = 0; qi < order.size(); ++qi) {
        int v = order[qi];
        for (int e : g.vert(v).rot) visit(g.other_end(e, v));
    }
    for (const auto& b : t.blobs)
        for (int a : b.attach) visit(a);
    for (size_t qi = 0; qi < order.size(); ++qi) {
        int v = order[qi];
        for (int e : g.vert(v).rot) visit(g.other_end(e, v));
    }

    std::ostringstream os;
    os << "n=" << g.n() << ";";
    for (int v : order) {
        const auto& vx = g.vert(v);
        os << "[" << vx.color;
        if (vx.boundary_pos > 0) os << "@" << vx.boundary_pos;
        os << ":";
        for (int e : vx.rot) os << relabel[g.other_end(e, v)] << ",";
        os << "]";
    }
    // blob labels are promotion-level names; the operad structure compares
    // attachments positionally
    for (const auto& b : t.blobs) {
        os << "{";
        for (size_t j = 0; j < b.labels.size(); ++j) os << relabel.at(b.attach[j]) << ",";
        os << "}";
    }
    return os.str();
}

namespace {

// unit-vertex-capacity max flow on the DAG given by an orientation
struct DisjointPaths {
    const PlabicGraph& g;
    const Orientation& o;
    int nv;
    struct Arc {
        int to, cap, flow = 0;
        size_t rev;
    };
    std::vector<std::vector<Arc>> adj;  // node ids: v_in = 2v, v_out = 2v+1

    DisjointPaths(const PlabicGraph& g_, const Orientation& o_) : g(g_), o(o_) {
        nv = static_cast<int>(g.verts().size());
        adj.assign(2 * nv + 2, {});
    }
    void add_arc(int a, int b, int cap) {
        adj[a].push_back({b, cap, 0, adj[b].size()});
        adj[b].push_back({a, 0, 0, adj[a].size() - 1});
    }
    int source() const { return 2 * nv; }
    int sink() const { return 2 * nv + 1; }

    int max_flow() {
        int total = 0;
        while (true) {
            std::vector<int> pre_node(adj.size(), -1);
            std::vector<int> pre_arc(adj.size(), -1);
            std::queue<int> q;
            q.push(source());
            pre_node[source()] = source();
            while (!q.empty() && pre_node[sink()] < 0) {
                int x = q.front();
                q.pop();
                for (size_t ai = 0; ai < adj[x].size(); ++ai) {
                    const Arc& a = adj[x][ai];
                    if (a.flow < a.cap && pre_node[a.to] < 0) {
                        pre_node[a.to] = x;
                        pre_arc[a.to] = static_cast<int>(ai);
                        q.push(a.to);
                    }
                }
            }
            if (pre_node[sink()] < 0) break;
            int x = sink();
            while (x != source()) {
                int p = pre_node[x];
                Arc& a = adj[p][pre_arc[x]];
                a.flow += 1;
                adj[a.to][a.rev].flow -= 1;
                x = p;
            }
            ++total;
        }
        return total;
    }

    std::vector<int> min_cut_vertices() {
        std::vector<char> reach(adj.size(), 0);
        std::queue<int> q;
        q.push(source());
        reach[source()] = 1;
        while (!q.empty()) {
            int x = q.front();
            q.pop();
            for (const Arc& a : adj[x])
                if (a.flow < a.cap && !reach[a.to]) {
                    reach[a.to] = 1;
                    q.push(a.to);
                }
        }
        std::vector<int> cut;
        for (int v = 0; v < nv; ++v)
            if (reach[2 * v] && !reach[2 * v + 1]) cut.push_back(v);
        return cut;
    }
};

std::optional<std::map<std::string, BrushPath>> solve_blob_paths(const PlabicGraph& g, const Orientation& o,
                                                                 const Blob& blob, int* best_flow,
                                                                 std::vector<int>* best_cut, int* targets_out) {
    std::map<std::string, BrushPath> result;
    std::set<int> occupied;  // boundary vertices holding trivial paths
    std::vector<std::pair<std::string, int>> internal_targets;
    for (size_t j = 0; j < blob.labels.size(); ++j) {
        int a = blob.attach[j];
        if (g.vert(a).boundary_pos > 0) {
            BrushPath p;
            p.source_pos = g.vert(a).boundary_pos;
            result[blob.labels[j]] = p;
            occupied.insert(a);
        } else {
            internal_targets.push_back({blob.labels[j], a});
        }
    }
    if (targets_out) *targets_out = static_cast<int>(internal_targets.size());
    if (internal_targets.empty()) return result;

    DisjointPaths dp(g, o);
    for (int v : g.alive_vertices()) dp.add_arc(2 * v, 2 * v + 1, 1);
    for (int e : g.alive_edges()) dp.add_arc(2 * o.tail(g, e) + 1, 2 * o.head(g, e), 1);
    for (int v : g.alive_vertices()) {
        if (g.vert(v).boundary_pos == 0 || occupied.count(v)) continue;
        dp.add_arc(dp.source(), 2 * v, 1);
    }
    for (auto& [label, a] : internal_targets) dp.add_arc(2 * a + 1, dp.sink(), 1);
    int flow = dp.max_flow();
    if (flow < static_cast<int>(internal_targets.size())) {
        if (best_flow && flow > *best_flow) {
            *best_flow = flow;
            if (best_cut) *best_cut = dp.min_cut_vertices();
        }
        return std::nullopt;
    }
    // extract a path ending at each target by walking saturated arcs backwards
    for (auto& [label, a] : internal_targets) {
        BrushPath p;
        int cur = a;
        while (g.vert(cur).boundary_pos == 0) {
            int chosen = -1;
            for (int e : g.vert(cur).rot) {
                if (o.head(g, e) != cur) continue;
                int t = o.tail(g, e);
                for (const auto& arc : dp.adj[2 * t + 1]) {
                    if (arc.to == 2 * cur && arc.cap == 1 && arc.flow == 1) {
                        chosen = e;
                        break;
                    }
                }
                if (chosen >= 0) break;
            }
            if (chosen < 0) throw std::logic_error("brushing: path extraction failed");
            p.edges.push_back(chosen);
            cur = o.tail(g, chosen);
        }
        std::reverse(p.edges.begin(), p.edges.end());
        p.source_pos = g.vert(cur).boundary_pos;
        result[label] = p;
    }
    return result;
}

}  // namespace

BrushingSearch find_brushing(const Tangle& t, long orientation_cap) {
    BrushingSearch out;
    out.found = true;
    for (size_t bi = 0; bi < t.blobs.size(); ++bi) {
        const Blob& blob = t.blobs[bi];
        std::optional<BlobBrushing> best;
        int best_flow = -1;
        std::vector<int> best_cut;
        int targets = 0;
        try {
            for_each_orientation(t.core, true, orientation_cap, [&](const Orientation& o) {
                if (!is_acyclic(t.core, o)) return true;
                auto paths = solve_blob_paths(t.core, o, blob, &best_flow, &best_cut, &targets);
                if (paths) {
                    best = BlobBrushing{o, *paths};
                    return false;
                }
                return true;
            });
        } catch (const CapExceeded&) {
            // keep the best certificate collected so far
        }
        if (!best) {
            out.found = false;
            out.blob = static_cast<int>(bi);
            out.max_flow = best_flow;
            out.targets = targets;
            out.cut_vertices = best_cut;
            return out;
        }
        out.brushing.per_blob.push_back(*best);
    }
    return out;
}

Brushing make_tree_brushing(const Tangle& t, const std::map<std::string, int>& path_source) {
    Brushing out;
    const PlabicGraph& g = t.core;
    for (const Blob& blob : t.blobs) {
        std::map<int, int> required;  // edge -> direction along the path
        std::map<std::string, BrushPath> paths;
        for (size_t j = 0; j < blob.labels.size(); ++j) {
            const std::string& label = blob.labels[j];
            int a = blob.attach[j];
            if (g.vert(a).boundary_pos > 0) {
                BrushPath p;
                p.source_pos = g.vert(a).boundary_pos;
                paths[label] = p;
                continue;
            }
            auto it = path_source.find(label);
            if (it == path_source.end()) throw std::invalid_argument("make_tree_brushing: no source for label " + label);
            int src = g.boundary_vertex(it->second);
            std::map<int, std::pair<int, int>> pred;  // vertex -> (prev, edge)
            std::queue<int> q;
            q.push(src);
            pred[src] = {src, -1};
            while (!q.empty() && !pred.count(a)) {
                int x = q.front();
                q.pop();
                for (int e : g.vert(x).rot) {
                    int y = g.other_end(e, x);
                    if (!pred.count(y)) {
                        pred[y] = {x, e};
                        q.push(y);
                    }
                }
            }
            if (!pred.count(a)) throw std::invalid_argument("make_tree_brushing: unreachable attachment");
            BrushPath p;
            p.source_pos = it->second;
            int cur = a;
            while (cur != src) {
                auto [pv, pe] = pred[cur];
                p.edges.push_back(pe);
                int d = (g.edge(pe).u == pv) ? 0 : 1;  // directed pv -> cur
                auto [rit, fresh] = required.emplace(pe, d);
                if (!fresh && rit->second != d) throw std::invalid_argument("make_tree_brushing: conflicting paths");
                cur = pv;
            }
            std::reverse(p.edges.begin(), p.edges.end());
            paths[label] = p;
        }
        std::optional<Orientation> found;
        for_each_orientation(g, true, 1000000, [&](const Orientation& o) {
            for (auto& [e, d] : required)
                if (o.dir[e] != d) return true;
            if (!is_acyclic(g, o)) return true;
            found = o;
            return false;
        });
        if (!found) throw std::runtime_error("make_tree_brushing: no compatible acyclic reverse orientation");
        out.per_blob.push_back(BlobBrushing{*found, paths});
    }
    return out;
}

}  // namespace plab
