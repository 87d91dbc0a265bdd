#include "plab/path_matrix.hpp"

#include <algorithm>
#include <functional>

namespace plab {

Rat step_weight(const PlabicGraph& g, const Orientation& o, const EdgeWeights& w, int e) {
    auto it = w.find(e);
    if (it == w.end()) throw std::invalid_argument("step_weight: missing edge weight");
    if (it->second.is_zero()) throw std::invalid_argument("step_weight: zero edge weight");
    char tail_color = g.vert(o.tail(g, e)).color;
    char head_color = g.vert(o.head(g, e)).color;
    if (tail_color == 'w' && head_color == 'b') return it->second;
    if (tail_color == 'b' && head_color == 'w') return it->second.inv();
    return it->second;  // same-colored endpoints: plain weight
}

MatQ path_matrix(const PlabicGraph& g, const Orientation& o, const EdgeWeights& w) {
    if (o.reverse_flavor) throw std::invalid_argument("path_matrix: expects a perfect orientation");
    std::vector<int> topo = topological_order(g, o);
    if (static_cast<int>(topo.size()) != g.num_alive_vertices()) throw CyclicOrientation();

    std::vector<int> sources = source_set(g, o);
    int k = static_cast<int>(sources.size());
    int n = g.n();
    MatQ a(k, n);
    std::vector<int> in_sources(n + 1, -1);
    for (int r = 0; r < k; ++r) in_sources[sources[r]] = r;

    for (int r = 0; r < k; ++r) {
        int start = g.boundary_vertex(sources[r]);
        std::map<int, Rat> value;
        value[start] = Rat(1);
        for (int v : topo) {
            auto it = value.find(v);
            if (it == value.end() || it->second.is_zero()) continue;
            for (int e : g.vert(v).rot) {
                if (o.tail(g, e) != v) continue;
                Rat add = it->second * step_weight(g, o, w, e);
                auto [jt, inserted] = value.emplace(o.head(g, e), add);
                if (!inserted) jt->second += add;
            }
        }
        for (int j = 1; j <= n; ++j) {
            if (in_sources[j] >= 0) {
                a.at(r, j - 1) = (in_sources[j] == r) ? Rat(1) : Rat(0);
                continue;
            }
            int bj = g.boundary_vertex(j);
            Rat m = (bj >= 0 && value.count(bj)) ? value[bj] : Rat(0);
            int i = sources[r];
            int lo = std::min(i, j), hi = std::max(i, j);
            int between = 0;
            for (int s : sources)
                if (s > lo && s < hi) ++between;
            a.at(r, j - 1) = (between % 2 == 0) ? m : -m;
        }
    }
    return a;
}

namespace {

struct FlowSearch {
    const PlabicGraph& g;
    const Orientation& o;
    const EdgeWeights& w;
    std::vector<char> used;
    std::vector<char> is_target;
    Rat total = Rat(0);

    FlowSearch(const PlabicGraph& g_, const Orientation& o_, const EdgeWeights& w_)
        : g(g_), o(o_), w(w_), used(g_.verts().size(), 0), is_target(g_.verts().size(), 0) {}

    // Extend a path from v; when it reaches a free target, continue with the
    // next source.
    void extend(const std::vector<int>& starts, size_t si, int v, const Rat& weight_so_far, const Rat& acc) {
        if (is_target[v]) route_next(starts, si + 1, acc * weight_so_far);
        for (int e : g.vert(v).rot) {
            if (o.tail(g, e) != v) continue;
            int h = o.head(g, e);
            if (used[h]) continue;
            used[h] = 1;
            extend(starts, si, h, weight_so_far * step_weight(g, o, w, e), acc);
            used[h] = 0;
        }
    }

    void route_next(const std::vector<int>& starts, size_t si, const Rat& acc) {
        if (si == starts.size()) {
            total += acc;
            return;
        }
        int s = starts[si];
        if (used[s]) return;  // occupied by an earlier path
        used[s] = 1;
        extend(starts, si, s, Rat(1), acc);
        used[s] = 0;
    }
};

}  // namespace

Rat flow_polynomial(const PlabicGraph& g, const Orientation& o, const EdgeWeights& w, const std::vector<int>& targets) {
    std::vector<int> sources = source_set(g, o);
    if (sources.size() != targets.size()) throw std::invalid_argument("flow_polynomial: |targets| must equal |sources|");
    FlowSearch fs(g, o, w);
    std::vector<int> starts;
    std::vector<int> tset = targets;
    std::sort(tset.begin(), tset.end());
    for (int t : tset) {
        int tv = g.boundary_vertex(t);
        if (tv < 0) throw std::invalid_argument("flow_polynomial: bad target");
        fs.is_target[tv] = 1;
    }
    // Sources in the target set carry trivial paths occupying their vertex.
    for (int s : sources) {
        int sv = g.boundary_vertex(s);
        if (std::binary_search(tset.begin(), tset.end(), s)) {
            fs.used[sv] = 1;
            fs.is_target[sv] = 0;  // consumed by the trivial path
        } else {
            starts.push_back(sv);
        }
    }
    fs.route_next(starts, 0, Rat(1));
    return fs.total;
}

GaugeFix gauge_fix(const PlabicGraph& g, const std::vector<int>& required_edges) {
    size_t nv = g.verts().size();
    std::vector<int> parent(nv), bcount(nv, 0);
    for (size_t i = 0; i < nv; ++i) parent[i] = static_cast<int>(i);
    std::function<int(int)> find = [&](int x) { return parent[x] == x ? x : parent[x] = find(parent[x]); };
    for (int v : g.alive_vertices())
        if (g.vert(v).boundary_pos > 0) bcount[v] = 1;

    std::vector<char> in_forest(g.edges().size(), 0);
    auto try_join = [&](int e) -> bool {
        int a = find(g.edge(e).u), b = find(g.edge(e).v);
        if (a == b) return false;
        if (bcount[a] + bcount[b] > 1) return false;
        parent[a] = b;
        bcount[b] += bcount[a];
        in_forest[e] = 1;
        return true;
    };

    for (int e : required_edges) {
        int a = find(g.edge(e).u), b = find(g.edge(e).v);
        if (a == b) throw Infeasible("gauge_fix: required edges contain a cycle");
        if (bcount[a] + bcount[b] > 1) throw Infeasible("gauge_fix: required edges join two boundary components");
        parent[a] = b;
        bcount[b] += bcount[a];
        in_forest[e] = 1;
    }

    bool changed = true;
    while (changed) {
        changed = false;
        for (int e : g.alive_edges()) {
            if (in_forest[e]) continue;
            if (try_join(e)) changed = true;
        }
    }
    for (int v : g.alive_vertices())
        if (bcount[find(v)] != 1) throw Infeasible("gauge_fix: component without a boundary vertex");

    GaugeFix fix;
    for (int e : g.alive_edges()) {
        if (in_forest[e]) fix.unit_edges.push_back(e);
        else fix.free_edges.push_back(e);
    }
    return fix;
}

}  // namespace plab
