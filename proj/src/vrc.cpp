#include "plab/vrc.hpp"

#include <algorithm>
#include <functional>
#include <queue>
#include <set>

#include "plab/path_matrix.hpp"
#include "plab/plane_tree.hpp"

namespace plab {

MatQ VRC::boundary() const {
    MatQ z(m, graph.n());
    for (int pos = 1; pos <= graph.n(); ++pos) {
        int b = graph.boundary_vertex(pos);
        auto it = vectors.find(b);
        if (it == vectors.end()) throw std::logic_error("VRC::boundary: missing boundary vector");
        z.set_col(pos - 1, it->second);
    }
    return z;
}

bool VRC::relations_hold() const {
    for (int w : graph.alive_vertices()) {
        if (!graph.is_internal(w) || graph.vert(w).color != 'w') continue;
        std::vector<Rat> acc(m, Rat(0));
        for (int e : graph.vert(w).rot) {
            int b = graph.other_end(e, w);
            auto vit = vectors.find(b);
            auto cit = coeffs.find(e);
            if (vit == vectors.end() || cit == coeffs.end()) return false;
            if (cit->second.is_zero()) return false;
            for (int i = 0; i < m; ++i) acc[i] += cit->second * vit->second[i];
        }
        for (int i = 0; i < m; ++i)
            if (!acc[i].is_zero()) return false;
    }
    return true;
}

bool VRC::nondegenerate() const {
    for (const auto& [v, vec] : vectors) {
        if (!graph.vert(v).alive) continue;
        bool zero = true;
        for (const auto& x : vec)
            if (!x.is_zero()) zero = false;
        if (zero) return false;
    }
    return true;
}

void VRC::gauge_at(int vertex, const Rat& t) {
    if (t.is_zero()) throw std::invalid_argument("gauge_at: zero scale");
    for (int e : graph.vert(vertex).rot) coeffs[e] *= t;
    if (graph.vert(vertex).color == 'b') {
        auto it = vectors.find(vertex);
        if (it != vectors.end())
            for (auto& x : it->second) x /= t;
    }
}

namespace {

// children of each vertex when the tree is oriented towards `root`,
// in rotation order starting after the parent edge
struct Rooted {
    std::vector<int> parent_edge;          // -1 at root
    std::vector<std::vector<int>> kids;    // child vertex ids
    std::vector<int> order;                // post-order
};

Rooted root_tree(const PlabicGraph& t, int root) {
    Rooted r;
    r.parent_edge.assign(t.verts().size(), -2);
    r.kids.assign(t.verts().size(), {});
    std::vector<std::pair<int, int>> stack{{root, -1}};
    std::vector<int> pre;
    while (!stack.empty()) {
        auto [v, pe] = stack.back();
        stack.pop_back();
        r.parent_edge[v] = pe;
        pre.push_back(v);
        const auto& rot = t.vert(v).rot;
        int d = static_cast<int>(rot.size());
        int start = (pe < 0) ? 0 : t.rot_index(v, pe);
        for (int i = 1; i <= d; ++i) {
            int e = rot[(start + i) % d];
            if (e == pe) continue;
            int u = t.other_end(e, v);
            r.kids[v].push_back(u);
            stack.push_back({u, e});
        }
    }
    r.order.assign(pre.rbegin(), pre.rend());
    return r;
}

// subtree statistics away from the root
struct SubStats {
    int boundary = 0;
    int excess = 0;
};

void subtree_stats(const PlabicGraph& t, const Rooted& r, std::vector<SubStats>& st) {
    st.assign(t.verts().size(), {});
    for (int v : r.order) {
        SubStats s;
        if (t.vert(v).boundary_pos > 0) s.boundary = 1;
        else if (t.vert(v).color == 'b') s.excess = t.degree(v) - 2;
        for (int u : r.kids[v]) {
            s.boundary += st[u].boundary;
            s.excess += st[u].excess;
        }
        st[v] = s;
    }
}

}  // namespace

SubspaceLabels subspace_labels(const PlabicGraph& tree, int root, const MatQ& z) {
    int m = z.rows();
    SubspaceLabels out;
    out.root = root;
    Rooted r = root_tree(tree, root);
    std::vector<SubStats> st;
    subtree_stats(tree, r, st);
    for (int v : r.order) {
        Multivector<Rat> f(m);
        if (tree.vert(v).boundary_pos > 0) {
            f = Multivector<Rat>::from_vector(m, z.col(tree.vert(v).boundary_pos - 1));
        } else if (tree.vert(v).color == 'w') {
            f = Multivector<Rat>::scalar(m, Rat(1));
            for (int u : r.kids[v]) f = wedge(f, out.f.at(u));
        } else {
            bool first = true;
            for (int u : r.kids[v]) {
                if (first) {
                    f = out.f.at(u);
                    first = false;
                } else {
                    f = shuffle(f, out.f.at(u));
                }
            }
            if (first) f = Multivector<Rat>::scalar(m, Rat(1));  // isolated black
        }
        out.f[v] = f;
        if (v != root) {
            int d = st[v].boundary - m * st[v].excess;
            out.expected[v] = d;
            if (out.ok) {
                bool good = d >= 1 && d <= m && !f.is_zero() && f.is_homogeneous() && f.grade() == d;
                if (!good) {
                    out.ok = false;
                    out.witness_vertex = v;
                }
            }
        }
    }
    return out;
}

PlabicGraph extend_tree(const PlabicGraph& tree) {
    PlabicGraph g = tree;
    for (int pos = 1; pos <= g.n(); ++pos) {
        int b = g.boundary_vertex(pos);
        if (b < 0 || g.degree(b) == 0) continue;
        int e = g.vert(b).rot[0];
        // b -- W -- B -- old neighbor
        int bb = insert_bivalent(g, e, 'b');
        int be = -1;
        for (int ee : g.vert(bb).rot)
            if (g.other_end(ee, bb) == b) be = ee;
        insert_bivalent(g, be, 'w');
    }
    return g;
}

bool generic_for_tree(const PlabicGraph& tree, const MatQ& z, std::string* why) {
    PlabicGraph ext = extend_tree(tree);
    for (int r : ext.alive_vertices()) {
        if (!ext.is_internal(r)) continue;
        SubspaceLabels lab = subspace_labels(ext, r, z);
        if (!lab.ok) {
            if (why)
                *why = "label at vertex " + std::to_string(lab.witness_vertex) + " rooted at " + std::to_string(r) +
                       " is not a nonzero blade of the graph-statistic dimension";
            return false;
        }
    }
    return true;
}

VRC build_tree_vrc(const PlabicGraph& tree, const MatQ& z) {
    if (!is_forest(tree)) throw std::invalid_argument("build_tree_vrc: expects a forest");
    int m = z.rows();
    if (z.cols() != tree.n()) throw std::invalid_argument("build_tree_vrc: boundary size mismatch");
    std::string why;
    if (!generic_for_tree(tree, z, &why)) throw NotGeneric(why);

    VRC v;
    v.graph = tree;
    v.m = m;
    for (int pos = 1; pos <= tree.n(); ++pos) v.vectors[tree.boundary_vertex(pos)] = z.col(pos - 1);
    for (int b : tree.alive_vertices()) {
        if (!tree.is_internal(b) || tree.vert(b).color != 'b') continue;
        SubspaceLabels lab = subspace_labels(tree, b, z);
        const Multivector<Rat>& f = lab.f.at(b);
        if (f.is_zero() || f.grade() != 1) throw NotGeneric("root label at black vertex is not a line");
        v.vectors[b] = f.as_vector();
    }
    for (int w : tree.alive_vertices()) {
        if (!tree.is_internal(w) || tree.vert(w).color != 'w') continue;
        const auto& rot = tree.vert(w).rot;
        MatQ nb(m, static_cast<int>(rot.size()));
        for (size_t i = 0; i < rot.size(); ++i) nb.set_col(static_cast<int>(i), v.vectors.at(tree.other_end(rot[i], w)));
        MatQ ker = kernel(nb);
        if (ker.cols() != 1) throw KernelDimensionError("white vertex relation space is not a line");
        for (size_t i = 0; i < rot.size(); ++i) {
            Rat c = ker.at(static_cast<int>(i), 0);
            if (c.is_zero()) throw KernelDimensionError("white vertex relation has a zero coefficient");
            v.coeffs[rot[i]] = c;
        }
    }
    // edges not adjacent to any white vertex (possible only in degenerate
    // inputs) default to coefficient 1
    for (int e : tree.alive_edges())
        if (!v.coeffs.count(e)) v.coeffs[e] = Rat(1);
    if (!v.relations_hold()) throw std::logic_error("build_tree_vrc: relations failed after construction");
    if (!v.nondegenerate()) throw DegenerateVrc("internal vector vanished");
    return v;
}

VRC build_tree_vrc_random(const PlabicGraph& tree, int m, Rng& rng, int cap, MatQ* z_out) {
    for (int attempt = 0; attempt < cap; ++attempt) {
        MatQ z = rng.matrix(m, tree.n());
        try {
            VRC v = build_tree_vrc(tree, z);
            if (z_out) *z_out = z;
            return v;
        } catch (const NotGeneric&) {
        } catch (const KernelDimensionError&) {
        }
    }
    throw NotGeneric("build_tree_vrc_random: retry cap exceeded");
}

std::map<int, std::vector<Rat>> vectors_from_paths(const PlabicGraph& g, const Orientation& o,
                                                   const Mat<Rat>& boundary_vecs, const std::map<int, Rat>& coeffs) {
    if (!o.reverse_flavor) throw std::invalid_argument("vectors_from_paths: expects a reverse perfect orientation");
    std::vector<int> topo = topological_order(g, o);
    if (static_cast<int>(topo.size()) != g.num_alive_vertices()) throw CyclicOrientation();
    int dim = boundary_vecs.rows();
    std::map<int, std::vector<Rat>> val;
    for (int pos : source_set(g, o)) val[g.boundary_vertex(pos)] = boundary_vecs.col(pos - 1);
    for (int v : topo) {
        auto it = val.find(v);
        if (it == val.end()) continue;
        for (int e : g.vert(v).rot) {
            if (o.tail(g, e) != v) continue;
            const Rat& r = coeffs.at(e);
            if (r.is_zero()) throw std::invalid_argument("vectors_from_paths: zero coefficient");
            char tc = g.vert(v).color, hc = g.vert(o.head(g, e)).color;
            Rat f;
            if (tc == 'b' && hc == 'w') f = r;
            else if (tc == 'w' && hc == 'b') f = -(r.inv());
            else throw std::invalid_argument("vectors_from_paths: non-bipartite edge");
            int h = o.head(g, e);
            auto [jt, fresh] = val.try_emplace(h, std::vector<Rat>(dim, Rat(0)));
            for (int i = 0; i < dim; ++i) jt->second[i] += f * it->second[i];
        }
    }
    return val;
}

MatQ lift_to_big_vrc(const PlabicGraph& g, const VRC& v) {
    int n = g.n();
    int m = v.m;
    MatQ z = v.boundary();
    MatQ result;
    bool done = false;
    auto try_orientation = [&](const Orientation& o) -> bool {
        if (!is_acyclic(g, o)) return true;
        std::vector<int> idx = source_set(g, o);
        int big = static_cast<int>(idx.size());
        std::vector<int> cols;
        for (int s : idx) cols.push_back(s - 1);
        std::vector<int> all_rows(m);
        for (int i = 0; i < m; ++i) all_rows[i] = i;
        MatQ zi = z.submatrix(all_rows, cols);
        if (rank(zi) != m) return true;
        // extend the source columns to a basis of the big space by appending
        // standard basis rows
        MatQ mprime(big, big);
        for (int r = 0; r < m; ++r)
            for (int c = 0; c < big; ++c) mprime.at(r, c) = zi.at(r, c);
        std::vector<int> all_cols(big);
        for (int c = 0; c < big; ++c) all_cols[c] = c;
        int have = m;
        for (int j = 0; j < big && have < big; ++j) {
            mprime.at(have, j) = Rat(1);
            std::vector<int> rows_so_far(have + 1);
            for (int r = 0; r <= have; ++r) rows_so_far[r] = r;
            if (rank(mprime.submatrix(rows_so_far, all_cols)) == have + 1) ++have;
            else mprime.at(have, j) = Rat(0);
        }
        if (have != big) return true;
        MatQ bvec(big, n);
        for (int c = 0; c < big; ++c) bvec.set_col(idx[c] - 1, mprime.col(c));
        auto vals = vectors_from_paths(g, o, bvec, v.coeffs);
        MatQ w(big, n);
        for (int pos = 1; pos <= n; ++pos) {
            int b = g.boundary_vertex(pos);
            auto it = vals.find(b);
            if (it == vals.end()) throw std::logic_error("lift_to_big_vrc: boundary vertex unreached");
            w.set_col(pos - 1, it->second);
        }
        result = w;
        done = true;
        return false;
    };
    for_each_orientation(g, true, 1000000, try_orientation);
    if (!done) throw RankDeficientSources();
    return result;
}

VRC transport_square_move(const VRC& vin, const SquareFace& face) {
    VRC v = vin;
    PlabicGraph& g = v.graph;
    std::vector<int> ext_edges;
    std::set<int> square_edges(face.edges.begin(), face.edges.end());
    for (int x : face.verts) {
        int ext = -1;
        for (int e : g.vert(x).rot)
            if (!square_edges.count(e)) ext = e;
        if (ext < 0) throw PatternMismatch("transport_square_move: missing external edge");
        ext_edges.push_back(ext);
    }
    std::vector<int> ext_neighbor;
    std::vector<Rat> ext_coeff;
    for (size_t i = 0; i < 4; ++i) {
        ext_neighbor.push_back(g.other_end(ext_edges[i], face.verts[i]));
        ext_coeff.push_back(v.coeffs.at(ext_edges[i]));
    }

    std::vector<int> inserted = apply_square_move_bipartite(g, face);

    // After the flip: formerly-white square vertices are black and take the
    // vector of their outer black neighbor; formerly-black ones are white and
    // get their relation re-solved. Inserted bivalents carry the glue.
    for (size_t i = 0; i < 4; ++i) {
        int x = face.verts[i];
        int pad = inserted[i];
        int e_inner = -1, e_outer = -1;
        for (int e : g.vert(pad).rot) {
            if (g.other_end(e, pad) == x) e_inner = e;
            else e_outer = e;
        }
        if (g.vert(x).color == 'b') {
            // was white; pad is a white bivalent between x and the outer black
            v.vectors[x] = v.vectors.at(ext_neighbor[i]);
            v.coeffs[e_outer] = Rat(1);
            v.coeffs[e_inner] = Rat(-1);
            v.coeffs.erase(ext_edges[i]);
        } else {
            // was black; pad is a black bivalent carrying the old vector
            v.vectors[pad] = v.vectors.at(x);
            v.vectors.erase(x);
            v.coeffs[e_outer] = ext_coeff[i];
            v.coeffs.erase(ext_edges[i]);
            // e_inner participates in the re-solved relation at x below
        }
    }
    // Re-solve the relations at the two new white square vertices.
    for (size_t i = 0; i < 4; ++i) {
        int x = face.verts[i];
        if (g.vert(x).color != 'w') continue;
        const auto& rot = g.vert(x).rot;
        MatQ nb(v.m, static_cast<int>(rot.size()));
        for (size_t j = 0; j < rot.size(); ++j) nb.set_col(static_cast<int>(j), v.vectors.at(g.other_end(rot[j], x)));
        MatQ ker = kernel(nb);
        if (ker.cols() != 1) throw DegenerateVrc("square transport: relation space is not a line");
        for (size_t j = 0; j < rot.size(); ++j) {
            Rat c = ker.at(static_cast<int>(j), 0);
            if (c.is_zero()) throw DegenerateVrc("square transport: zero coefficient");
            v.coeffs[rot[j]] = c;
        }
    }
    if (!v.relations_hold()) throw std::logic_error("transport_square_move: relations failed");
    return v;
}

}  // namespace plab
