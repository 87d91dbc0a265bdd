#include <algorithm>

#include "plab/moves.hpp"
#include "plab/promotion.hpp"

namespace plab {

namespace {

// Pad a covered boundary vertex with a white+black bivalent pair and return
// the new black vertex, the attachment point for a pass-through label.
int pad_boundary(PlabicGraph& g, int pos) {
    int b = g.boundary_vertex(pos);
    if (g.degree(b) == 0) throw std::logic_error("pad_boundary: boundary is bare");
    int e = g.vert(b).rot[0];
    int black = insert_bivalent(g, e, 'b');
    int be = -1;
    for (int ee : g.vert(black).rot)
        if (g.other_end(ee, black) == b) be = ee;
    insert_bivalent(g, be, 'w');
    return black;
}

ExprPtr wedge_labels(const std::vector<int>& idx) {
    std::vector<std::string> labels;
    for (int i : idx) labels.push_back(index_label(i));
    return ex::wedge_cols(labels);
}

ExprPtr bracket_labels(const std::vector<int>& idx) { return ex::bracket(wedge_labels(idx)); }

}  // namespace

ExprPtr spurion_f(int i) {
    std::vector<int> a{1, 2, 3}, b{4, 5, 6}, c{7, 8, 9};
    auto erase = [&](std::vector<int>& v) { v.erase(std::remove(v.begin(), v.end(), i), v.end()); };
    erase(a);
    erase(b);
    erase(c);
    return ex::bracket(ex::shuffle(ex::shuffle(wedge_labels(a), wedge_labels(b)), wedge_labels(c)));
}

ExprPtr chain_f(int i) {
    std::vector<int> a{1, 2, 3}, b{4, 5, 6}, mid{7}, c{8, 9, 10}, d{11, 12, 13};
    auto erase = [&](std::vector<int>& v) { v.erase(std::remove(v.begin(), v.end(), i), v.end()); };
    erase(a);
    erase(b);
    erase(mid);
    erase(c);
    erase(d);
    ExprPtr left = ex::shuffle(wedge_labels(a), wedge_labels(b));
    ExprPtr right = ex::shuffle(wedge_labels(c), wedge_labels(d));
    ExprPtr inner = mid.empty() ? ex::wedge(left, right) : ex::wedge(ex::wedge(left, wedge_labels(mid)), right);
    return ex::bracket(inner);
}

Promotion star_promotion(int m, int n) {
    if (m < 3 || n < m + 2) throw std::invalid_argument("star_promotion: need m >= 3 and n >= m + 2");
    Promotion p;
    p.family = "star";
    p.m = m;
    p.n = n;
    PlabicGraph g(n);
    for (int pos = 1; pos <= n; ++pos) g.add_boundary(pos);
    std::vector<int> whites, blacks;
    for (int j = 1; j <= m + 1; ++j) whites.push_back(g.add_internal('w'));
    for (int j = 1; j <= m; ++j) blacks.push_back(g.add_internal('b'));
    for (int j = 0; j <= m; ++j) g.add_edge(whites[j], g.boundary_vertex(j + 1));
    for (int j = 0; j < m; ++j) {
        g.add_edge(whites[j], blacks[j]);
        g.add_edge(blacks[j], whites[j + 1]);
    }
    p.tangle.core = g;

    Blob blob;
    std::map<std::string, int> sources;
    auto add_label = [&](int idx, int attach) {
        blob.labels.push_back(index_label(idx));
        blob.attach.push_back(attach);
    };
    add_label(1, blacks[0]);
    sources[index_label(1)] = 1;
    for (int j = 3; j <= m + 1; ++j) {
        add_label(j, blacks[j - 2]);
        sources[index_label(j)] = j;
    }
    for (int j = m + 2; j <= n; ++j) add_label(j, p.tangle.core.boundary_vertex(j));
    p.tangle.blobs.push_back(blob);
    p.brushing = make_tree_brushing(p.tangle, sources);

    std::map<std::string, ExprPtr> subs;
    for (int j = 3; j <= m; ++j) {
        std::vector<int> head, tail, denom;
        for (int i = 1; i <= j - 1; ++i) head.push_back(i);
        for (int i = j; i <= m + 1; ++i) tail.push_back(i);
        for (int i = 1; i <= m + 1; ++i)
            if (i != j) denom.push_back(i);
        subs[index_label(j)] = ex::quot(ex::shuffle(wedge_labels(head), wedge_labels(tail)), bracket_labels(denom));
    }
    p.subs.push_back(subs);
    return p;
}

Promotion spurion_promotion(int n) {
    if (n < 10) throw std::invalid_argument("spurion_promotion: need n >= 10");
    Promotion p;
    p.family = "spurion";
    p.m = 4;
    p.n = n;
    PlabicGraph g(n);
    for (int pos = 1; pos <= n; ++pos) g.add_boundary(pos);
    // chain presentation of the (3,3,3)-tree with attachment blacks
    int i1 = g.add_internal('b');
    int i2 = g.add_internal('w');
    int i3 = g.add_internal('b');
    int i4 = g.add_internal('w');
    int i5 = g.add_internal('b');
    int i0 = g.add_internal('w');
    int i6 = g.add_internal('w');
    int i7 = g.add_internal('b');
    int i8 = g.add_internal('w');
    int i9 = g.add_internal('b');
    int w01 = g.add_internal('w');
    int w09 = g.add_internal('w');
    g.add_edge(g.boundary_vertex(1), w01);
    g.add_edge(w01, i1);
    g.add_edge(i1, i2);
    g.add_edge(g.boundary_vertex(2), i2);
    g.add_edge(i2, i3);
    g.add_edge(i3, i4);
    g.add_edge(g.boundary_vertex(3), i4);
    g.add_edge(i4, i5);
    g.add_edge(i5, i0);
    for (int j = 4; j <= 6; ++j) g.add_edge(g.boundary_vertex(j), i0);
    g.add_edge(i5, i6);
    g.add_edge(g.boundary_vertex(7), i6);
    g.add_edge(i6, i7);
    g.add_edge(i7, i8);
    g.add_edge(g.boundary_vertex(8), i8);
    g.add_edge(i8, i9);
    g.add_edge(i9, w09);
    g.add_edge(w09, g.boundary_vertex(9));
    p.tangle.core = g;

    Blob blob;
    std::map<std::string, int> sources;
    auto attach = [&](int idx, int v) {
        blob.labels.push_back(index_label(idx));
        blob.attach.push_back(v);
        sources[index_label(idx)] = idx;
    };
    attach(1, i1);
    attach(2, i3);
    attach(7, i5);
    attach(8, i7);
    attach(9, i9);
    for (int j = 10; j <= n; ++j) {
        blob.labels.push_back(index_label(j));
        blob.attach.push_back(g.boundary_vertex(j));
    }
    p.tangle.blobs.push_back(blob);
    p.brushing = make_tree_brushing(p.tangle, sources);

    std::map<std::string, ExprPtr> subs;
    ExprPtr s456_789 = ex::shuffle(wedge_labels({4, 5, 6}), wedge_labels({7, 8, 9}));
    subs[index_label(2)] =
        ex::quot(ex::shuffle(wedge_labels({1, 2}), ex::wedge(ex::col("3"), s456_789)), spurion_f(2));
    subs[index_label(7)] =
        ex::quot(ex::shuffle(ex::shuffle(wedge_labels({1, 2, 3}), wedge_labels({4, 5, 6})), wedge_labels({7, 8, 9})),
                 spurion_f(7));
    subs[index_label(8)] = ex::quot(
        ex::shuffle(ex::wedge(ex::shuffle(wedge_labels({1, 2, 3}), wedge_labels({4, 5, 6})), ex::col("7")),
                    wedge_labels({8, 9})),
        spurion_f(8));
    p.subs.push_back(subs);
    return p;
}

Promotion chain_tree_promotion(int n) {
    if (n < 14) throw std::invalid_argument("chain_tree_promotion: need n >= 14");
    Promotion p;
    p.family = "chain_tree";
    p.m = 4;
    p.n = n;
    PlabicGraph g(n);
    for (int pos = 1; pos <= n; ++pos) g.add_boundary(pos);
    int j1 = g.add_internal('b');
    int i2 = g.add_internal('w');
    int j2 = g.add_internal('b');
    int i3 = g.add_internal('w');
    int j3 = g.add_internal('b');
    int i456 = g.add_internal('w');
    int i7 = g.add_internal('w');
    int jb = g.add_internal('b');
    int i89a = g.add_internal('w');
    int ib = g.add_internal('w');
    int jc = g.add_internal('b');
    int ic = g.add_internal('w');
    int jd = g.add_internal('b');
    int w01 = g.add_internal('w');
    int w0d = g.add_internal('w');
    g.add_edge(g.boundary_vertex(1), w01);
    g.add_edge(w01, j1);
    g.add_edge(j1, i2);
    g.add_edge(g.boundary_vertex(2), i2);
    g.add_edge(i2, j2);
    g.add_edge(j2, i3);
    g.add_edge(g.boundary_vertex(3), i3);
    g.add_edge(i3, j3);
    g.add_edge(j3, i456);
    for (int j = 4; j <= 6; ++j) g.add_edge(g.boundary_vertex(j), i456);
    g.add_edge(j3, i7);
    g.add_edge(g.boundary_vertex(7), i7);
    g.add_edge(i7, jb);
    g.add_edge(jb, i89a);
    for (int j = 8; j <= 10; ++j) g.add_edge(g.boundary_vertex(j), i89a);
    g.add_edge(jb, ib);
    g.add_edge(g.boundary_vertex(11), ib);
    g.add_edge(ib, jc);
    g.add_edge(jc, ic);
    g.add_edge(g.boundary_vertex(12), ic);
    g.add_edge(ic, jd);
    g.add_edge(jd, w0d);
    g.add_edge(w0d, g.boundary_vertex(13));
    p.tangle.core = g;

    Blob blob;
    std::map<std::string, int> sources;
    auto attach = [&](int idx, int v) {
        blob.labels.push_back(index_label(idx));
        blob.attach.push_back(v);
        sources[index_label(idx)] = idx;
    };
    attach(1, j1);
    attach(2, j2);
    attach(3, j3);
    attach(11, jb);
    p.signs[jb] = -1;
    attach(12, jc);
    attach(13, jd);
    for (int j = 14; j <= n; ++j) {
        blob.labels.push_back(index_label(j));
        blob.attach.push_back(g.boundary_vertex(j));
    }
    p.tangle.blobs.push_back(blob);
    p.brushing = make_tree_brushing(p.tangle, sources);

    std::map<std::string, ExprPtr> subs;
    ExprPtr s89a_bcd = ex::shuffle(wedge_labels({8, 9, 10}), wedge_labels({11, 12, 13}));
    ExprPtr seven_block = ex::wedge(ex::col("7"), s89a_bcd);  // 7(89A*BCD)
    // 2 -> (12 * (3(456 * (7(89A*BCD)))))/F_2
    subs[index_label(2)] = ex::quot(
        ex::shuffle(wedge_labels({1, 2}), ex::wedge(ex::col("3"), ex::shuffle(wedge_labels({4, 5, 6}), seven_block))),
        chain_f(2));
    // 3 -> (123 * 456 * (7(89A*BCD)))/F_3
    subs[index_label(3)] = ex::quot(
        ex::shuffle(ex::shuffle(wedge_labels({1, 2, 3}), wedge_labels({4, 5, 6})), seven_block), chain_f(3));
    // B -> (BCD * 89A * (7(123*456)))/F_B
    ExprPtr seven123456 = ex::wedge(ex::col("7"), ex::shuffle(wedge_labels({1, 2, 3}), wedge_labels({4, 5, 6})));
    subs[index_label(11)] = ex::quot(
        ex::shuffle(ex::shuffle(wedge_labels({11, 12, 13}), wedge_labels({8, 9, 10})), seven123456), chain_f(11));
    // C -> (CD * (B(89A * (7(456*123)))))/F_C
    ExprPtr seven456123 = ex::wedge(ex::col("7"), ex::shuffle(wedge_labels({4, 5, 6}), wedge_labels({1, 2, 3})));
    subs[index_label(12)] = ex::quot(
        ex::shuffle(wedge_labels({12, 13}),
                    ex::wedge(ex::col("B"), ex::shuffle(wedge_labels({8, 9, 10}), seven456123))),
        chain_f(12));
    p.subs.push_back(subs);
    return p;
}

Promotion forest_promotion(int n, int a) {
    int b = a + 1, c = a + 2, d = a + 3;
    if (a < 5 || d > n) throw std::invalid_argument("forest_promotion: need 5 <= a and a + 3 <= n");
    Promotion p;
    p.family = "forest";
    p.m = 3;
    p.n = n;
    PlabicGraph g(n);
    for (int pos = 1; pos <= n; ++pos) g.add_boundary(pos);
    int jl = g.add_internal('b');
    int u1 = g.add_internal('w');
    int u2 = g.add_internal('w');
    g.add_edge(u1, jl);
    g.add_edge(jl, u2);
    g.add_edge(g.boundary_vertex(1), u1);
    g.add_edge(g.boundary_vertex(2), u1);
    g.add_edge(g.boundary_vertex(3), u2);
    g.add_edge(g.boundary_vertex(4), u2);
    int jr = g.add_internal('b');
    int u3 = g.add_internal('w');
    int u4 = g.add_internal('w');
    g.add_edge(u3, jr);
    g.add_edge(jr, u4);
    g.add_edge(g.boundary_vertex(a), u3);
    g.add_edge(g.boundary_vertex(b), u3);
    g.add_edge(g.boundary_vertex(c), u4);
    g.add_edge(g.boundary_vertex(d), u4);
    p.tangle.core = g;

    Blob blob;
    std::map<std::string, int> sources;
    auto attach_sub = [&](int idx, int v) {
        blob.labels.push_back(index_label(idx));
        blob.attach.push_back(v);
        sources[index_label(idx)] = idx;
    };
    auto attach_pad = [&](int idx) {
        int v = pad_boundary(p.tangle.core, idx);
        blob.labels.push_back(index_label(idx));
        blob.attach.push_back(v);
        sources[index_label(idx)] = idx;
    };
    auto attach_bare = [&](int idx) {
        blob.labels.push_back(index_label(idx));
        blob.attach.push_back(p.tangle.core.boundary_vertex(idx));
    };
    // N' = [n] minus {3, c}, in clockwise order
    attach_pad(1);
    attach_sub(2, jl);
    attach_pad(4);
    for (int j = 5; j < a; ++j) attach_bare(j);
    attach_pad(a);
    attach_sub(b, jr);
    attach_pad(d);
    for (int j = d + 1; j <= n; ++j) attach_bare(j);
    p.tangle.blobs.push_back(blob);
    p.brushing = make_tree_brushing(p.tangle, sources);

    std::map<std::string, ExprPtr> subs;
    subs[index_label(2)] =
        ex::quot(ex::shuffle(wedge_labels({1, 2}), wedge_labels({3, 4})), bracket_labels({1, 3, 4}));
    subs[index_label(b)] =
        ex::quot(ex::shuffle(wedge_labels({a, b}), wedge_labels({c, d})), bracket_labels({a, c, d}));
    p.subs.push_back(subs);
    return p;
}

Promotion bcfw_promotion(int n, int a) {
    int b = a + 1, c = n - 2, d = n - 1;
    if (a < 2 || b >= c - 1) throw std::invalid_argument("bcfw_promotion: need 2 <= a and a + 2 < n - 2");
    Promotion p;
    p.family = "bcfw";
    p.m = 4;
    p.n = n;
    PlabicGraph g(n);
    for (int pos = 1; pos <= n; ++pos) g.add_boundary(pos);
    int w1 = g.add_internal('w');
    int w2 = g.add_internal('w');
    int w3 = g.add_internal('w');
    int b1 = g.add_internal('b');
    int b2 = g.add_internal('b');
    g.add_edge(w1, b1);
    g.add_edge(b1, w3);
    g.add_edge(w3, b2);
    g.add_edge(b2, w2);
    g.add_edge(g.boundary_vertex(a), w1);
    g.add_edge(g.boundary_vertex(b), w1);
    g.add_edge(g.boundary_vertex(c), w2);
    g.add_edge(g.boundary_vertex(d), w2);
    g.add_edge(g.boundary_vertex(n), w3);
    p.tangle.core = g;

    // left blob: labels 1..a, b, n; right blob: labels b..c, d, n
    Blob left, right;
    std::map<std::string, int> sources;
    int pad_a = pad_boundary(p.tangle.core, a);
    int pad_b = pad_boundary(p.tangle.core, b);
    int pad_c = pad_boundary(p.tangle.core, c);
    int pad_n = pad_boundary(p.tangle.core, n);
    for (int j = 1; j < a; ++j) {
        left.labels.push_back(index_label(j));
        left.attach.push_back(p.tangle.core.boundary_vertex(j));
    }
    left.labels.push_back(index_label(a));
    left.attach.push_back(pad_a);
    left.labels.push_back(index_label(b));
    left.attach.push_back(b1);
    left.labels.push_back(index_label(n));
    left.attach.push_back(pad_n);

    right.labels.push_back(index_label(b));
    right.attach.push_back(pad_b);
    for (int j = b + 1; j < c; ++j) {
        right.labels.push_back(index_label(j));
        right.attach.push_back(p.tangle.core.boundary_vertex(j));
    }
    right.labels.push_back(index_label(c));
    right.attach.push_back(pad_c);
    right.labels.push_back(index_label(d));
    right.attach.push_back(b2);
    right.labels.push_back(index_label(n));
    right.attach.push_back(b1);
    p.tangle.blobs.push_back(left);
    p.tangle.blobs.push_back(right);

    std::map<std::string, int> src;
    src[index_label(a)] = a;
    src[index_label(b)] = b;
    src[index_label(c)] = c;
    src[index_label(d)] = d;
    src[index_label(n)] = n;
    p.brushing = make_tree_brushing(p.tangle, src);

    // F_e erases e from <a b c d n>
    auto f_of = [&](int erase) {
        std::vector<int> idx;
        for (int x : {a, b, c, d, n})
            if (x != erase) idx.push_back(x);
        return bracket_labels(idx);
    };
    std::map<std::string, ExprPtr> lsubs, rsubs;
    lsubs[index_label(b)] = ex::quot(ex::shuffle(wedge_labels({a, b}), wedge_labels({c, d, n})), f_of(b));
    rsubs[index_label(d)] = ex::quot(ex::shuffle(wedge_labels({c, d}), wedge_labels({a, b, n})), f_of(d));
    rsubs[index_label(n)] = ex::quot(ex::shuffle(wedge_labels({c, d, n}), wedge_labels({a, b})), f_of(n));
    p.subs.push_back(lsubs);
    p.subs.push_back(rsubs);
    return p;
}

Rat brush_path_weight(const PlabicGraph& g, const VRC& v, int start_vertex, const std::vector<int>& edges) {
    Rat num(1), den(1);
    int cur = start_vertex;
    for (int e : edges) {
        int nxt = g.other_end(e, cur);
        char tc = g.vert(cur).color, hc = g.vert(nxt).color;
        const Rat& r = v.coeffs.at(e);
        if (tc == 'b' && hc == 'w') num *= r;
        else if (tc == 'w' && hc == 'b') den *= -r;
        else throw std::logic_error("brush_path_weight: non-bipartite path edge");
        cur = nxt;
    }
    return num / den;
}

std::vector<MatQ> promote_with_vrc(const Tangle& t, const Brushing& br, const std::map<int, int>& signs, const VRC& v,
                                   const MatQ& z) {
    std::vector<MatQ> out;
    for (size_t bi = 0; bi < t.blobs.size(); ++bi) {
        const Blob& blob = t.blobs[bi];
        const BlobBrushing& bb = br.per_blob.at(bi);
        MatQ mat(v.m, blob.arity());
        for (int j = 0; j < blob.arity(); ++j) {
            const std::string& label = blob.labels[j];
            int a = blob.attach[j];
            std::vector<Rat> col;
            if (t.core.vert(a).boundary_pos > 0) {
                col = z.col(t.core.vert(a).boundary_pos - 1);
            } else {
                const BrushPath& path = bb.paths.at(label);
                Rat wt = brush_path_weight(t.core, v, t.core.boundary_vertex(path.source_pos), path.edges);
                int sigma = signs.count(a) ? signs.at(a) : 1;
                col = v.vectors.at(a);
                for (auto& x : col) x = Rat(sigma) * x / wt;
            }
            mat.set_col(j, col);
        }
        if (rank(mat) != v.m) throw DegenerateBlob("blob matrix rank below m");
        out.push_back(mat);
    }
    return out;
}

std::vector<MatQ> tree_promotion(const Tangle& t, const Brushing& br, const std::map<int, int>& signs, const MatQ& z) {
    VRC v = build_tree_vrc(t.core, z);
    return promote_with_vrc(t, br, signs, v, z);
}

bool verify_composition(const Promotion& outer, int i, const Promotion& inner, const MatQ& z) {
    int m = z.rows();
    // sequential route
    VRC vout = build_tree_vrc(outer.tangle.core, z);
    std::vector<MatQ> outer_pinned = promote_with_vrc(outer.tangle, outer.brushing, outer.signs, vout, z);
    VRC vin_seq = build_tree_vrc(inner.tangle.core, outer_pinned[i]);
    std::vector<MatQ> inner_pinned =
        promote_with_vrc(inner.tangle, inner.brushing, inner.signs, vin_seq, outer_pinned[i]);
    std::vector<MatQ> rhs;
    for (size_t j = 0; j < outer_pinned.size(); ++j) {
        if (static_cast<int>(j) == i) {
            for (auto& b : inner_pinned) rhs.push_back(b);
        } else {
            rhs.push_back(outer_pinned[j]);
        }
    }

    // composed route: the configuration on the glued core, assembled from the
    // outer solve and the inner solve at the raw (unpinned) blob vectors
    ComposeMaps maps;
    Tangle comp = compose(outer.tangle, i, inner.tangle, &maps);
    const Blob& hole = outer.tangle.blobs[i];
    MatQ zin_raw(m, hole.arity());
    for (int j = 0; j < hole.arity(); ++j) {
        int a = hole.attach[j];
        if (outer.tangle.core.vert(a).boundary_pos > 0)
            zin_raw.set_col(j, z.col(outer.tangle.core.vert(a).boundary_pos - 1));
        else
            zin_raw.set_col(j, vout.vectors.at(a));
    }
    VRC vin_raw = build_tree_vrc(inner.tangle.core, zin_raw);
    VRC vcomp;
    vcomp.graph = comp.core;
    vcomp.m = m;
    for (const auto& [a, vec] : vout.vectors)
        if (comp.core.vert(a).alive) vcomp.vectors[a] = vec;
    for (const auto& [e, r] : vout.coeffs)
        if (comp.core.edge(e).alive) vcomp.coeffs[e] = r;
    for (const auto& [b, vec] : vin_raw.vectors) {
        if (inner.tangle.core.vert(b).boundary_pos > 0) continue;  // glued
        vcomp.vectors[maps.vmap.at(b)] = vec;
    }
    for (const auto& [e, r] : vin_raw.coeffs) vcomp.coeffs[maps.emap.at(e)] = r;
    if (!vcomp.relations_hold()) throw std::logic_error("verify_composition: glued relations failed");

    // pinned columns of the composed tangle via concatenated paths
    std::vector<MatQ> lhs;
    size_t comp_bi = 0;
    for (size_t j = 0; j < outer.tangle.blobs.size(); ++j) {
        if (static_cast<int>(j) == i) {
            for (size_t ib = 0; ib < inner.tangle.blobs.size(); ++ib, ++comp_bi) {
                const Blob& cb = comp.blobs[comp_bi];
                const Blob& inner_blob = inner.tangle.blobs[ib];
                MatQ mat(m, cb.arity());
                for (int c = 0; c < cb.arity(); ++c) {
                    int a = cb.attach[c];
                    std::vector<Rat> col;
                    if (comp.core.vert(a).boundary_pos > 0) {
                        col = z.col(comp.core.vert(a).boundary_pos - 1);
                    } else {
                        // composite path: outer brush path of the hole label at
                        // the inner path's source position, then the inner path
                        const BrushPath& ipath = inner.brushing.per_blob[ib].paths.at(inner_blob.labels[c]);
                        int pos = ipath.source_pos;
                        int hole_attach = hole.attach.at(pos - 1);
                        std::vector<int> edges;
                        int start;
                        if (outer.tangle.core.vert(hole_attach).boundary_pos > 0) {
                            start = comp.core.boundary_vertex(outer.tangle.core.vert(hole_attach).boundary_pos);
                        } else {
                            const BrushPath& opath =
                                outer.brushing.per_blob[i].paths.at(hole.labels.at(pos - 1));
                            start = comp.core.boundary_vertex(opath.source_pos);
                            edges = opath.edges;
                        }
                        for (int e : ipath.edges) edges.push_back(maps.emap.at(e));
                        Rat wt = brush_path_weight(comp.core, vcomp, start, edges);
                        col = vcomp.vectors.at(a);
                        for (auto& x : col) x = x / wt;
                    }
                    mat.set_col(c, col);
                }
                lhs.push_back(mat);
            }
        } else {
            Tangle single;
            single.core = comp.core;
            single.blobs.push_back(comp.blobs[comp_bi]);
            Brushing b1;
            b1.per_blob.push_back(outer.brushing.per_blob[j]);
            lhs.push_back(promote_with_vrc(single, b1, {}, vcomp, z)[0]);
            ++comp_bi;
        }
    }

    if (lhs.size() != rhs.size()) return false;
    for (size_t b = 0; b < lhs.size(); ++b) {
        if (lhs[b].rows() != rhs[b].rows() || lhs[b].cols() != rhs[b].cols()) return false;
        for (int c = 0; c < lhs[b].cols(); ++c) {
            Rat num(0), den(0);
            for (int r = 0; r < lhs[b].rows(); ++r) {
                if (lhs[b].at(r, c).is_zero() != rhs[b].at(r, c).is_zero()) return false;
                if (!lhs[b].at(r, c).is_zero() && num.is_zero()) {
                    num = lhs[b].at(r, c);
                    den = rhs[b].at(r, c);
                }
            }
            if (num.is_zero()) return false;
            for (int r = 0; r < lhs[b].rows(); ++r)
                if (!(lhs[b].at(r, c) * den == rhs[b].at(r, c) * num)) return false;
        }
    }
    return true;
}

}  // namespace plab
