#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "plab/amplitree_enum.hpp"
#include "plab/plane_tree.hpp"
#include "plab/vrc.hpp"

using namespace plab;

namespace {

PlabicGraph star_tree(int n) {
    PlabicGraph g(n);
    int w = g.add_internal('w');
    for (int pos = 1; pos <= n; ++pos) g.add_edge(w, g.add_boundary(pos));
    return g;
}

PlabicGraph spurion_tree() {
    PlabicGraph g(9);
    int c = g.add_internal('b');
    for (int grp = 0; grp < 3; ++grp) {
        int w = g.add_internal('w');
        g.add_edge(c, w);
        for (int j = 1; j <= 3; ++j) g.add_edge(w, g.add_boundary(grp * 3 + j));
    }
    return g;
}

// componentwise-proportional vectors
bool proportional(const std::vector<Rat>& a, const std::vector<Rat>& b) {
    Rat num(0), den(0);
    for (size_t i = 0; i < a.size(); ++i) {
        if (a[i].is_zero() != b[i].is_zero()) return false;
        if (!a[i].is_zero() && num.is_zero()) { num = a[i]; den = b[i]; }
    }
    if (num.is_zero()) return true;
    for (size_t i = 0; i < a.size(); ++i)
        if (!(a[i] * den == b[i] * num)) return false;
    return true;
}

// gauge equivalence of two configurations on the same graph with the same
// boundary: per-vertex scales relate vectors and coefficients
bool gauge_equivalent(const VRC& x, const VRC& y) {
    const PlabicGraph& g = x.graph;
    std::map<int, Rat> t;  // vertex scale, boundary pinned to 1
    for (int v : g.alive_vertices()) {
        if (g.vert(v).boundary_pos > 0) {
            t[v] = Rat(1);
            if (!(x.vectors.at(v) == y.vectors.at(v))) return false;
        } else if (g.vert(v).color == 'b') {
            // v_y = v_x / t
            const auto& a = x.vectors.at(v);
            const auto& b = y.vectors.at(v);
            if (!proportional(a, b)) return false;
            Rat num, den;
            for (size_t i = 0; i < a.size(); ++i)
                if (!a[i].is_zero()) { num = a[i]; den = b[i]; break; }
            t[v] = num / den;
        }
    }
    // white scales from any incident edge, then check all edges
    for (int v : g.alive_vertices()) {
        if (!g.is_internal(v) || g.vert(v).color != 'w') continue;
        int e = g.vert(v).rot[0];
        int b = g.other_end(e, v);
        t[v] = y.coeffs.at(e) / (x.coeffs.at(e) * t.at(b));
    }
    for (int e : g.alive_edges()) {
        int u = g.edge(e).u, v = g.edge(e).v;
        if (!(y.coeffs.at(e) == x.coeffs.at(e) * t.at(u) * t.at(v))) return false;
    }
    return true;
}

}  // namespace

TEST_CASE("star tree with explicit boundary gives unit coefficients") {
    PlabicGraph t = star_tree(4);
    MatQ z(3, 4);
    for (int i = 0; i < 3; ++i) {
        z.at(i, i) = Rat(1);
        z.at(i, 3) = Rat(-1);
    }
    VRC v = build_tree_vrc(t, z);
    CHECK(v.relations_hold());
    // kernel of [e1 e2 e3 -e1-e2-e3] is spanned by (1,1,1,1)
    std::vector<Rat> cs;
    for (const auto& [e, c] : v.coeffs) cs.push_back(c);
    REQUIRE(cs.size() == 4);
    for (const auto& c : cs) CHECK(c == cs[0]);
}

TEST_CASE("spurion relations hold exactly at random boundaries") {
    PlabicGraph t = spurion_tree();
    Rng rng(101);
    for (int trial = 0; trial < 50; ++trial) {
        Rng sub = rng.substream(trial);
        VRC v = build_tree_vrc_random(t, 4, sub);
        CHECK(v.relations_hold());
        CHECK(v.nondegenerate());
    }
}

TEST_CASE("boundary-edge coefficients match the algebraic labels up to sign and gauge") {
    PlabicGraph t = spurion_tree();
    Rng rng(102);
    MatQ z;
    VRC v = build_tree_vrc_random(t, 4, rng, 32, &z);
    for (int w : t.alive_vertices()) {
        if (!t.is_internal(w) || t.vert(w).color != 'w') continue;
        // per white vertex: kernel coefficients vs the wedge-label formulas,
        // squared ratio constant across the boundary edges
        SubspaceLabels lab = subspace_labels(t, w, z);
        Rat ratio2;
        bool have = false;
        for (int e : t.vert(w).rot) {
            int b = t.other_end(e, w);
            if (t.vert(b).boundary_pos == 0) continue;
            Multivector<Rat> prod = Multivector<Rat>::scalar(4, Rat(1));
            int d = t.degree(w);
            int start = t.rot_index(w, e);
            for (int i = 1; i < d; ++i) {
                int e2 = t.vert(w).rot[(start + i) % d];
                prod = wedge(prod, lab.f.at(t.other_end(e2, w)));
            }
            Rat fe = bracket(prod);
            REQUIRE(!fe.is_zero());
            Rat r = v.coeffs.at(e);
            Rat q2 = (r * r) / (fe * fe);
            if (!have) { ratio2 = q2; have = true; }
            else CHECK(q2 == ratio2);
        }
    }
}

TEST_CASE("path reconstruction returns the stored vectors exactly") {
    for (auto tree : {spurion_tree(), star_tree(5)}) {
        int m = (tree.n() == 9) ? 4 : 4;
        Rng rng(103);
        VRC v = build_tree_vrc_random(tree, m, rng);
        Orientation o = find_acyclic_reverse_po(tree);
        auto rec = vectors_from_paths(tree, o, v.boundary(), v.coeffs);
        for (const auto& [b, vec] : v.vectors) {
            REQUIRE(rec.count(b));
            for (size_t i = 0; i < vec.size(); ++i) CHECK(rec.at(b)[i] == vec[i]);
        }
        // gauge at an internal vertex leaves reconstructed boundary unchanged
        VRC vg = v;
        int internal = -1;
        for (int x : tree.alive_vertices())
            if (tree.is_internal(x)) internal = x;
        vg.gauge_at(internal, Rat(7, 3));
        CHECK(vg.relations_hold());
        auto rec2 = vectors_from_paths(tree, o, vg.boundary(), vg.coeffs);
        for (int pos = 1; pos <= tree.n(); ++pos) {
            int b = tree.boundary_vertex(pos);
            for (int i = 0; i < m; ++i) CHECK(rec2.at(b)[i] == rec.at(b)[i]);
        }
    }
}

TEST_CASE("gauge rigidity: perturbed coefficients resolve to a gauge-equivalent configuration") {
    PlabicGraph t = spurion_tree();
    Rng rng(104);
    MatQ z;
    VRC v = build_tree_vrc_random(t, 4, rng, 32, &z);
    VRC w = v;
    for (int x : t.alive_vertices())
        if (t.is_internal(x)) w.gauge_at(x, rng.nonzero_rat(9, 4));
    CHECK(w.relations_hold());
    CHECK(gauge_equivalent(v, w));
    // and rebuilding from the same z gives the same class
    VRC v2 = build_tree_vrc(t, z);
    CHECK(gauge_equivalent(v, v2));
}

TEST_CASE("lift reproduces the boundary in its top rows and spans it") {
    Rng rng(105);
    int idx = 0;
    for (auto [k, m] : std::vector<std::pair<int, int>>{{1, 3}, {1, 4}, {2, 2}, {2, 3}, {3, 2}}) {
        for (const auto& t : generate_amplitrees(k, m, 3)) {
            PlabicGraph bt = to_bipartite_trivalent_black(t);
            Rng sub = rng.substream(idx++);
            MatQ z;
            VRC v = build_tree_vrc_random(bt, m, sub, 32, &z);
            MatQ w = lift_to_big_vrc(bt, v);
            int n = bt.n();
            int big = n - k;
            REQUIRE(w.rows() == big);
            // top m rows reproduce z
            for (int r = 0; r < m; ++r)
                for (int c = 0; c < n; ++c) CHECK(w.at(r, c) == z.at(r, c));
            // containment rank([z;W]) = n-k
            MatQ stacked(m + big, n);
            for (int r = 0; r < m; ++r)
                for (int c = 0; c < n; ++c) stacked.at(r, c) = z.at(r, c);
            for (int r = 0; r < big; ++r)
                for (int c = 0; c < n; ++c) stacked.at(m + r, c) = w.at(r, c);
            CHECK(rank(stacked) == big);
            CHECK(rank(w) == big);
        }
    }
}

TEST_CASE("orthogonal complement of the lift is supported on the positroid bases") {
    Rng rng(106);
    int idx = 0;
    for (auto [k, m] : std::vector<std::pair<int, int>>{{2, 2}, {1, 3}, {3, 2}}) {
        for (const auto& t : generate_amplitrees(k, m, 2)) {
            PlabicGraph bt = to_bipartite_trivalent_black(t);
            Rng sub = rng.substream(idx++);
            VRC v = build_tree_vrc_random(bt, m, sub);
            MatQ w = lift_to_big_vrc(bt, v);
            MatQ c = kernel(w).transpose();  // k x n, rows span the complement
            REQUIRE(c.rows() == k);
            auto bases = positroid_bases(bt);
            // iterate all k-subsets
            std::vector<int> comb(k);
            std::function<void(int, int)> rec = [&](int start, int chosen) {
                if (chosen == k) {
                    std::vector<int> pos;
                    std::vector<int> cols;
                    for (int i = 0; i < k; ++i) {
                        pos.push_back(comb[i] + 1);
                        cols.push_back(comb[i]);
                    }
                    Rat p = plucker(c, cols);
                    if (bases.count(pos)) {
                        CHECK(!p.is_zero());
                    } else {
                        CHECK(p.is_zero());
                    }
                    return;
                }
                for (int i = start; i < bt.n(); ++i) {
                    comb[chosen] = i;
                    rec(i + 1, chosen + 1);
                }
            };
            rec(0, 0);
        }
    }
}

TEST_CASE("non-balanced type trees never admit the construction") {
    Rng rng(107);
    int trees_checked = 0;
    for (auto [k, m] : std::vector<std::pair<int, int>>{{2, 2}, {2, 3}, {3, 2}}) {
        for (const auto& t : generate_type_trees_unbalanced(k, m, 4)) {
            PlabicGraph bt = to_bipartite_trivalent_black(t);
            ++trees_checked;
            for (int trial = 0; trial < 20; ++trial) {
                Rng sub = rng.substream(trees_checked * 100 + trial);
                MatQ z = sub.matrix(m, bt.n());
                CHECK_THROWS(build_tree_vrc(bt, z));
            }
        }
    }
    CHECK(trees_checked >= 10);
}

TEST_CASE("square move transport") {
    // Build a bipartite graph with a square: take the 4-mass box core.
    PlabicGraph g(8);
    std::vector<int> bd(9, -1);
    for (int p = 1; p <= 8; ++p) bd[p] = g.add_boundary(p);
    int nw = g.add_internal('b');
    int ne = g.add_internal('w');
    int se = g.add_internal('b');
    int sw = g.add_internal('w');
    int nw1 = g.add_internal('w');
    int sw2 = g.add_internal('b');
    int sw1 = g.add_internal('w');
    int ne2 = g.add_internal('b');
    int ne1 = g.add_internal('w');
    int ne3 = g.add_internal('b');
    int ne4 = g.add_internal('w');
    int se1 = g.add_internal('w');
    int se3 = g.add_internal('b');
    int se4 = g.add_internal('w');
    g.add_edge(bd[3], nw1);
    g.add_edge(bd[4], nw1);
    g.add_edge(nw1, nw);
    g.add_edge(nw, ne);
    g.add_edge(ne, se);
    g.add_edge(se, sw);
    g.add_edge(sw, nw);
    g.add_edge(sw, sw2);
    g.add_edge(sw2, sw1);
    g.add_edge(bd[5], sw1);
    g.add_edge(bd[6], sw1);
    g.add_edge(ne, ne2);
    g.add_edge(ne2, ne1);
    g.add_edge(bd[2], ne1);
    g.add_edge(ne1, ne3);
    g.add_edge(ne3, ne4);
    g.add_edge(ne4, bd[1]);
    g.add_edge(se, se1);
    g.add_edge(bd[7], se1);
    g.add_edge(se1, se3);
    g.add_edge(se3, se4);
    g.add_edge(se4, bd[8]);

    // A valid configuration on the cycle graph is produced directly: choose
    // generic boundary, pick the branch by solving the quadratic over a
    // rational point where it splits; here instead build it from a solved
    // tree after cutting, so use a simpler synthetic configuration:
    // assign vectors satisfying the relations by explicit solving.
    Rng rng(108);
    for (int trial = 0; trial < 8; ++trial) {
        Rng sub = rng.substream(trial);
        MatQ z = sub.matrix(4, 8, 50, 4);
        // u in span(z3,z4), X = z7 + a z8 with <12 u X> = 0, <56 u X> = 0.
        // Use u = z3 + b z4: two bilinear constraints; solve the quadratic in
        // rationals only if the discriminant is a perfect square, so instead
        // pick u, X first and overwrite z2, z6 to satisfy the constraints.
        std::vector<Rat> u(4), x(4), w(4), y(4);
        for (int i = 0; i < 4; ++i) {
            u[i] = z.at(i, 2) + Rat(2) * z.at(i, 3);       // u = z3 + 2 z4
            x[i] = z.at(i, 6) + Rat(3) * z.at(i, 7);       // X = z7 + 3 z8
        }
        // force z2 into span(z1, u, X) and z6 into span(z5, u, X)
        for (int i = 0; i < 4; ++i) {
            z.at(i, 1) = z.at(i, 0) + u[i] + x[i];
            z.at(i, 5) = z.at(i, 4) + Rat(2) * u[i] - x[i];
        }
        for (int i = 0; i < 4; ++i) {
            w[i] = u[i] + x[i];              // span(1,2) meets span(u,X)
            y[i] = Rat(2) * u[i] - x[i];     // span(5,6) meets span(u,X)
        }

        VRC v;
        v.graph = g;
        v.m = 4;
        for (int p = 1; p <= 8; ++p) v.vectors[bd[p]] = z.col(p - 1);
        v.vectors[nw] = u;
        v.vectors[se] = x;
        v.vectors[ne2] = w;
        v.vectors[sw2] = y;
        std::vector<Rat> z1v = z.col(0), z8v = z.col(7);
        v.vectors[ne3] = z1v;
        v.vectors[se3] = z8v;
        // solve each white relation by kernel
        bool ok = true;
        for (int wv : g.alive_vertices()) {
            if (!g.is_internal(wv) || g.vert(wv).color != 'w') continue;
            const auto& rot = g.vert(wv).rot;
            MatQ nb(4, static_cast<int>(rot.size()));
            for (size_t i = 0; i < rot.size(); ++i) nb.set_col(static_cast<int>(i), v.vectors.at(g.other_end(rot[i], wv)));
            MatQ ker = kernel(nb);
            if (ker.cols() != 1) { ok = false; break; }
            for (size_t i = 0; i < rot.size(); ++i) {
                if (ker.at(static_cast<int>(i), 0).is_zero()) { ok = false; break; }
                v.coeffs[rot[i]] = ker.at(static_cast<int>(i), 0);
            }
        }
        if (!ok) continue;
        REQUIRE(v.relations_hold());

        auto squares = find_square_faces(g);
        REQUIRE(squares.size() == 1);
        VRC moved = transport_square_move(v, squares[0]);
        CHECK(moved.relations_hold());
        CHECK(moved.boundary() == v.boundary());
        // vectors outside the square untouched
        CHECK(moved.vectors.at(ne3) == v.vectors.at(ne3));
        CHECK(moved.vectors.at(se3) == v.vectors.at(se3));
        CHECK(moved.vectors.at(ne2) == v.vectors.at(ne2));

        VRC back = transport_square_move(moved, squares[0]);
        CHECK(back.relations_hold());
        CHECK(back.boundary() == v.boundary());
        // the square's black vertices regain their exact vectors
        CHECK(back.vectors.at(nw) == v.vectors.at(nw));
        CHECK(back.vectors.at(se) == v.vectors.at(se));
    }
}
