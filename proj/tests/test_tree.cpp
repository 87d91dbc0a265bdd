#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <set>

#include "plab/amplitree_enum.hpp"
#include "plab/moves.hpp"
#include "plab/orientation.hpp"
#include "plab/plane_tree.hpp"
#include "plab/rng.hpp"

using namespace plab;

namespace {

PlabicGraph star_tree(int n) {
    PlabicGraph g(n);
    int w = g.add_internal('w');
    for (int pos = 1; pos <= n; ++pos) g.add_edge(w, g.add_boundary(pos));
    return g;
}

// (t1, t2, t3)-chain tree: white(t1) - black - white(t3) backbone with a
// pendant white(t2) on the black vertex.
PlabicGraph chain_tree_333() {
    PlabicGraph g(9);
    int c = g.add_internal('b');
    int w1 = g.add_internal('w');
    int w2 = g.add_internal('w');
    int w3 = g.add_internal('w');
    g.add_edge(w1, c);
    g.add_edge(c, w2);
    g.add_edge(c, w3);
    for (int j = 1; j <= 3; ++j) g.add_edge(w1, g.add_boundary(j));
    for (int j = 4; j <= 6; ++j) g.add_edge(w2, g.add_boundary(j));
    for (int j = 7; j <= 9; ++j) g.add_edge(w3, g.add_boundary(j));
    return g;
}

// (3,3,1,3,3)-chain tree for k = 3, n = 13.
PlabicGraph chain_tree_33133() {
    PlabicGraph g(13);
    int b1 = g.add_internal('b');
    int b2 = g.add_internal('b');
    int w1 = g.add_internal('w');
    int w2 = g.add_internal('w');
    int w3 = g.add_internal('w');
    int w4 = g.add_internal('w');
    int w5 = g.add_internal('w');
    g.add_edge(w1, b1);
    g.add_edge(b1, w3);
    g.add_edge(w3, b2);
    g.add_edge(b2, w5);
    g.add_edge(b1, w2);
    g.add_edge(b2, w4);
    for (int j = 1; j <= 3; ++j) g.add_edge(w1, g.add_boundary(j));
    for (int j = 4; j <= 6; ++j) g.add_edge(w2, g.add_boundary(j));
    g.add_edge(w3, g.add_boundary(7));
    for (int j = 8; j <= 10; ++j) g.add_edge(w4, g.add_boundary(j));
    for (int j = 11; j <= 13; ++j) g.add_edge(w5, g.add_boundary(j));
    return g;
}

}  // namespace

TEST_CASE("k statistic") {
    CHECK(k_statistic(star_tree(4)) == 1);
    CHECK(k_statistic(chain_tree_333()) == 2);
    CHECK(k_statistic(chain_tree_33133()) == 3);
}

TEST_CASE("balance checks") {
    // spurion is 4-balanced
    CHECK(is_m_balanced(chain_tree_333(), 4).balanced);
    // (3,3,1,3,3)-chain tree is a (3,4)-amplitree
    CHECK(is_m_balanced(chain_tree_33133(), 4).balanced);
    // star tree is m-balanced for its own m
    for (int m = 1; m <= 5; ++m) CHECK(is_m_balanced(star_tree(m + 1), m).balanced);

    // k=2, m=2, n=5 caterpillar with one white vertex carrying 4 leaves fails
    PlabicGraph bad(5);
    int w1 = bad.add_internal('w');
    int b = bad.add_internal('b');
    int w2 = bad.add_internal('w');
    bad.add_edge(w1, b);
    bad.add_edge(b, w2);
    for (int j = 1; j <= 4; ++j) bad.add_edge(w1, bad.add_boundary(j));
    bad.add_edge(w2, bad.add_boundary(5));
    // colors make this type (2,5)? black is bivalent: k = 1. adjust: use a
    // black of degree 3 to hold k = 2.
    // Rebuild: white with 4 leaves - black(3) - two whites with one leaf? n=5:
    PlabicGraph bad2(5);
    int c = bad2.add_internal('b');
    int u1 = bad2.add_internal('w');
    int u2 = bad2.add_internal('w');
    int u3 = bad2.add_internal('w');
    bad2.add_edge(c, u1);
    bad2.add_edge(c, u2);
    bad2.add_edge(c, u3);
    for (int j = 1; j <= 3; ++j) bad2.add_edge(u1, bad2.add_boundary(j));
    bad2.add_edge(u2, bad2.add_boundary(4));
    bad2.add_edge(u3, bad2.add_boundary(5));
    CHECK(k_statistic(bad2) == 2);
    auto rep = is_m_balanced(bad2, 2);
    CHECK_FALSE(rep.balanced);
    CHECK(rep.witness_edge >= 0);

    // wrong boundary count throws
    CHECK_THROWS_AS(is_m_balanced(star_tree(4), 4), WrongBoundaryCount);
}

TEST_CASE("canonicalization is a confluent fixed point") {
    Rng rng(17);
    PlabicGraph t = chain_tree_33133();
    PlabicGraph canon = canonicalize_tree(t);
    CHECK(encode_plane_tree(canonicalize_tree(canon)) == encode_plane_tree(canon));

    // insert a bivalent white mid-edge and re-canonicalize
    for (int trial = 0; trial < 10; ++trial) {
        PlabicGraph g = t;
        auto edges = g.alive_edges();
        int e = edges[rng.uniform_int(0, static_cast<int>(edges.size()) - 1)];
        int u = g.edge(e).u;
        char c = g.vert(u).color == 'w' ? 'b' : 'w';
        // insert a pair so colors stay proper, then dissolve in random order
        int mid = insert_bivalent(g, e, c);
        insert_bivalent(g, g.vert(mid).rot[0], c == 'w' ? 'b' : 'w');
        CHECK(encode_plane_tree(canonicalize_tree(g)) == encode_plane_tree(canon));
    }
}

TEST_CASE("bipartite trivalent-black form preserves statistics") {
    for (PlabicGraph t : {chain_tree_333(), chain_tree_33133(), star_tree(5)}) {
        PlabicGraph b = to_bipartite_trivalent_black(t);
        CHECK(k_statistic(b) == k_statistic(t));
        for (int v : b.alive_vertices()) {
            if (!b.is_internal(v)) continue;
            if (b.vert(v).color == 'b') CHECK(b.degree(v) <= 3);
            for (int u : b.neighbors(v))
                if (b.is_internal(u)) CHECK(b.vert(u).color != b.vert(v).color);
        }
        CHECK(encode_plane_tree(canonicalize_tree(b)) == encode_plane_tree(canonicalize_tree(t)));
    }
    // spurion in canonical bipartite form has one internal black (k = 2)
    PlabicGraph sp = to_bipartite_trivalent_black(canonicalize_tree(chain_tree_333()));
    int blacks = 0;
    for (int v : sp.alive_vertices())
        if (sp.is_internal(v) && sp.vert(v).color == 'b') ++blacks;
    CHECK(blacks == k_statistic(sp) - 1);
}

TEST_CASE("amplitree counts reproduce the reference table") {
    // k = 1 column
    for (int m = 1; m <= 6; ++m) CHECK(count_amplitrees(1, m) == 1);
    // k = 2 column: square pyramidal numbers
    std::vector<unsigned long long> k2 = {1, 5, 14, 30, 55, 91};
    for (int m = 1; m <= 6; ++m) CHECK(count_amplitrees(2, m) == k2[m - 1]);
    // k = 3 column
    std::vector<unsigned long long> k3 = {1, 35, 280, 1274, 4228, 11438};
    for (int m = 1; m <= 6; ++m) CHECK(count_amplitrees(3, m) == k3[m - 1]);
    // m = 1 row
    for (int k = 1; k <= 5; ++k) CHECK(count_amplitrees(k, 1) == 1);
    // spot checks from the k = 4 and k = 5 columns
    CHECK(count_amplitrees(4, 2) == 285);
    CHECK(count_amplitrees(5, 2) == 2530);
}

TEST_CASE("closed forms, recurrence, generating functions") {
    CHECK(k2_closed_form_check(6));
    CHECK(k2_recurrence_check(6));
    CHECK(k2_gf_check(6));
    CHECK(k3_gf_check(6));
    // the naive x^m convention disagrees already at m=1
    CHECK_FALSE(k2_gf_naive_convention_check(1));
    CHECK(k2_gf_coefficient(1) == 5);
    CHECK(k3_gf_coefficient(1) == 35);
}

TEST_CASE("generated amplitrees are canonical, typed and balanced") {
    for (auto [k, m] : std::vector<std::pair<int, int>>{{1, 3}, {2, 2}, {2, 3}, {3, 2}}) {
        auto trees = generate_amplitrees(k, m);
        CHECK(trees.size() == count_amplitrees(k, m));
        std::set<std::string> encodings;
        for (const auto& t : trees) {
            t.validate();
            CHECK(is_forest(t));
            CHECK(k_statistic(t) == k);
            CHECK(t.n() == k * m + 1);
            CHECK(is_m_balanced(t, m).balanced);
            // canonical: internal degrees >= 3, proper coloring
            for (int v : t.alive_vertices()) {
                if (!t.is_internal(v)) continue;
                CHECK(t.degree(v) >= 3);
                for (int u : t.neighbors(v))
                    if (t.is_internal(u)) CHECK(t.vert(u).color != t.vert(v).color);
            }
            CHECK(encode_plane_tree(canonicalize_tree(t)) == encode_plane_tree(t));
            encodings.insert(encode_plane_tree(t));
        }
        CHECK(encodings.size() == trees.size());
    }
}

TEST_CASE("balance is invariant under canonical moves") {
    for (auto [k, m] : std::vector<std::pair<int, int>>{{2, 2}, {2, 3}, {3, 2}}) {
        auto trees = generate_amplitrees(k, m, 10);
        for (const auto& t : trees) {
            PlabicGraph b = to_bipartite_trivalent_black(t);
            CHECK(is_m_balanced(b, m).balanced == is_m_balanced(t, m).balanced);
        }
        for (const auto& t : generate_type_trees_unbalanced(k, m, 5)) {
            PlabicGraph b = to_bipartite_trivalent_black(t);
            CHECK_FALSE(is_m_balanced(b, m).balanced);
        }
    }
}

TEST_CASE("unbalanced type trees exist and fail balance") {
    auto bad = generate_type_trees_unbalanced(2, 2);
    CHECK(!bad.empty());
    for (const auto& t : bad) {
        CHECK(k_statistic(t) == 2);
        CHECK(t.n() == 5);
        CHECK_FALSE(is_m_balanced(t, 2).balanced);
    }
}
