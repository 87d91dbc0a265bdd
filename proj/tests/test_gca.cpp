#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "plab/bracket_expr.hpp"
#include "plab/multivector.hpp"
#include "plab/rng.hpp"

using namespace plab;

namespace {

using MV = Multivector<Rat>;

MV vec(const std::vector<long>& v) {
    std::vector<Rat> r;
    for (long x : v) r.push_back(Rat(x));
    return MV::from_vector(static_cast<int>(v.size()), r);
}

MV random_vector(Rng& rng, int m) {
    std::vector<Rat> v;
    for (int i = 0; i < m; ++i) v.push_back(rng.rat(20, 3));
    return MV::from_vector(m, v);
}

// decomposable grade-g element together with its factors
std::pair<MV, std::vector<std::vector<Rat>>> random_decomposable(Rng& rng, int m, int g) {
    MV r = MV::scalar(m, Rat(1));
    std::vector<std::vector<Rat>> factors;
    for (int i = 0; i < g; ++i) {
        MV v = random_vector(rng, m);
        factors.push_back(v.as_vector());
        r = wedge(r, v);
    }
    return {r, factors};
}

// Shuffle of decomposables straight from the definition: sum over subsets of
// the a-factors of size m-q with the shuffle sign and an explicit determinant.
MV shuffle_bruteforce(int m, const std::vector<std::vector<Rat>>& as, const std::vector<std::vector<Rat>>& bs) {
    int p = static_cast<int>(as.size()), q = static_cast<int>(bs.size());
    int s = p + q - m;
    MV out(m);
    if (s < 0) return out;
    std::vector<int> idx(p);
    for (int i = 0; i < p; ++i) idx[i] = i;
    // iterate over all subsets of [p] of size m-q via combinations
    std::vector<int> comb(m - q);
    std::function<void(int, int)> rec = [&](int start, int chosen) {
        if (chosen == m - q) {
            std::vector<char> in(p, 0);
            for (int c : comb) in[c] = 1;
            // sign(w): inversions between chosen (ascending) and the rest
            int inv = 0;
            for (int c : comb)
                for (int j = 0; j < c; ++j)
                    if (!in[j]) ++inv;
            MatQ det_cols(m, m);
            int col = 0;
            for (int c : comb) det_cols.set_col(col++, as[c]);
            for (const auto& b : bs) det_cols.set_col(col++, b);
            Rat d = det(det_cols);
            MV tail = MV::scalar(m, Rat(1));
            for (int j = 0; j < p; ++j)
                if (!in[j]) tail = wedge(tail, MV::from_vector(m, as[j]));
            MV term = (inv % 2 ? -d : d) * tail;
            out = out + term;
            return;
        }
        for (int i = start; i < p; ++i) {
            comb[chosen] = i;
            rec(i + 1, chosen + 1);
        }
    };
    if (m - q <= p) rec(0, 0);
    return out;
}

}  // namespace

TEST_CASE("wedge basics") {
    MV e1 = MV::basis_vector(3, 0), e2 = MV::basis_vector(3, 1);
    CHECK(wedge(e1, e1).is_zero());
    CHECK(wedge(e1, e2) == -wedge(e2, e1));
    CHECK(wedge(e1 + e2, e2) == wedge(e1, e2));
}

TEST_CASE("wedge is zero exactly when spans intersect") {
    Rng rng(3);
    for (int t = 0; t < 50; ++t) {
        auto [a, af] = random_decomposable(rng, 4, 2);
        auto [b, bf] = random_decomposable(rng, 4, 2);
        if (a.is_zero() || b.is_zero()) continue;
        MatQ all(4, 4);
        for (int i = 0; i < 2; ++i) all.set_col(i, af[i]);
        for (int i = 0; i < 2; ++i) all.set_col(2 + i, bf[i]);
        bool disjoint = rank(all) == 4;
        CHECK(wedge(a, b).is_zero() == !disjoint);
    }
}

TEST_CASE("shuffle matches the brute-force definition") {
    Rng rng(5);
    for (int m = 3; m <= 5; ++m) {
        for (int t = 0; t < 40; ++t) {
            int p = 1 + static_cast<int>(rng.uniform_int(0, m - 1));
            int q = 1 + static_cast<int>(rng.uniform_int(0, m - 1));
            auto [a, af] = random_decomposable(rng, m, p);
            auto [b, bf] = random_decomposable(rng, m, q);
            CHECK(shuffle(a, b) == shuffle_bruteforce(m, af, bf));
        }
    }
}

TEST_CASE("shuffle degenerate and scalar cases") {
    Rng rng(6);
    // p + q < m gives zero
    auto [a, af] = random_decomposable(rng, 4, 1);
    auto [b, bf] = random_decomposable(rng, 4, 2);
    CHECK(shuffle(a, b).is_zero());
    // p + q == m gives the full bracket
    auto [c, cf] = random_decomposable(rng, 4, 2);
    auto [d, df] = random_decomposable(rng, 4, 2);
    MatQ mat(4, 4);
    mat.set_col(0, cf[0]);
    mat.set_col(1, cf[1]);
    mat.set_col(2, df[0]);
    mat.set_col(3, df[1]);
    MV s = shuffle(c, d);
    CHECK(s.grade() <= 0);
    CHECK(bracket(s) == det(mat));
    // scalar * top-grade multiplies by the bracket
    MV top = wedge(wedge(vec({1, 0, 0, 0}), vec({0, 1, 0, 0})), wedge(vec({0, 0, 1, 0}), vec({0, 0, 0, 2})));
    CHECK(shuffle(MV::scalar(4, Rat(3)), top).as_scalar() == Rat(6));
    CHECK(shuffle(top, MV::scalar(4, Rat(3))).as_scalar() == Rat(6));
}

TEST_CASE("chain polynomial: paper m=3 expansion and associativity") {
    Rng rng(8);
    // <A*B*C> with |A|=|B|=|C|=2 equals <a1 b1 b2><a2 c1 c2> - <a2 b1 b2><a1 c1 c2>
    for (int t = 0; t < 25; ++t) {
        MatQ z = rng.matrix(3, 6, 15, 2);
        Rat lhs = chain(z, {0, 1}, {2, 3}, {4, 5});
        Rat rhs = plucker(z, {0, 2, 3}) * plucker(z, {1, 4, 5}) - plucker(z, {1, 2, 3}) * plucker(z, {0, 4, 5});
        CHECK(lhs == rhs);
        // two associations agree
        MV a = column_blade(z, {0, 1}), b = column_blade(z, {2, 3}), c = column_blade(z, {4, 5});
        CHECK(shuffle(shuffle(a, b), c) == shuffle(a, shuffle(b, c)));
    }
    // repeated column inside one set vanishes
    MatQ z = rng.matrix(3, 6, 15, 2);
    CHECK(chain(z, {0, 0}, {2, 3}, {4, 5}).is_zero());
    CHECK_THROWS(chain(z, {0}, {2, 3}, {4, 5}));
}

TEST_CASE("shuffle associativity and swap sign on random homogeneous elements") {
    Rng rng(9);
    int checked = 0;
    for (int m = 3; m <= 6; ++m) {
        for (int t = 0; t < 60; ++t) {
            int p = 1 + static_cast<int>(rng.uniform_int(0, m - 1));
            int q = 1 + static_cast<int>(rng.uniform_int(0, m - 1));
            int r = 1 + static_cast<int>(rng.uniform_int(0, m - 1));
            auto [a, af] = random_decomposable(rng, m, p);
            auto [b, bf] = random_decomposable(rng, m, q);
            auto [c, cf] = random_decomposable(rng, m, r);
            CHECK(shuffle(shuffle(a, b), c) == shuffle(a, shuffle(b, c)));
            MV ba = shuffle(b, a);
            MV ab = shuffle(a, b);
            int sign = ((m - p) * (m - q)) % 2;
            CHECK(ab == (sign ? -ba : ba));
            ++checked;
        }
    }
    CHECK(checked >= 200);
}

TEST_CASE("signed sum of omitted-factor shuffles vanishes") {
    // For decomposables A_1..A_p with total degree m+1:
    // sum_i (-1)^{d_i (d_i + ... + d_p)} (A_1 ^ ... ^ A_i-hat ^ ... ^ A_p) * A_i = 0
    Rng rng(10);
    int checked = 0;
    for (int m = 3; m <= 6; ++m) {
        for (int p = 2; p <= 4; ++p) {
            for (int trial = 0; trial < 30; ++trial) {
                // compositions of m+1 into p positive parts, sampled
                std::vector<int> d(p, 1);
                int rem = m + 1 - p;
                for (int i = 0; i < rem; ++i) d[rng.uniform_int(0, p - 1)]++;
                std::vector<MV> a;
                bool bad = false;
                for (int i = 0; i < p; ++i) {
                    auto [x, xf] = random_decomposable(rng, m, d[i]);
                    if (x.is_zero()) bad = true;
                    a.push_back(x);
                }
                if (bad) continue;
                MV total(m);
                for (int i = 0; i < p; ++i) {
                    MV rest = MV::scalar(m, Rat(1));
                    for (int j = 0; j < p; ++j)
                        if (j != i) rest = wedge(rest, a[j]);
                    int exp = 0;
                    for (int j = i; j < p; ++j) exp += d[j];
                    exp *= d[i];
                    MV term = shuffle(rest, a[i]);
                    total = total + ((exp % 2) ? -term : term);
                }
                CHECK(total.is_zero());
                ++checked;
            }
        }
    }
    CHECK(checked >= 200);
}

TEST_CASE("shuffle and wedge realize intersections and sums of subspaces") {
    Rng rng(12);
    int checked = 0;
    for (int m = 3; m <= 6; ++m) {
        for (int t = 0; t < 30; ++t) {
            int p = 1 + static_cast<int>(rng.uniform_int(0, m - 1));
            int q = 1 + static_cast<int>(rng.uniform_int(0, m - 1));
            if (p + q <= m) continue;  // want a nontrivial generic intersection
            auto [a, af] = random_decomposable(rng, m, p);
            auto [b, bf] = random_decomposable(rng, m, q);
            if (a.is_zero() || b.is_zero()) continue;
            // generic position: spans must sum to everything
            MatQ all(m, p + q);
            for (int i = 0; i < p; ++i) all.set_col(i, af[i]);
            for (int i = 0; i < q; ++i) all.set_col(p + i, bf[i]);
            if (rank(all) != m) continue;
            MV meet = shuffle(a, b);
            int s = p + q - m;
            REQUIRE(!meet.is_zero());
            CHECK(meet.grade() == s);
            // the intersection subspace computed by exact linear algebra:
            // solutions of x in span(a) and x in span(b)
            MatQ sys(m, p + q);
            for (int i = 0; i < p; ++i) sys.set_col(i, af[i]);
            for (int i = 0; i < q; ++i) {
                std::vector<Rat> neg = bf[i];
                for (auto& x : neg) x = -x;
                sys.set_col(p + i, neg);
            }
            MatQ ker = kernel(sys);
            REQUIRE(ker.cols() == s);
            std::vector<std::vector<Rat>> basis;
            for (int c = 0; c < ker.cols(); ++c) {
                std::vector<Rat> x(m, Rat(0));
                for (int i = 0; i < p; ++i)
                    for (int r = 0; r < m; ++r) x[r] += ker.at(i, c) * af[i][r];
                basis.push_back(x);
            }
            MV inter = MV::scalar(m, Rat(1));
            for (auto& x : basis) inter = wedge(inter, MV::from_vector(m, x));
            REQUIRE(!inter.is_zero());
            // meet represents the same subspace: wedging with each basis vector kills it
            for (auto& x : basis) CHECK(wedge(meet, MV::from_vector(m, x)).is_zero());
            // and the two decomposables are proportional
            MV cross = wedge(meet, inter);
            CHECK(cross.is_zero());
            ++checked;
        }
    }
    CHECK(checked >= 40);
}

TEST_CASE("bracket expression parsing, printing and evaluation") {
    // <1^2^3^4> at the identity-prefix matrix evaluates to 1
    MatQ z = MatQ::identity(4);
    Point<Rat> pt = Point<Rat>::from_matrix(z, {"1", "2", "3", "4"});
    ExprPtr e = parse_expr("<1^2^3^4>");
    CHECK(eval_scalar(e, pt) == Rat(1));

    ExprPtr round = parse_expr(print_expr(e));
    CHECK(eval_scalar(round, pt) == Rat(1));

    Rng rng(21);
    MatQ w = rng.matrix(4, 9, 20, 3);
    Point<Rat> pw = Point<Rat>::from_matrix(w, index_labels(9));
    // spurion frozen factor: <(1^3)*(4^5^6)*(7^8^9)> equals the chain value
    ExprPtr f2 = parse_expr("<(1^3)*(4^5^6)*(7^8^9)>");
    CHECK(eval_scalar(f2, pw) == chain(w, {0, 2}, {3, 4, 5}, {6, 7, 8}));

    // compositional evaluation: quotients, sums, products
    ExprPtr x = parse_expr("<1^2^3^4>.<5^6^7^8> - <1^2^3^5>.<4^6^7^8>");
    Rat expect = plucker(w, {0, 1, 2, 3}) * plucker(w, {4, 5, 6, 7}) - plucker(w, {0, 1, 2, 4}) * plucker(w, {3, 5, 6, 7});
    CHECK(eval_scalar(x, pw) == expect);

    ExprPtr q = parse_expr("<1^2^3^4>/<1^2^3^5>");
    CHECK(eval_scalar(q, pw) == plucker(w, {0, 1, 2, 3}) / plucker(w, {0, 1, 2, 4}));

    // division by zero carries a path
    MatQ zz(4, 9);
    Point<Rat> pz = Point<Rat>::from_matrix(zz, index_labels(9));
    CHECK_THROWS_AS(eval_scalar(q, pz), EvalError);

    // integer literals need more than one digit; single digits are columns
    ExprPtr lit = parse_expr("12/10");
    Point<Rat> empty;
    empty.m = 4;
    CHECK(eval_scalar(lit, empty) == Rat(6, 5));
}

TEST_CASE("evaluation over the quadratic extension") {
    Rat delta(3);
    Mat<QuadExt> z(2, 2);
    z.at(0, 0) = QuadExt(Rat(1));
    z.at(1, 0) = QuadExt(Rat(0), Rat(1), delta);
    z.at(0, 1) = QuadExt(Rat(1), Rat(-1), delta);
    z.at(1, 1) = QuadExt(Rat(2));
    Point<QuadExt> pt = Point<QuadExt>::from_matrix(z, {"1", "2"});
    ExprPtr e = parse_expr("<1^2>");
    // det = 1*2 - s(1-s) = 2 - s + 3 = 5 - s
    CHECK(eval_scalar(e, pt) == QuadExt(Rat(5), Rat(-1), delta));
}
