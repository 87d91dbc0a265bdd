#pragma once

#include <stdexcept>
#include <vector>

#include "plab/matrix.hpp"
#include "plab/multivector.hpp"
#include "plab/quadext.hpp"

namespace plab {

struct ZeroLeadingCoefficient : std::runtime_error {
    ZeroLeadingCoefficient() : std::runtime_error("leading coefficient A vanishes") {}
};
struct NegativeDiscriminant : std::runtime_error {
    NegativeDiscriminant() : std::runtime_error("discriminant is not positive") {}
};

// Two-branch substitution attached to the intersection-number-two core on
// columns {1,2,3,4,5,6,7,8}: column 7 moves to X = z7 + alpha z8 where alpha
// solves A a^2 + B a + C = 0, and column 2 moves into span(z1,z2) cap
// span(u, X).
struct FourMassBox {
    int n = 0;
    Rat A, B, C, Delta;

    QuadExt alpha(int branch) const {
        QuadExt root = QuadExt::sqrt_delta(Delta);
        QuadExt num = (branch > 0) ? (QuadExt(-B) + root) : (QuadExt(-B) - root);
        return num / QuadExt(Rat(2) * A);
    }
    QuadExt beta_of_alpha(const Mat<QuadExt>& z, const QuadExt& a) const {
        // from <12 u X> = 0 with u = z3 + beta z4
        auto pl = [&](int i, int j, int k, int l) {
            return plucker(z, {i - 1, j - 1, k - 1, l - 1});
        };
        QuadExt num = pl(1, 2, 3, 7) + a * pl(1, 2, 3, 8);
        QuadExt den = pl(1, 2, 4, 7) + a * pl(1, 2, 4, 8);
        if (den.is_zero()) throw std::domain_error("beta: denominator vanishes");
        return -(num / den);
    }
};

// Y_ij = <12i * 43 * 56j>; A = Y_88, B = Y_78 + Y_87, C = Y_77.
inline FourMassBox four_mass_box_data(const MatQ& z) {
    if (z.rows() != 4 || z.cols() < 8) throw std::invalid_argument("four_mass_box: need a 4 x n matrix, n >= 8");
    FourMassBox fmb;
    fmb.n = z.cols();
    auto y = [&](int i, int j) { return chain(z, {0, 1, i - 1}, {3, 2}, {4, 5, j - 1}); };
    fmb.A = y(8, 8);
    fmb.B = y(7, 8) + y(8, 7);
    fmb.C = y(7, 7);
    fmb.Delta = fmb.B * fmb.B - Rat(4) * fmb.A * fmb.C;
    return fmb;
}

// Substituted point over the quadratic extension: all n columns, with column
// 7 replaced by X and column 2 by (12 * 56X)/<156X>.
inline Mat<QuadExt> four_mass_box_point(const MatQ& z, int branch) {
    FourMassBox fmb = four_mass_box_data(z);
    if (fmb.A.is_zero()) throw ZeroLeadingCoefficient();
    if (fmb.Delta.sign() <= 0) throw NegativeDiscriminant();
    QuadExt a = fmb.alpha(branch);
    Mat<QuadExt> q(4, z.cols());
    for (int r = 0; r < 4; ++r)
        for (int c = 0; c < z.cols(); ++c) q.at(r, c) = QuadExt(z.at(r, c));
    for (int r = 0; r < 4; ++r) q.at(r, 6) = QuadExt(z.at(r, 6)) + a * QuadExt(z.at(r, 7));
    // w = (12 * 56X)/<156X>
    using MV = Multivector<QuadExt>;
    MV one2 = wedge(MV::from_vector(4, q.col(0)), MV::from_vector(4, q.col(1)));
    MV five6x = wedge(wedge(MV::from_vector(4, q.col(4)), MV::from_vector(4, q.col(5))), MV::from_vector(4, q.col(6)));
    QuadExt denom = bracket(wedge(MV::from_vector(4, q.col(0)), five6x));
    if (denom.is_zero()) throw std::domain_error("four_mass_box: <156X> vanishes");
    MV w = shuffle(one2, five6x);
    std::vector<QuadExt> wv = w.as_vector();
    for (int r = 0; r < 4; ++r) q.at(r, 1) = wv[r] / denom;
    return q;
}

}  // namespace plab
