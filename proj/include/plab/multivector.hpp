#pragma once

#include <bit>
#include <cstdint>
#include <map>
#include <stdexcept>
#include <vector>

#include "plab/matrix.hpp"

namespace plab {

namespace detail {

// Number of pairs (a, b) with a in A, b in B and a > b; basis indices are bits.
inline int cross_inversions(uint32_t a_mask, uint32_t b_mask) {
    int inv = 0;
    while (b_mask) {
        int b = std::countr_zero(b_mask);
        b_mask &= b_mask - 1;
        inv += std::popcount(a_mask & ~((uint32_t(2) << b) - 1));
    }
    return inv;
}

}  // namespace detail

// Element of the exterior algebra over K^m, stored sparsely as a map from
// strictly increasing index subsets (bit masks) to nonzero coefficients.
// Mixed grades are representable; most products require homogeneous inputs.
template <class K>
class Multivector {
public:
    Multivector() : m_(0) {}
    explicit Multivector(int m) : m_(m) {
        if (m < 0 || m > 31) throw std::invalid_argument("Multivector: ambient dimension out of range");
    }

    static Multivector scalar(int m, K c) {
        Multivector v(m);
        v.add_term(0, std::move(c));
        return v;
    }

    static Multivector basis_vector(int m, int i) {
        Multivector v(m);
        v.add_term(uint32_t(1) << i, K(1));
        return v;
    }

    static Multivector from_vector(int m, const std::vector<K>& coords) {
        if (static_cast<int>(coords.size()) != m) throw std::invalid_argument("Multivector: bad vector length");
        Multivector v(m);
        for (int i = 0; i < m; ++i) v.add_term(uint32_t(1) << i, coords[i]);
        return v;
    }

    int m() const { return m_; }
    const std::map<uint32_t, K>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    // Grade of a homogeneous element; throws on mixed grades. Zero reports -1.
    int grade() const {
        int g = -1;
        for (const auto& [mask, c] : terms_) {
            int pg = std::popcount(mask);
            if (g == -1) g = pg;
            else if (g != pg) throw std::domain_error("Multivector: mixed grades");
        }
        return g;
    }
    bool is_homogeneous() const {
        int g = -1;
        for (const auto& [mask, c] : terms_) {
            int pg = std::popcount(mask);
            if (g == -1) g = pg;
            else if (g != pg) return false;
        }
        return true;
    }

    void add_term(uint32_t mask, K c) {
        if (plab::is_zero(c)) return;
        auto it = terms_.find(mask);
        if (it == terms_.end()) {
            terms_.emplace(mask, std::move(c));
        } else {
            it->second += c;
            if (plab::is_zero(it->second)) terms_.erase(it);
        }
    }

    K coefficient(uint32_t mask) const {
        auto it = terms_.find(mask);
        return it == terms_.end() ? K(0) : it->second;
    }

    // Scalar content of a grade-0 element.
    K as_scalar() const {
        if (terms_.empty()) return K(0);
        if (terms_.size() != 1 || terms_.begin()->first != 0)
            throw std::domain_error("Multivector: not a scalar");
        return terms_.begin()->second;
    }

    // Coordinates of a grade-1 element.
    std::vector<K> as_vector() const {
        std::vector<K> v(m_, K(0));
        for (const auto& [mask, c] : terms_) {
            if (std::popcount(mask) != 1) throw std::domain_error("Multivector: not a vector");
            v[std::countr_zero(mask)] = c;
        }
        return v;
    }

    friend Multivector operator+(const Multivector& x, const Multivector& y) {
        check_same_m(x, y);
        Multivector r = x;
        for (const auto& [mask, c] : y.terms_) r.add_term(mask, c);
        return r;
    }
    friend Multivector operator-(const Multivector& x, const Multivector& y) {
        check_same_m(x, y);
        Multivector r = x;
        for (const auto& [mask, c] : y.terms_) r.add_term(mask, -c);
        return r;
    }
    Multivector operator-() const {
        Multivector r(m_);
        for (const auto& [mask, c] : terms_) r.terms_.emplace(mask, -c);
        return r;
    }
    friend Multivector operator*(const K& s, const Multivector& x) {
        Multivector r(x.m_);
        if (plab::is_zero(s)) return r;
        for (const auto& [mask, c] : x.terms_) r.add_term(mask, s * c);
        return r;
    }

    friend bool operator==(const Multivector& x, const Multivector& y) {
        return x.m_ == y.m_ && (x - y).is_zero();
    }

    static void check_same_m(const Multivector& x, const Multivector& y) {
        if (x.m_ != y.m_) throw std::invalid_argument("Multivector: ambient dimension mismatch");
    }

private:
    int m_;
    std::map<uint32_t, K> terms_;
};

// Exterior product.
template <class K>
Multivector<K> wedge(const Multivector<K>& x, const Multivector<K>& y) {
    Multivector<K>::check_same_m(x, y);
    Multivector<K> r(x.m());
    for (const auto& [ma, ca] : x.terms())
        for (const auto& [mb, cb] : y.terms()) {
            if (ma & mb) continue;
            int inv = detail::cross_inversions(ma, mb);
            K c = ca * cb;
            r.add_term(ma | mb, (inv & 1) ? -c : c);
        }
    return r;
}

template <class K>
Multivector<K> wedge_all(const std::vector<Multivector<K>>& xs, int m) {
    Multivector<K> r = Multivector<K>::scalar(m, K(1));
    for (const auto& x : xs) r = wedge(r, x);
    return r;
}

// Bracket of a top-grade element (the coefficient of e_1 ^ ... ^ e_m);
// scalars pass through unchanged.
template <class K>
K bracket(const Multivector<K>& x) {
    if (x.is_zero()) return K(0);
    int g = x.grade();
    if (g == 0) return x.as_scalar();
    if (g == x.m()) return x.coefficient((uint32_t(1) << x.m()) - 1);
    throw std::domain_error("bracket: element is neither scalar nor top grade");
}

// Shuffle product of homogeneous elements of grades p and q. The result has
// grade p + q - m when that is nonnegative and is zero otherwise; at grade
// zero it is the full bracket of the concatenation.
template <class K>
Multivector<K> shuffle(const Multivector<K>& x, const Multivector<K>& y) {
    Multivector<K>::check_same_m(x, y);
    int m = x.m();
    Multivector<K> r(m);
    if (x.is_zero() || y.is_zero()) return r;
    int p = x.grade(), q = y.grade();
    if (p < 0 || q < 0 || !x.is_homogeneous() || !y.is_homogeneous())
        throw std::domain_error("shuffle: inputs must be homogeneous");
    int s = p + q - m;
    if (s < 0) return r;
    const uint32_t full = (uint32_t(1) << m) - 1;
    for (const auto& [mb, cb] : y.terms()) {
        uint32_t u = full & ~mb;  // the complement must come from x's blade
        for (const auto& [ma, ca] : x.terms()) {
            if ((ma & u) != u) continue;
            uint32_t rest = ma & ~u;
            // sign of the shuffle permutation moving u to the front of ma
            int inv = detail::cross_inversions(u, rest);
            // determinant of the permutation matrix [e_u | e_mb]
            inv += detail::cross_inversions(u, mb);
            K c = ca * cb;
            r.add_term(rest, (inv & 1) ? -c : c);
        }
    }
    return r;
}

template <class K>
Multivector<K> shuffle_all(const std::vector<Multivector<K>>& xs) {
    if (xs.empty()) throw std::invalid_argument("shuffle_all: empty");
    Multivector<K> r = xs[0];
    for (size_t i = 1; i < xs.size(); ++i) r = shuffle(r, xs[i]);
    return r;
}

// Wedge of selected columns of a point matrix.
template <class K>
Multivector<K> column_blade(const Mat<K>& pt, const std::vector<int>& cols) {
    Multivector<K> r = Multivector<K>::scalar(pt.rows(), K(1));
    for (int c : cols) r = wedge(r, Multivector<K>::from_vector(pt.rows(), pt.col(c)));
    return r;
}

// Chain polynomial <A * B * C> on the columns of a point matrix.
template <class K>
K chain(const Mat<K>& pt, const std::vector<int>& a, const std::vector<int>& b, const std::vector<int>& c) {
    int m = pt.rows();
    int i = static_cast<int>(a.size()), j = static_cast<int>(b.size()), k = static_cast<int>(c.size());
    if (i + j < m || i + k < m || j + k < m || i + j + k != 2 * m)
        throw std::invalid_argument("chain: size constraints violated");
    Multivector<K> r = shuffle(shuffle(column_blade(pt, a), column_blade(pt, b)), column_blade(pt, c));
    return bracket(r);
}

}  // namespace plab
