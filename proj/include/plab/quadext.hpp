#pragma once

#include <stdexcept>
#include <string>

#include "plab/rational.hpp"

namespace plab {

// Element a + b*sqrt(delta) of a real quadratic extension of the rationals.
// delta is a shared positive rational per computation context; values with
// b == 0 are plain rationals and carry no delta of their own.
class QuadExt {
public:
    QuadExt() : a_(0), b_(0), delta_(0) {}
    QuadExt(long v) : a_(v), b_(0), delta_(0) {}
    QuadExt(int v) : a_(v), b_(0), delta_(0) {}
    QuadExt(Rat v) : a_(std::move(v)), b_(0), delta_(0) {}
    QuadExt(Rat a, Rat b, Rat delta) : a_(std::move(a)), b_(std::move(b)), delta_(std::move(delta)) {
        if (!b_.is_zero() && delta_.sign() <= 0)
            throw std::invalid_argument("QuadExt: delta must be positive");
        if (b_.is_zero()) delta_ = Rat(0);
    }

    static QuadExt sqrt_delta(const Rat& delta) { return QuadExt(Rat(0), Rat(1), delta); }

    const Rat& a() const { return a_; }
    const Rat& b() const { return b_; }
    const Rat& delta() const { return delta_; }

    bool is_zero() const { return a_.is_zero() && b_.is_zero(); }
    bool is_rational() const { return b_.is_zero(); }

    QuadExt operator-() const { return QuadExt(-a_, -b_, delta_, NoCheck{}); }
    QuadExt conj() const { return QuadExt(a_, -b_, delta_, NoCheck{}); }

    friend QuadExt operator+(const QuadExt& x, const QuadExt& y) {
        Rat d = merge_delta(x, y);
        return QuadExt(x.a_ + y.a_, x.b_ + y.b_, d).normalized();
    }
    friend QuadExt operator-(const QuadExt& x, const QuadExt& y) { return x + (-y); }
    friend QuadExt operator*(const QuadExt& x, const QuadExt& y) {
        Rat d = merge_delta(x, y);
        Rat a = x.a_ * y.a_ + x.b_ * y.b_ * d;
        Rat b = x.a_ * y.b_ + x.b_ * y.a_;
        return QuadExt(std::move(a), std::move(b), std::move(d)).normalized();
    }
    friend QuadExt operator/(const QuadExt& x, const QuadExt& y) {
        if (y.is_zero()) throw std::domain_error("QuadExt: division by zero");
        Rat d = merge_delta(x, y);
        Rat nrm = y.a_ * y.a_ - y.b_ * y.b_ * d;
        if (nrm.is_zero()) throw std::domain_error("QuadExt: non-invertible divisor (delta is a square)");
        QuadExt num = x * y.conj_with(d);
        return QuadExt(num.a_ / nrm, num.b_ / nrm, d).normalized();
    }

    QuadExt& operator+=(const QuadExt& o) { *this = *this + o; return *this; }
    QuadExt& operator-=(const QuadExt& o) { *this = *this - o; return *this; }
    QuadExt& operator*=(const QuadExt& o) { *this = *this * o; return *this; }
    QuadExt& operator/=(const QuadExt& o) { *this = *this / o; return *this; }

    friend bool operator==(const QuadExt& x, const QuadExt& y) { return (x - y).is_zero(); }
    friend bool operator!=(const QuadExt& x, const QuadExt& y) { return !(x == y); }

    // Exact sign of a + b*sqrt(delta) as a real number.
    int sign() const {
        int sa = a_.sign(), sb = b_.sign();
        if (sb == 0) return sa;
        if (sa == 0) return sb;
        if (sa == sb) return sa;
        // Opposite signs: compare a^2 against b^2 * delta.
        Rat lhs = a_ * a_, rhs = b_ * b_ * delta_;
        if (lhs == rhs) return 0;
        return (lhs > rhs) ? sa : sb;
    }

    std::string str() const {
        if (b_.is_zero()) return a_.str();
        return a_.str() + " + (" + b_.str() + ")*sqrt(" + delta_.str() + ")";
    }

private:
    struct NoCheck {};
    QuadExt(Rat a, Rat b, Rat delta, NoCheck) : a_(std::move(a)), b_(std::move(b)), delta_(std::move(delta)) {
        if (b_.is_zero()) delta_ = Rat(0);
    }
    QuadExt conj_with(const Rat& d) const { return QuadExt(a_, -b_, d, NoCheck{}); }
    QuadExt normalized() const { return *this; }

    static Rat merge_delta(const QuadExt& x, const QuadExt& y) {
        if (x.b_.is_zero()) return y.delta_;
        if (y.b_.is_zero()) return x.delta_;
        if (x.delta_ != y.delta_) throw std::invalid_argument("QuadExt: mixed deltas");
        return x.delta_;
    }

    Rat a_, b_, delta_;
};

inline bool is_zero(const QuadExt& x) { return x.is_zero(); }

// Sign of x decided exactly; see QuadExt::sign for the case analysis.
inline int quad_sign(const QuadExt& x) { return x.sign(); }

}  // namespace plab
