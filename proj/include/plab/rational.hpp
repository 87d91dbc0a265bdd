#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>
#include <string>

namespace plab {

// Exact rational scalar. Always canonical: lowest terms, positive denominator.
class Rat {
public:
    Rat() : q_(0) {}
    Rat(long v) : q_(static_cast<signed long>(v)) {}
    Rat(int v) : q_(static_cast<signed long>(v)) {}
    Rat(long num, long den) : q_(static_cast<signed long>(num), static_cast<signed long>(den)) {
        if (den == 0) throw std::invalid_argument("Rat: zero denominator");
        q_.canonicalize();
    }
    explicit Rat(const mpq_class& q) : q_(q) { q_.canonicalize(); }
    explicit Rat(const std::string& s) : q_(s) { q_.canonicalize(); }

    const mpq_class& raw() const { return q_; }

    Rat operator-() const { return Rat(mpq_class(-q_), NoCanon{}); }
    Rat& operator+=(const Rat& o) { q_ += o.q_; return *this; }
    Rat& operator-=(const Rat& o) { q_ -= o.q_; return *this; }
    Rat& operator*=(const Rat& o) { q_ *= o.q_; return *this; }
    Rat& operator/=(const Rat& o) {
        if (o.is_zero()) throw std::domain_error("Rat: division by zero");
        q_ /= o.q_;
        return *this;
    }

    friend Rat operator+(Rat a, const Rat& b) { a += b; return a; }
    friend Rat operator-(Rat a, const Rat& b) { a -= b; return a; }
    friend Rat operator*(Rat a, const Rat& b) { a *= b; return a; }
    friend Rat operator/(Rat a, const Rat& b) { a /= b; return a; }

    friend bool operator==(const Rat& a, const Rat& b) { return a.q_ == b.q_; }
    friend bool operator!=(const Rat& a, const Rat& b) { return a.q_ != b.q_; }
    friend bool operator<(const Rat& a, const Rat& b) { return a.q_ < b.q_; }
    friend bool operator<=(const Rat& a, const Rat& b) { return a.q_ <= b.q_; }
    friend bool operator>(const Rat& a, const Rat& b) { return a.q_ > b.q_; }
    friend bool operator>=(const Rat& a, const Rat& b) { return a.q_ >= b.q_; }

    bool is_zero() const { return sgn(q_) == 0; }
    int sign() const { return sgn(q_); }
    Rat abs() const { return sign() < 0 ? -*this : *this; }
    Rat inv() const {
        if (is_zero()) throw std::domain_error("Rat: inverse of zero");
        return Rat(mpq_class(1) / q_, NoCanon{});
    }
    Rat square() const { return *this * *this; }

    mpz_class num() const { return q_.get_num(); }
    mpz_class den() const { return q_.get_den(); }

    // Serialized as "p" for integers and "p/q" otherwise.
    std::string str() const {
        if (q_.get_den() == 1) return q_.get_num().get_str();
        return q_.get_num().get_str() + "/" + q_.get_den().get_str();
    }
    static Rat parse(const std::string& s) { return Rat(s); }

private:
    struct NoCanon {};
    Rat(mpq_class q, NoCanon) : q_(std::move(q)) {}
    mpq_class q_;
};

inline bool is_zero(const Rat& x) { return x.is_zero(); }
inline Rat rat_pow(Rat base, long e) {
    if (e < 0) { base = base.inv(); e = -e; }
    Rat r(1);
    while (e > 0) {
        if (e & 1) r *= base;
        base *= base;
        e >>= 1;
    }
    return r;
}

}  // namespace plab
