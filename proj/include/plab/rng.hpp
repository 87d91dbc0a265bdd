#pragma once

#include <cstdint>
#include <random>
#include <stdexcept>
#include <vector>

#include "plab/matrix.hpp"
#include "plab/rational.hpp"

namespace plab {

// Deterministic RNG for exact samples. Substream construction gives
// reproducible per-sample streams independent of iteration order.
class Rng {
public:
    explicit Rng(uint64_t seed) : eng_(seed), seed_(seed) {}

    Rng substream(uint64_t index) const {
        std::seed_seq seq{seed_, index, uint64_t(0x9e3779b97f4a7c15ull)};
        std::mt19937_64 e(seq);
        return Rng(e, seed_ * 0x100000001b3ull + index);
    }

    uint64_t next_u64() { return eng_(); }

    long uniform_int(long lo, long hi) {
        std::uniform_int_distribution<long> d(lo, hi);
        return d(eng_);
    }

    // Random rational with numerator in [-num_bound, num_bound] and
    // denominator in [1, den_bound].
    Rat rat(long num_bound = 10000, long den_bound = 8) {
        return Rat(uniform_int(-num_bound, num_bound), uniform_int(1, den_bound));
    }

    Rat nonzero_rat(long num_bound = 10000, long den_bound = 8) {
        for (int i = 0; i < 1000; ++i) {
            Rat r = rat(num_bound, den_bound);
            if (!r.is_zero()) return r;
        }
        throw std::runtime_error("Rng: failed to draw a nonzero rational");
    }

    Rat positive_rat(long num_bound = 10000, long den_bound = 8) {
        return Rat(uniform_int(1, num_bound), uniform_int(1, den_bound));
    }

    MatQ matrix(int rows, int cols, long num_bound = 10000, long den_bound = 8) {
        MatQ m(rows, cols);
        for (int r = 0; r < rows; ++r)
            for (int c = 0; c < cols; ++c) m.at(r, c) = rat(num_bound, den_bound);
        return m;
    }

    // Strictly increasing positive rationals, for moment-curve sampling.
    std::vector<Rat> increasing_positive(int count, long num_bound = 200, long den_bound = 8) {
        std::vector<Rat> t;
        Rat cur(0);
        for (int i = 0; i < count; ++i) {
            cur += Rat(uniform_int(1, num_bound), uniform_int(1, den_bound));
            t.push_back(cur);
        }
        return t;
    }

private:
    Rng(std::mt19937_64 e, uint64_t seed) : eng_(e), seed_(seed) {}
    std::mt19937_64 eng_;
    uint64_t seed_;
};

// Draws fresh samples until `ok` accepts one; throws after `cap` attempts.
template <class Sample, class Ok>
auto redraw_until(Rng& rng, int cap, Sample sample, Ok ok) {
    for (int attempt = 0; attempt < cap; ++attempt) {
        auto s = sample(rng);
        if (ok(s)) return s;
    }
    throw std::runtime_error("redraw_until: retry cap exceeded");
}

}  // namespace plab
