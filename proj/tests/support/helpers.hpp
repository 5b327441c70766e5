#pragma once

#include "cesaro/zseq.hpp"

#include <cmath>
#include <cstdint>
#include <vector>

// Shared helpers for the test binaries: a deterministic generator (so
// failures reproduce), tolerant comparisons with a unit floor, and a
// log-domain kernel oracle independent of the product recurrence.

namespace testsupport {

using cesaro::Complex;
using cesaro::ZSeq;

// splitmix64; all randomness in the tests flows through fixed seeds.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next() {
        state_ += 0x9e3779b97f4a7c15ull;
        std::uint64_t z = state_;
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
        return z ^ (z >> 31);
    }

    /// Uniform in [0, 1).
    double uniform() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

    /// Uniform in [lo, hi).
    double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

    /// Uniform integer in [lo, hi] (inclusive).
    std::int64_t uniform_int(std::int64_t lo, std::int64_t hi) {
        return lo + static_cast<std::int64_t>(next() % static_cast<std::uint64_t>(hi - lo + 1));
    }

    Complex unit_square() { return {uniform(-1.0, 1.0), uniform(-1.0, 1.0)}; }

private:
    std::uint64_t state_;
};

/// |a - b| <= tol * max(floor, |a|, |b|): relative comparison with a floor
/// so exact zeros do not blow it up.
inline bool close(double a, double b, double tol, double floor = 1.0) {
    return std::abs(a - b) <= tol * std::max({floor, std::abs(a), std::abs(b)});
}

inline bool close(Complex a, Complex b, double tol, double floor = 1.0) {
    return std::abs(a - b) <= tol * std::max({floor, std::abs(a), std::abs(b)});
}

/// Random finitely supported sequence with window inside [lo_min, hi_max]
/// and at least one entry; entries from the complex unit square.
inline ZSeq random_zseq(Rng& rng, std::int64_t lo_min, std::int64_t hi_max,
                        std::int64_t max_len = 8) {
    const std::int64_t lo = rng.uniform_int(lo_min, hi_max);
    const std::int64_t len =
        std::min<std::int64_t>(rng.uniform_int(1, max_len), hi_max - lo + 1);
    std::vector<Complex> values(static_cast<std::size_t>(len));
    for (auto& v : values)
        v = rng.unit_square();
    // Guarantee a nonzero sequence even if the generator ever returned 0.
    if (values[0] == Complex{})
        values[0] = Complex(1.0, 0.0);
    return ZSeq(lo, std::move(values));
}

/// Kernel value k^order(n) through logarithms: sign from counting negative
/// factors of order, order+1, ..., order+n-1, magnitude from log-sums.
/// Independent of the product recurrence the library uses.
inline double kernel_oracle(double order, std::int64_t n) {
    if (n == 0)
        return 1.0;
    double log_mag = 0.0;
    int negatives = 0;
    for (std::int64_t i = 0; i < n; ++i) {
        const double factor = order + static_cast<double>(i);
        if (factor == 0.0)
            return 0.0;
        if (factor < 0.0)
            ++negatives;
        log_mag += std::log(std::abs(factor));
    }
    for (std::int64_t i = 1; i <= n; ++i)
        log_mag -= std::log(static_cast<double>(i));
    const double sign = negatives % 2 == 0 ? 1.0 : -1.0;
    return sign * std::exp(log_mag);
}

} // namespace testsupport
