#include "cesaro/algebras.hpp"

#include "cesaro/kernels.hpp"
#include "cesaro/weyl.hpp"
#include "cesaro/zseq.hpp"
#include "support/helpers.hpp"

#include <catch2/catch_amalgamated.hpp>

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <vector>

using cesaro::annihilator_polynomial;
using cesaro::Complex;
using cesaro::convolve;
using cesaro::fourier_coefficients;
using cesaro::kernel_value;
using cesaro::PeriodicFn;
using cesaro::q_bar_norm;
using cesaro::q_norm;
using cesaro::q_norm_split;
using cesaro::submultiplicativity_ratio;
using cesaro::wiener_norm;
using cesaro::ZSeq;
using testsupport::close;
using testsupport::random_zseq;
using testsupport::Rng;

namespace {

const Complex kOne(1.0, 0.0);

// q-bar by its definition, written with raw kernel sums so it shares no
// code with the library implementation.
double q_bar_oracle(const ZSeq& f, double order) {
    if (f.empty())
        return 0.0;
    auto w_plus = [&](std::int64_t n) {
        Complex acc = 0.0;
        for (std::int64_t j = f.hi(); j >= n; --j)
            acc += kernel_value(-order, j - n) * f.at(j);
        return acc;
    };
    auto w_minus = [&](std::int64_t n) {
        Complex acc = 0.0;
        for (std::int64_t j = f.lo(); j <= n; ++j)
            acc += kernel_value(-order, n - j) * f.at(j);
        return acc;
    };
    double total = std::abs(f.at(0));
    const std::int64_t reach = std::max<std::int64_t>(std::llabs(f.lo()), std::llabs(f.hi())) + 1;
    for (std::int64_t n = 1; n <= reach; ++n)
        total += std::pow(static_cast<double>(n), order) *
                 (std::abs(w_minus(-n)) + std::abs(w_plus(n)));
    return total;
}

// Same independent route for q itself.
double q_oracle(const ZSeq& f, double order) {
    if (f.empty())
        return 0.0;
    auto w_plus = [&](std::int64_t n) {
        Complex acc = 0.0;
        for (std::int64_t j = f.hi(); j >= n; --j)
            acc += kernel_value(-order, j - n) * f.at(j);
        return acc;
    };
    auto w_minus = [&](std::int64_t n) {
        Complex acc = 0.0;
        for (std::int64_t j = f.lo(); j <= n; ++j)
            acc += kernel_value(-order, n - j) * f.at(j);
        return acc;
    };
    double total = 0.0;
    const std::int64_t reach = std::max<std::int64_t>(std::llabs(f.lo()), std::llabs(f.hi()));
    for (std::int64_t n = 0; n <= reach; ++n)
        total += kernel_value(order + 1.0, n) * std::abs(w_plus(n));
    for (std::int64_t n = 1; n <= reach; ++n)
        total += kernel_value(order + 1.0, n) * std::abs(w_minus(-n));
    return total;
}

} // namespace

TEST_CASE("q norm spot values") {
    REQUIRE(q_norm(ZSeq::unit(0), 0.0) == 1.0);
    REQUIRE(q_norm(ZSeq::unit(0), 0.5) == 1.0);
    REQUIRE(q_norm(ZSeq::unit(0), 2.5) == 1.0);
    // W^1 e_1 has values (-1, 1) at n = (0, 1): 1*1 + 2*1 = 3.
    REQUIRE(close(q_norm(ZSeq::unit(1), 1.0), 3.0, 1e-15));
    SECTION("order zero is the l1 norm") {
        Rng rng(11);
        for (int trial = 0; trial < 200; ++trial) {
            const ZSeq f = random_zseq(rng, -6, 6);
            REQUIRE(close(q_norm(f, 0.0), f.l1_norm(), 1e-14));
        }
    }
    SECTION("agrees with the independent oracle") {
        Rng rng(12);
        for (double order : {0.0, 0.5, 1.0, 2.2}) {
            for (int trial = 0; trial < 100; ++trial) {
                const ZSeq f = random_zseq(rng, -5, 5);
                REQUIRE(close(q_norm(f, order), q_oracle(f, order), 1e-11));
            }
        }
    }
    SECTION("negative order is rejected") {
        REQUIRE_THROWS_AS(q_norm(ZSeq::unit(0), -0.5), std::invalid_argument);
    }
}

TEST_CASE("q norm split halves") {
    SECTION("one-sided masses land in one half") {
        const auto [m0, p0] = q_norm_split(ZSeq::unit(-1), 0.0);
        REQUIRE(m0 == 1.0);
        REQUIRE(p0 == 0.0);
        const auto [m1, p1] = q_norm_split(ZSeq::unit(0), 2.0);
        REQUIRE(m1 == 0.0);
        REQUIRE(p1 == 1.0);
    }
    SECTION("halves add up to the norm") {
        Rng rng(13);
        for (double order : {0.0, 0.7, 1.5}) {
            for (int trial = 0; trial < 200; ++trial) {
                const ZSeq f = random_zseq(rng, -4, 4);
                const auto [minus, plus] = q_norm_split(f, order);
                REQUIRE(std::abs(minus + plus - q_norm(f, order)) <= 1e-12);
            }
        }
    }
}

TEST_CASE("q norm axioms") {
    Rng rng(14);
    for (double order : {0.0, 0.5, 1.0, 2.5}) {
        for (int trial = 0; trial < 150; ++trial) {
            const ZSeq f = random_zseq(rng, -5, 5);
            const ZSeq g = random_zseq(rng, -5, 5);
            const Complex c = rng.unit_square();
            // homogeneity
            REQUIRE(close(q_norm(c * f, order), std::abs(c) * q_norm(f, order), 1e-12));
            // triangle inequality
            REQUIRE(q_norm(f + g, order) <=
                    q_norm(f, order) + q_norm(g, order) + 1e-12);
            // definiteness: nonzero sequences have positive norm
            REQUIRE(q_norm(f, order) > 0.0);
        }
    }
    REQUIRE(q_norm(ZSeq(), 1.0) == 0.0);
}

TEST_CASE("q norms are monotone in the order and tend to l1") {
    Rng rng(15);
    SECTION("pairwise monotone") {
        const std::vector<double> orders = {0.0, 0.01, 0.1, 0.5, 1.0, 2.5};
        for (int trial = 0; trial < 300; ++trial) {
            const ZSeq f = random_zseq(rng, -6, 6);
            for (std::size_t i = 0; i < orders.size(); ++i)
                for (std::size_t j = i + 1; j < orders.size(); ++j) {
                    INFO("orders " << orders[i] << " <= " << orders[j]);
                    REQUIRE(q_norm(f, orders[i]) <= q_norm(f, orders[j]) * (1.0 + 1e-10));
                }
        }
    }
    SECTION("the sweep decreases to the l1 norm") {
        for (int trial = 0; trial < 100; ++trial) {
            const ZSeq f = random_zseq(rng, -6, 6);
            const double l1 = f.l1_norm();
            double previous_gap = 1e300;
            for (double order : {1.0, 0.5, 0.1, 0.01}) {
                const double gap = q_norm(f, order) - l1;
                REQUIRE(gap >= -1e-12);
                REQUIRE(gap <= previous_gap * (1.0 + 1e-12));
                previous_gap = gap;
            }
            REQUIRE(previous_gap <= 0.2 * (1.0 + l1));
        }
    }
}

TEST_CASE("q-bar norm") {
    SECTION("spot values by definition") {
        REQUIRE(q_bar_norm(ZSeq::unit(0), 1.0) == 1.0);
        // For e_1 at order 1: |f(0)| = 0, the only surviving term is
        // n = 1 with weight 1^1 and |W_+^1 e_1(1)| = 1.
        REQUIRE(close(q_bar_norm(ZSeq::unit(1), 1.0), 1.0, 1e-15));
        REQUIRE(close(q_bar_norm(ZSeq::unit(1), 1.0), q_bar_oracle(ZSeq::unit(1), 1.0), 1e-15));
    }
    SECTION("agrees with the independent oracle") {
        Rng rng(16);
        for (double order : {0.5, 1.0, 2.0}) {
            for (int trial = 0; trial < 150; ++trial) {
                const ZSeq f = random_zseq(rng, -5, 5);
                REQUIRE(close(q_bar_norm(f, order), q_bar_oracle(f, order), 1e-11));
            }
        }
    }
    SECTION("equivalent to q: ratio bounded above and below") {
        Rng rng(17);
        for (double order : {0.5, 1.0, 2.0}) {
            double lo = 1e300;
            double hi = 0.0;
            for (int trial = 0; trial < 500; ++trial) {
                const ZSeq f = random_zseq(rng, -6, 6);
                const double ratio = q_bar_norm(f, order) / q_norm(f, order);
                lo = std::min(lo, ratio);
                hi = std::max(hi, ratio);
            }
            INFO("order " << order << " ratio range [" << lo << ", " << hi << "]");
            REQUIRE(lo >= 0.05);
            REQUIRE(hi <= 20.0);
        }
    }
    SECTION("requires a positive order") {
        REQUIRE_THROWS_AS(q_bar_norm(ZSeq::unit(0), 0.0), std::invalid_argument);
    }
}

TEST_CASE("Korenblyum-style probe: fast-decaying analytic coefficients stay bounded") {
    // Coefficients j^{-(order+2)}: both the power-weighted coefficient sum
    // and q-bar of growing truncations saturate instead of growing.
    for (double order : {0.5, 1.5}) {
        double previous = -1.0;
        double last_increment = 1e300;
        for (std::int64_t truncation : {8, 16, 32, 64, 128, 256, 512}) {
            std::vector<Complex> values(static_cast<std::size_t>(truncation));
            for (std::int64_t j = 1; j <= truncation; ++j)
                values[static_cast<std::size_t>(j - 1)] =
                    std::pow(static_cast<double>(j), -(order + 2.0));
            const ZSeq f(1, std::move(values));
            double weighted = 0.0;
            for (std::int64_t j = 1; j <= truncation; ++j)
                weighted += std::pow(static_cast<double>(j), order) * std::abs(f.at(j));
            REQUIRE(weighted <= 1.65); // below zeta(2)
            const double value = q_bar_norm(f, order);
            REQUIRE(value >= 1.0);
            REQUIRE(value <= 1.5);
            if (previous >= 0.0)
                last_increment = std::abs(value - previous);
            previous = value;
        }
        REQUIRE(last_increment <= 1e-3);
    }
}

TEST_CASE("periodic functions and the Wiener norm") {
    SECTION("evaluation reproduces the finite Fourier sum") {
        const PeriodicFn fn{ZSeq(-1, {Complex(2.0, 0.0), kOne, Complex(0.0, 1.0)})};
        const double t = 0.7;
        const Complex want = Complex(2.0, 0.0) * std::exp(Complex(0.0, -t)) + kOne +
                             Complex(0.0, 1.0) * std::exp(Complex(0.0, t));
        REQUIRE(close(fn.eval(t), want, 1e-15));
        REQUIRE_FALSE(fn.analytic());
        REQUIRE(PeriodicFn{ZSeq::unit(0)}.analytic());
        REQUIRE(PeriodicFn{ZSeq()}.analytic());
    }
    SECTION("spot norms") {
        REQUIRE(wiener_norm(PeriodicFn{ZSeq::unit(0)}, 0.5) == 1.0);
        // e^{it} - 1 at order 0: plain l1 of the coefficients.
        const ZSeq diff = ZSeq::unit(1) - ZSeq::unit(0);
        REQUIRE(close(wiener_norm(PeriodicFn{diff}, 0.0), 2.0, 1e-15));
        const ZSeq sum = ZSeq::unit(1) + ZSeq::unit(0);
        REQUIRE(wiener_norm(PeriodicFn{sum}, 1.0) == q_norm(sum, 1.0));
    }
    SECTION("sup norm is dominated by every Wiener norm") {
        Rng rng(18);
        for (int trial = 0; trial < 50; ++trial) {
            const PeriodicFn fn{random_zseq(rng, -5, 5)};
            double sup = 0.0;
            for (int k = 0; k < 256; ++k)
                sup = std::max(sup,
                               std::abs(fn.eval(2.0 * std::numbers::pi * k / 256.0)));
            const double w0 = wiener_norm(fn, 0.0);
            REQUIRE(sup <= w0 * (1.0 + 1e-12));
            for (double order : {0.5, 1.5})
                REQUIRE(w0 <= wiener_norm(fn, order) * (1.0 + 1e-10));
        }
    }
}

TEST_CASE("Fourier coefficients from uniform samples") {
    auto sample = [](const PeriodicFn& fn, std::int64_t m) {
        std::vector<Complex> samples(static_cast<std::size_t>(m));
        for (std::int64_t k = 0; k < m; ++k)
            samples[static_cast<std::size_t>(k)] =
                fn.eval(2.0 * std::numbers::pi * static_cast<double>(k) / static_cast<double>(m));
        return samples;
    };
    SECTION("pure harmonic") {
        const auto samples = sample(PeriodicFn{ZSeq::unit(1)}, 8);
        const ZSeq coeffs = fourier_coefficients(samples, 2);
        REQUIRE(cesaro::max_abs_diff(coeffs, ZSeq::unit(1)) <= 1e-12);
    }
    SECTION("constant plus harmonic") {
        const auto samples = sample(PeriodicFn{ZSeq::unit(0) + ZSeq::unit(1)}, 8);
        const ZSeq coeffs = fourier_coefficients(samples, 2);
        REQUIRE(cesaro::max_abs_diff(coeffs, ZSeq::unit(0) + ZSeq::unit(1)) <= 1e-12);
    }
    SECTION("decaying trigonometric polynomial round trip") {
        std::vector<Complex> values(5);
        for (std::int64_t n = 1; n <= 5; ++n)
            values[static_cast<std::size_t>(n - 1)] = std::pow(static_cast<double>(n), -3.0);
        const ZSeq truth(1, std::move(values));
        const auto samples = sample(PeriodicFn{truth}, 64);
        REQUIRE(cesaro::max_abs_diff(fourier_coefficients(samples, 8), truth) <= 1e-12);
    }
    SECTION("random band-limited functions round trip") {
        Rng rng(19);
        for (int trial = 0; trial < 50; ++trial) {
            const ZSeq truth = random_zseq(rng, -5, 5);
            const auto samples = sample(PeriodicFn{truth}, 32);
            REQUIRE(cesaro::max_abs_diff(fourier_coefficients(samples, 6), truth) <= 1e-11);
        }
    }
    SECTION("too few samples for the band is an aliasing error") {
        const std::vector<Complex> four(4, kOne);
        REQUIRE_THROWS_AS(fourier_coefficients(four, 2), std::invalid_argument);
    }
}

TEST_CASE("submultiplicativity of the weighted norms") {
    SECTION("the convolution unit gives ratio 1") {
        REQUIRE(submultiplicativity_ratio(ZSeq::unit(0), ZSeq::unit(0), 1.0) == 1.0);
    }
    SECTION("deltas at order zero give ratio 1") {
        REQUIRE(close(submultiplicativity_ratio(ZSeq::unit(1), ZSeq::unit(1), 0.0), 1.0, 1e-14));
    }
    SECTION("the constant can exceed 1: (e_0+e_1) squared at order 1") {
        // q(f) = 2, q(f*f) = 6, so the ratio is exactly 1.5.
        const ZSeq f = ZSeq::unit(0) + ZSeq::unit(1);
        REQUIRE(close(submultiplicativity_ratio(f, f, 1.0), 1.5, 1e-13));
    }
    SECTION("finite and stable over a random sweep") {
        for (double order : {0.5, 1.0, 2.5}) {
            Rng rng(20);
            double worst = 0.0;
            for (int trial = 0; trial < 500; ++trial) {
                const ZSeq f = random_zseq(rng, -6, 6);
                const ZSeq g = random_zseq(rng, -6, 6);
                worst = std::max(worst, submultiplicativity_ratio(f, g, order));
            }
            INFO("order " << order << " worst ratio " << worst);
            REQUIRE(std::isfinite(worst));
            REQUIRE(worst <= 4.0);
        }
    }
    SECTION("zero inputs are rejected") {
        REQUIRE_THROWS_AS(submultiplicativity_ratio(ZSeq(), ZSeq::unit(0), 1.0),
                          std::invalid_argument);
        REQUIRE_THROWS_AS(submultiplicativity_ratio(ZSeq::unit(0), ZSeq(), 1.0),
                          std::invalid_argument);
    }
}

TEST_CASE("annihilator polynomials") {
    SECTION("single root at 1") {
        const PeriodicFn fn = annihilator_polynomial(std::vector<Complex>{kOne});
        REQUIRE(fn.coeffs == ZSeq::unit(1) - ZSeq::unit(0));
        REQUIRE(fn.analytic());
    }
    SECTION("single root at -1") {
        const PeriodicFn fn = annihilator_polynomial(std::vector<Complex>{Complex(-1.0, 0.0)});
        REQUIRE(fn.coeffs == ZSeq::unit(1) + ZSeq::unit(0));
    }
    SECTION("roots at 1 and -1 expand to z^2 - 1") {
        const PeriodicFn fn =
            annihilator_polynomial(std::vector<Complex>{kOne, Complex(-1.0, 0.0)});
        REQUIRE(fn.coeffs == ZSeq::unit(2) - ZSeq::unit(0));
    }
    SECTION("vanishes exactly at the requested points") {
        Rng rng(21);
        for (int trial = 0; trial < 50; ++trial) {
            std::vector<Complex> roots;
            const std::int64_t count = rng.uniform_int(1, 4);
            std::vector<double> args;
            for (std::int64_t i = 0; i < count; ++i) {
                const double t = rng.uniform(0.0, 2.0 * std::numbers::pi);
                args.push_back(t);
                roots.push_back(std::exp(Complex(0.0, t)));
            }
            const PeriodicFn fn = annihilator_polynomial(roots);
            REQUIRE(fn.analytic());
            for (double t : args)
                REQUIRE(std::abs(fn.eval(t)) <= 1e-12 * (1.0 + fn.coeffs.l1_norm()));
        }
    }
    SECTION("off-circle points are rejected") {
        REQUIRE_THROWS_AS(annihilator_polynomial(std::vector<Complex>{Complex(0.9, 0.0)}),
                          std::invalid_argument);
        REQUIRE_THROWS_AS(annihilator_polynomial(std::vector<Complex>{Complex(1.1, 0.0)}),
                          std::invalid_argument);
    }
}
