#include "cesaro/algebras.hpp"

#include "cesaro/kernels.hpp"
#include "cesaro/weyl.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>
#include <vector>

namespace cesaro {

Complex PeriodicFn::eval(double t) const {
    Complex acc = 0.0;
    if (coeffs.empty())
        return acc;
    for (std::int64_t n = coeffs.lo(); n <= coeffs.hi(); ++n)
        acc += coeffs.at(n) * std::exp(Complex(0.0, static_cast<double>(n) * t));
    return acc;
}

namespace {

void require_nonnegative_order(double order, const char* who) {
    if (!(order >= 0.0))
        throw std::invalid_argument(std::string(who) + ": order must be >= 0");
}

} // namespace

std::pair<double, double> q_norm_split(const ZSeq& f, double order) {
    require_nonnegative_order(order, "q_norm_split");
    const ZSeq w = weyl_combined(f, order);
    if (w.empty())
        return {0.0, 0.0};
    const std::int64_t reach = std::max<std::int64_t>(-w.lo(), w.hi());
    const KernelTable weight(order + 1.0, reach);
    double minus = 0.0;
    double plus = 0.0;
    for (std::int64_t n = w.lo(); n <= w.hi(); ++n) {
        const double term = weight[n < 0 ? -n : n] * std::abs(w.at(n));
        (n < 0 ? minus : plus) += term;
    }
    return {minus, plus};
}

double q_norm(const ZSeq& f, double order) {
    const auto [minus, plus] = q_norm_split(f, order);
    return minus + plus;
}

double q_bar_norm(const ZSeq& f, double order) {
    if (!(order > 0.0))
        throw std::invalid_argument("q_bar_norm: order must be > 0");
    const ZSeq w = weyl_combined(f, order);
    double acc = std::abs(f.at(0));
    if (w.empty())
        return acc;
    const std::int64_t reach = std::max<std::int64_t>(-w.lo(), w.hi());
    for (std::int64_t n = 1; n <= reach; ++n)
        acc += std::pow(static_cast<double>(n), order) * (std::abs(w.at(n)) + std::abs(w.at(-n)));
    return acc;
}

double wiener_norm(const PeriodicFn& fn, double order) { return q_norm(fn.coeffs, order); }

ZSeq fourier_coefficients(std::span<const Complex> samples, std::int64_t band) {
    if (band < 0)
        throw std::invalid_argument("fourier_coefficients: band must be >= 0");
    const std::int64_t m = static_cast<std::int64_t>(samples.size());
    if (m < 2 * band + 1)
        throw std::invalid_argument("fourier_coefficients: " + std::to_string(m) +
                                    " samples cannot resolve band " + std::to_string(band) +
                                    " (need >= " + std::to_string(2 * band + 1) +
                                    "; frequencies would alias)");
    std::vector<Complex> values(static_cast<std::size_t>(2 * band + 1));
    for (std::int64_t n = -band; n <= band; ++n) {
        Complex acc = 0.0;
        for (std::int64_t k = 0; k < m; ++k) {
            const double t = 2.0 * std::numbers::pi * static_cast<double>(k) / static_cast<double>(m);
            acc += samples[static_cast<std::size_t>(k)] *
                   std::exp(Complex(0.0, -static_cast<double>(n) * t));
        }
        values[static_cast<std::size_t>(n + band)] = acc / static_cast<double>(m);
    }
    return ZSeq(-band, std::move(values));
}

double submultiplicativity_ratio(const ZSeq& f, const ZSeq& g, double order) {
    require_nonnegative_order(order, "submultiplicativity_ratio");
    if (f.empty() || g.empty())
        throw std::invalid_argument("submultiplicativity_ratio: inputs must be nonzero");
    return q_norm(convolve(f, g), order) / (q_norm(f, order) * q_norm(g, order));
}

PeriodicFn annihilator_polynomial(std::span<const Complex> points) {
    for (Complex p : points)
        if (std::abs(std::abs(p) - 1.0) > 1e-8)
            throw std::invalid_argument("annihilator_polynomial: point off the unit circle");
    std::vector<Complex> coeffs{Complex(1.0, 0.0)};
    for (Complex p : points) {
        std::vector<Complex> next(coeffs.size() + 1);
        for (std::size_t j = 0; j < coeffs.size(); ++j) {
            next[j + 1] += coeffs[j];     // z * coeffs
            next[j] -= p * coeffs[j];     // -lambda * coeffs
        }
        coeffs = std::move(next);
    }
    return PeriodicFn{ZSeq(0, std::move(coeffs))};
}

} // namespace cesaro
