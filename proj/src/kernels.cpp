#include "cesaro/kernels.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace cesaro {

namespace {

void require_nonnegative_index(std::int64_t n) {
    if (n < 0)
        throw std::invalid_argument("kernel index must be >= 0, got " + std::to_string(n));
}

bool is_nonpositive_integer(double order) {
    return order <= 0.0 && order == std::floor(order);
}

} // namespace

KernelTable::KernelTable(double order, std::int64_t n_max) : order_(order) {
    require_nonnegative_index(n_max);
    values_.resize(static_cast<std::size_t>(n_max) + 1);
    values_[0] = 1.0;
    for (std::int64_t n = 0; n < n_max; ++n) {
        const auto i = static_cast<std::size_t>(n);
        values_[i + 1] = values_[i] * (order + static_cast<double>(n)) / static_cast<double>(n + 1);
    }
}

double kernel_value(double order, std::int64_t n) {
    require_nonnegative_index(n);
    double v = 1.0;
    for (std::int64_t i = 0; i < n; ++i)
        v = v * (order + static_cast<double>(i)) / static_cast<double>(i + 1);
    return v;
}

KernelTable kernel_table(double order, std::int64_t n_max) {
    return KernelTable(order, n_max);
}

double kernel_asymptotic_ratio(double order, std::int64_t n) {
    if (is_nonpositive_integer(order))
        throw std::invalid_argument("kernel_asymptotic_ratio: order " + std::to_string(order) +
                                    " is a Gamma pole");
    if (n < 1)
        throw std::invalid_argument("kernel_asymptotic_ratio: n must be >= 1");
    const double nd = static_cast<double>(n);
    return kernel_value(order, n) * std::tgamma(order) * std::pow(nd, 1.0 - order);
}

std::complex<double> kernel_generating_partial(double order, std::complex<double> z,
                                               std::int64_t n_terms) {
    require_nonnegative_index(n_terms);
    if (std::abs(z) >= 1.0)
        throw std::invalid_argument("kernel_generating_partial: |z| must be < 1");
    std::complex<double> acc = 1.0; // n = 0 term
    std::complex<double> zp = 1.0;
    double k = 1.0;
    for (std::int64_t n = 0; n < n_terms; ++n) {
        k = k * (order + static_cast<double>(n)) / static_cast<double>(n + 1);
        zp *= z;
        acc += k * zp;
    }
    return acc;
}

double kernel_doubling_ratio(double order, std::int64_t n) {
    if (!(order > 0.0))
        throw std::invalid_argument("kernel_doubling_ratio: order must be > 0");
    if (n < 1)
        throw std::invalid_argument("kernel_doubling_ratio: n must be >= 1");
    // k^order > 0 throughout for positive orders, so the quotient is safe.
    double half = 1.0;
    double full = 1.0;
    for (std::int64_t i = 0; i < 2 * n; ++i) {
        full = full * (order + static_cast<double>(i)) / static_cast<double>(i + 1);
        if (i < n)
            half = full;
    }
    return full / half;
}

} // namespace cesaro
