#include "cesaro/weyl.hpp"

#include "cesaro/kernels.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>
#include <vector>

namespace cesaro {

namespace {

// sum_{j >= n} k^{korder}(j-n) f(j), accumulated from j = hi downward.
Complex kernel_sum_plus(const ZSeq& f, double korder, std::int64_t n) {
    if (f.empty() || n > f.hi())
        return {};
    const std::int64_t jlo = std::max(n, f.lo());
    const KernelTable k(korder, f.hi() - n);
    Complex acc = 0.0;
    for (std::int64_t j = f.hi(); j >= jlo; --j)
        acc += k[j - n] * f.at(j);
    return acc;
}

// sum_{j <= n} k^{korder}(n-j) f(j), accumulated from j = lo upward.
Complex kernel_sum_minus(const ZSeq& f, double korder, std::int64_t n) {
    if (f.empty() || n < f.lo())
        return {};
    const std::int64_t jhi = std::min(n, f.hi());
    const KernelTable k(korder, n - f.lo());
    Complex acc = 0.0;
    for (std::int64_t j = f.lo(); j <= jhi; ++j)
        acc += k[n - j] * f.at(j);
    return acc;
}

void require_positive_order(double order, const char* who) {
    if (!(order > 0.0))
        throw std::invalid_argument(std::string(who) + ": order must be > 0");
}

} // namespace

Complex weyl_sum_plus_at(const ZSeq& f, double order, std::int64_t n) {
    require_positive_order(order, "weyl_sum_plus_at");
    return kernel_sum_plus(f, order, n);
}

Complex weyl_sum_minus_at(const ZSeq& f, double order, std::int64_t n) {
    require_positive_order(order, "weyl_sum_minus_at");
    return kernel_sum_minus(f, order, n);
}

Complex weyl_diff_plus_at(const ZSeq& f, double order, std::int64_t n) {
    return kernel_sum_plus(f, -order, n);
}

Complex weyl_diff_minus_at(const ZSeq& f, double order, std::int64_t n) {
    return kernel_sum_minus(f, -order, n);
}

Complex weyl_diff_plus_via_composition(const ZSeq& f, double order, std::int64_t n) {
    if (!(order > 0.0) || order == std::floor(order))
        throw std::invalid_argument(
            "weyl_diff_plus_via_composition: order must be positive and non-integer");
    const std::int64_t m = static_cast<std::int64_t>(std::floor(order)) + 1;
    const double frac = static_cast<double>(m) - order; // in (0, 1)
    // Integer forward difference of order m applied to the order-frac sum:
    // sum_{j=0}^{m} (-1)^j binom(m, j) g(n + j).
    Complex acc = 0.0;
    double binom = 1.0;
    for (std::int64_t j = 0; j <= m; ++j) {
        const double sign = (j % 2 == 0) ? 1.0 : -1.0;
        acc += sign * binom * weyl_sum_plus_at(f, frac, n + j);
        binom = binom * static_cast<double>(m - j) / static_cast<double>(j + 1);
    }
    return acc;
}

ZSeq weyl_combined(const ZSeq& f, double order) {
    if (f.empty())
        return {};
    const std::int64_t lo = std::min<std::int64_t>(f.lo(), 0);
    const std::int64_t hi = std::max<std::int64_t>(f.hi(), 0);
    std::vector<Complex> values(static_cast<std::size_t>(hi - lo + 1));
    for (std::int64_t n = lo; n <= hi; ++n)
        values[static_cast<std::size_t>(n - lo)] =
            n >= 0 ? weyl_diff_plus_at(f, order, n) : weyl_diff_minus_at(f, order, n);
    return ZSeq(lo, std::move(values));
}

} // namespace cesaro
