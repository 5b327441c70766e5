#pragma once

#include <complex>
#include <cstdint>
#include <span>
#include <vector>

// Cesàro kernels k^a, defined for every real order a by
//
//     k^a(0) = 1,   k^a(n) = a(a+1)...(a+n-1) / n!   (n >= 1),
//
// evaluated through the product recurrence
//
//     k^a(n+1) = k^a(n) * (a + n) / (n + 1),
//
// which is exact for integer orders (k^1 == 1, k^0 == delta_0, and k^{-m}
// terminates after m+1 entries) and stable for fractional ones.  These
// weights drive every fractional difference, weighted norm and Cesàro mean
// in the library.

namespace cesaro {

/// Kernel values k^order(0..n_max) computed once via the product recurrence.
class KernelTable {
public:
    KernelTable(double order, std::int64_t n_max);

    double order() const { return order_; }
    std::int64_t n_max() const { return static_cast<std::int64_t>(values_.size()) - 1; }

    /// k^order(n) for 0 <= n <= n_max().
    double operator[](std::int64_t n) const { return values_[static_cast<std::size_t>(n)]; }

    std::span<const double> values() const { return values_; }

private:
    double order_;
    std::vector<double> values_;
};

/// Single kernel value k^order(n), n >= 0.
double kernel_value(double order, std::int64_t n);

/// Table of k^order(0..n_max); adjacent entries satisfy the product
/// recurrence bit-for-bit.
KernelTable kernel_table(double order, std::int64_t n_max);

/// k^order(n) * Gamma(order) * n^(1-order), which tends to 1 as n grows.
/// The only place the library touches the Gamma function.  Rejects
/// order in {0, -1, -2, ...} (Gamma poles) and n < 1.
double kernel_asymptotic_ratio(double order, std::int64_t n);

/// Partial sum sum_{n=0}^{n_terms} k^order(n) z^n of the generating
/// function (1-z)^(-order).  Rejects |z| >= 1.
std::complex<double> kernel_generating_partial(double order, std::complex<double> z,
                                               std::int64_t n_terms);

/// k^order(2n) / k^order(n) for order > 0, n >= 1; approaches 2^(order-1).
double kernel_doubling_ratio(double order, std::int64_t n);

} // namespace cesaro
