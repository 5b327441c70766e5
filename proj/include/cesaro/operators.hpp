#pragma once

#include "cesaro/zseq.hpp"

#include <Eigen/Dense>

#include <cstdint>
#include <vector>

// Cesàro sums and means of the power orbit of a dense complex matrix:
//
//     S^a(n) = sum_{j=0}^{n} k^a(n-j) T^j,      M^a(n) = S^a(n) / k^{a+1}(n).
//
// Order 0 gives back the powers themselves, order 1 the classical partial
// sums and arithmetic means.  T is "(C,a)-bounded" when sup_n ||M^a(n)|| is
// finite; the probes below estimate that and the companion power-growth
// quantity ||T^n|| / k^{a+1}(n) at desk scale.

namespace cesaro {

using CMatrix = Eigen::MatrixXcd;

/// T^n by repeated multiplication; n >= 0.
CMatrix matrix_power(const CMatrix& t, std::int64_t n);

/// Operator (spectral) norm via power iteration on T*T with a fixed
/// deterministic start vector, run to relative tolerance 1e-12 on the
/// Rayleigh quotient and capped at 20000 iterations (NumericError beyond).
double operator_norm(const CMatrix& t);

/// max |eigenvalue|; every eigenpair is residual-checked to 1e-8 and a
/// failure raises NumericError.
double spectral_radius(const CMatrix& t);

/// Eigenvalues within tol of the unit circle, deduplicated within tol and
/// sorted by (re, im).
std::vector<Complex> peripheral_spectrum(const CMatrix& t, double tol);

/// Power orbit of a fixed matrix with its Cesàro sums of a fixed order,
/// cached up to a requested index.  Caches grow monotonically and are
/// filled up-front by prepare(); the accessors never allocate.
class CesaroTransform {
public:
    /// Requires a square matrix with finite entries and order >= 0.
    CesaroTransform(CMatrix t, double order);

    /// Extend the cached powers/sums through index n_max.
    void prepare(std::int64_t n_max);

    /// Largest cached index.
    std::int64_t prepared() const { return static_cast<std::int64_t>(powers_.size()) - 1; }

    const CMatrix& matrix() const { return t_; }
    double order() const { return order_; }
    std::int64_t dim() const { return t_.rows(); }

    /// T^n; requires n <= prepared().
    const CMatrix& power(std::int64_t n) const;

    /// S^order(n); requires n <= prepared().
    const CMatrix& cesaro_sum(std::int64_t n) const;

    /// M^order(n) = S^order(n) / k^{order+1}(n); requires n <= prepared().
    CMatrix cesaro_mean(std::int64_t n) const;

private:
    CMatrix t_;
    double order_;
    std::vector<double> mean_weight_; // k^{order+1}(0..prepared)
    std::vector<CMatrix> powers_;
    std::vector<CMatrix> sums_;
};

/// Windowed maxima of a sequence of norms: max over the whole range, over
/// the lower half and over the upper half, with the non-growing verdict
/// "upper <= 1.05 * lower".
struct ProbeResult {
    double max_value = 0.0;
    double lower_half_max = 0.0;
    double upper_half_max = 0.0;

    bool non_growing() const { return upper_half_max <= 1.05 * lower_half_max; }
};

/// ||M^order(n)|| over 0 <= n <= n_max.
ProbeResult cesaro_bounded_probe(const CMatrix& t, double order, std::int64_t n_max);

/// ||T^n|| / k^{order+1}(n) over 1 <= n <= n_max; order > 0.
ProbeResult power_growth_probe(const CMatrix& t, double order, std::int64_t n_max);

} // namespace cesaro
