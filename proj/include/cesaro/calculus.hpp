#pragma once

#include "cesaro/operators.hpp"
#include "cesaro/zseq.hpp"

#include <cstdint>
#include <span>
#include <string>
#include <vector>

// The fractional functional calculus attached to a CesaroTransform:
//
//     theta(f) = sum_{n >= 0} (W_+^a f)(n) S^a(n),
//
// which collapses to sum_j f(j) T^j for every finitely supported f with
// nonnegative support, independently of the order a.  On top of it sit the
// desk-scale experiments: Katznelson-Tzafriri-type decay curves
// ||M^a(n) theta(f)|| for functions annihilating the peripheral spectrum,
// consecutive-mean differences, the exact mean identities that drive the
// ergodic-averages results, and a truncated Neumann-type resolvent series.

namespace cesaro {

/// Metadata carried along with a computed curve.
struct CurveMeta {
    std::string fixture;
    double order = 0.0;
    std::string fn;
    std::vector<std::string> notes;
};

/// Monotone grid of (n, value) rows with nonnegative finite values.
class DecayCurve {
public:
    struct Row {
        std::int64_t n;
        double value;
    };

    DecayCurve() = default;
    DecayCurve(std::vector<Row> rows, CurveMeta meta);

    const std::vector<Row>& rows() const { return rows_; }
    const CurveMeta& meta() const { return meta_; }
    CurveMeta& meta() { return meta_; }

    /// Max value over the first half of the rows.
    double lower_window_max() const;

    /// Max value over the second half of the rows.
    double upper_window_max() const;

    /// True when the upper-window max is strictly below the lower one.
    bool decreasing_trend() const { return upper_window_max() < lower_window_max(); }

private:
    std::vector<Row> rows_;
    CurveMeta meta_;
};

/// The finite sequence h(j) = k^order(n - j), 0 <= j <= n, whose
/// fractional difference is the unit mass at n; theta maps it to S^order(n).
ZSeq h_sequence(double order, std::int64_t n);

/// theta(f) for finitely supported f with f.lo() >= 0 (negative support is
/// rejected).  Prepares the transform through f.hi().
CMatrix functional_calculus(CesaroTransform& transform, const ZSeq& f);

/// || theta(f) - sum_j f(j) T^j ||, the defect of the power-series route.
double calculus_consistency_residual(CesaroTransform& transform, const ZSeq& f);

/// Truncated series for (lambda - T)^{-1} built from Cesàro sums:
///
///     ((lambda-1)/lambda)^a  sum_{n=0}^{N} lambda^{-n-1} S^a(n).
///
/// Requires |lambda| > 1.  The geometric tail of the dropped terms is
/// bounded a priori using max_n ||S^a(n)|| / k^{a+1}(n) over the prepared
/// range; if that bound exceeds `tol` a NumericError reports the smallest
/// sufficient N.
CMatrix resolvent_series(CesaroTransform& transform, Complex lambda, std::int64_t n_terms,
                         double tol = 1e-8);

/// ||M^a(n) theta(f)|| over the grid.  Whether f vanishes on the
/// peripheral spectrum is checked and recorded in the meta notes (but not
/// enforced); the theorem predicts decay exactly in that case.
DecayCurve kt_decay_curve(CesaroTransform& transform, const ZSeq& f,
                          std::span<const std::int64_t> grid);

/// ||M^a(n+1) - M^a(n)|| over the grid, with the peripheral-spectrum
/// hypothesis (contained in {1}) recorded in the meta notes.
DecayCurve mean_difference_curve(CesaroTransform& transform, std::span<const std::int64_t> grid);

/// Residual of the exact step identity linking consecutive means of order
/// a >= 1 to the mean of order a-1:
///
///     (n+a+1)/(n+1) M^a(n+1) - M^a(n) = a/(n+1) M^{a-1}(n+1).
///
/// Orders below 1 are rejected.
double mean_step_identity_residual(CesaroTransform& transform, std::int64_t n);
double mean_step_identity_residual(CesaroTransform& transform, CesaroTransform& aux,
                                   std::int64_t n);

/// Residual of the companion shift identity
///
///     M^a(n)(T - I) = a/(n+1) (M^{a-1}(n+1) - I),   a >= 1.
double mean_shift_identity_residual(CesaroTransform& transform, std::int64_t n);
double mean_shift_identity_residual(CesaroTransform& transform, CesaroTransform& aux,
                                    std::int64_t n);

/// Growth diagnostics for the ergodic consequences at order a >= 1:
/// ||M^{a-1}(n)|| / n and ||T^n|| / n^a over 1 <= n <= n_max, each with a
/// decreasing-trend verdict.
struct ErgodicReport {
    std::vector<DecayCurve::Row> mean_ratio;
    std::vector<DecayCurve::Row> power_ratio;
    bool mean_ratio_decreasing = false;
    bool power_ratio_decreasing = false;
    CurveMeta meta;
};

ErgodicReport ergodic_growth_report(CesaroTransform& transform, std::int64_t n_max);

} // namespace cesaro
