#include "cesaro/calculus.hpp"

#include "cesaro/errors.hpp"
#include "cesaro/kernels.hpp"
#include "cesaro/weyl.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>
#include <stdexcept>
#include <utility>

namespace cesaro {

DecayCurve::DecayCurve(std::vector<Row> rows, CurveMeta meta)
    : rows_(std::move(rows)), meta_(std::move(meta)) {
    for (std::size_t i = 0; i < rows_.size(); ++i) {
        if (rows_[i].n < 0)
            throw std::invalid_argument("DecayCurve: indices must be >= 0");
        if (i > 0 && rows_[i].n <= rows_[i - 1].n)
            throw std::invalid_argument("DecayCurve: indices must be strictly increasing");
        if (!std::isfinite(rows_[i].value) || rows_[i].value < 0.0)
            throw std::invalid_argument("DecayCurve: values must be finite and >= 0");
    }
}

double DecayCurve::lower_window_max() const {
    double acc = 0.0;
    for (std::size_t i = 0; i < rows_.size() / 2 + rows_.size() % 2; ++i)
        acc = std::max(acc, rows_[i].value);
    return acc;
}

double DecayCurve::upper_window_max() const {
    double acc = 0.0;
    for (std::size_t i = rows_.size() / 2; i < rows_.size(); ++i)
        acc = std::max(acc, rows_[i].value);
    return acc;
}

ZSeq h_sequence(double order, std::int64_t n) {
    if (n < 0)
        throw std::invalid_argument("h_sequence: n must be >= 0");
    if (!(order >= 0.0))
        throw std::invalid_argument("h_sequence: order must be >= 0");
    const KernelTable k(order, n);
    std::vector<Complex> values(static_cast<std::size_t>(n) + 1);
    for (std::int64_t j = 0; j <= n; ++j)
        values[static_cast<std::size_t>(j)] = k[n - j];
    return ZSeq(0, std::move(values));
}

CMatrix functional_calculus(CesaroTransform& transform, const ZSeq& f) {
    if (f.empty())
        return CMatrix::Zero(transform.dim(), transform.dim());
    if (f.lo() < 0)
        throw std::invalid_argument("functional_calculus: negative support is not representable");
    const std::int64_t b = f.hi();
    transform.prepare(b);
    CMatrix acc = CMatrix::Zero(transform.dim(), transform.dim());
    for (std::int64_t n = 0; n <= b; ++n)
        acc += weyl_diff_plus_at(f, transform.order(), n) * transform.cesaro_sum(n);
    return acc;
}

double calculus_consistency_residual(CesaroTransform& transform, const ZSeq& f) {
    const CMatrix theta = functional_calculus(transform, f);
    CMatrix direct = CMatrix::Zero(transform.dim(), transform.dim());
    if (!f.empty()) {
        transform.prepare(f.hi());
        for (std::int64_t j = f.lo(); j <= f.hi(); ++j)
            direct += f.at(j) * transform.power(j);
    }
    return operator_norm(theta - direct);
}

CMatrix resolvent_series(CesaroTransform& transform, Complex lambda, std::int64_t n_terms,
                         double tol) {
    if (n_terms < 0)
        throw std::invalid_argument("resolvent_series: n_terms must be >= 0");
    if (!(tol > 0.0))
        throw std::invalid_argument("resolvent_series: tol must be > 0");
    const double mod = std::abs(lambda);
    if (mod <= 1.0 + 1e-6)
        throw std::invalid_argument("resolvent_series: |lambda| must exceed 1");

    const double order = transform.order();
    transform.prepare(n_terms);

    // Growth constant over the prepared range: ||S^a(n)|| <= c k^{a+1}(n).
    const KernelTable weight(order + 1.0, transform.prepared() + 1);
    double c = 0.0;
    for (std::int64_t n = 0; n <= transform.prepared(); ++n)
        c = std::max(c, operator_norm(transform.cesaro_sum(n)) / weight[n]);

    const double prefactor_mod = std::abs(std::pow((lambda - 1.0) / lambda, order));
    // Tail of sum_{n > N} lambda^{-n-1} S^a(n): the weights k^{a+1}(n)
    // beyond N are dominated by the geometric envelope with ratio
    // rho = (N + a + 2)/(N + 2) (kernel ratios only decrease), so
    //
    //   tail <= prefac * c * k^{a+1}(N+1) |lambda|^{-N-2} / (1 - rho/|lambda|),
    //
    // provided rho < |lambda|.
    auto tail_bound = [&](std::int64_t n, double kweight_np1) {
        const double rho = (static_cast<double>(n) + order + 2.0) / (static_cast<double>(n) + 2.0);
        if (rho >= mod)
            return std::numeric_limits<double>::infinity();
        return prefactor_mod * c * kweight_np1 * std::exp(-(static_cast<double>(n) + 2.0) * std::log(mod)) /
               (1.0 - rho / mod);
    };

    const double bound = tail_bound(n_terms, weight[n_terms + 1]);
    if (!(bound <= tol)) {
        // Look for the smallest sufficient truncation to report back.
        std::int64_t suggest = n_terms + 1;
        double kw = weight[n_terms + 1];
        for (; suggest < n_terms + 4000000; ++suggest) {
            kw = kw * (order + 1.0 + static_cast<double>(suggest)) / static_cast<double>(suggest + 1);
            if (tail_bound(suggest, kw) <= tol)
                break;
        }
        std::ostringstream msg;
        msg << "resolvent_series: truncation bound " << bound << " exceeds tolerance " << tol
            << " at N = " << n_terms << "; suggest N >= " << suggest;
        throw NumericError(msg.str());
    }

    const Complex inv = 1.0 / lambda;
    Complex coeff = inv;
    CMatrix acc = CMatrix::Zero(transform.dim(), transform.dim());
    for (std::int64_t n = 0; n <= n_terms; ++n) {
        acc += coeff * transform.cesaro_sum(n);
        coeff *= inv;
    }
    return std::pow((lambda - 1.0) / lambda, order) * acc;
}

namespace {

std::vector<std::int64_t> validated_grid(std::span<const std::int64_t> grid, const char* who) {
    if (grid.empty())
        throw std::invalid_argument(std::string(who) + ": grid must be nonempty");
    std::vector<std::int64_t> g(grid.begin(), grid.end());
    for (std::size_t i = 0; i < g.size(); ++i) {
        if (g[i] < 0 || (i > 0 && g[i] <= g[i - 1]))
            throw std::invalid_argument(std::string(who) +
                                        ": grid must be strictly increasing and >= 0");
    }
    return g;
}

} // namespace

DecayCurve kt_decay_curve(CesaroTransform& transform, const ZSeq& f,
                          std::span<const std::int64_t> grid) {
    const auto g = validated_grid(grid, "kt_decay_curve");
    const CMatrix theta = functional_calculus(transform, f);
    transform.prepare(g.back());

    CurveMeta meta;
    meta.order = transform.order();
    // Decay is predicted when the symbol vanishes on the peripheral
    // spectrum; warn (in the notes) when it does not.
    const auto peripheral = peripheral_spectrum(transform.matrix(), 1e-6);
    for (Complex p : peripheral) {
        Complex symbol = 0.0;
        if (!f.empty())
            for (std::int64_t j = f.lo(); j <= f.hi(); ++j)
                symbol += f.at(j) * std::pow(p, static_cast<double>(j));
        if (std::abs(symbol) > 1e-8 * (1.0 + f.l1_norm())) {
            std::ostringstream note;
            note << "warning: symbol does not vanish at peripheral point (" << p.real() << ", "
                 << p.imag() << "); decay is not predicted";
            meta.notes.push_back(note.str());
        }
    }

    std::vector<DecayCurve::Row> rows;
    rows.reserve(g.size());
    for (std::int64_t n : g)
        rows.push_back({n, operator_norm(transform.cesaro_mean(n) * theta)});
    return DecayCurve(std::move(rows), std::move(meta));
}

DecayCurve mean_difference_curve(CesaroTransform& transform, std::span<const std::int64_t> grid) {
    const auto g = validated_grid(grid, "mean_difference_curve");
    transform.prepare(g.back() + 1);

    CurveMeta meta;
    meta.order = transform.order();
    const auto peripheral = peripheral_spectrum(transform.matrix(), 1e-6);
    bool hypothesis = true;
    for (Complex p : peripheral)
        hypothesis = hypothesis && std::abs(p - 1.0) <= 1e-6;
    meta.notes.push_back(hypothesis
                             ? "peripheral spectrum contained in {1}: decay of consecutive "
                               "mean differences is predicted for Cesaro-bounded orbits"
                             : "peripheral spectrum not contained in {1}: decay is not predicted");

    std::vector<DecayCurve::Row> rows;
    rows.reserve(g.size());
    for (std::int64_t n : g)
        rows.push_back({n, operator_norm(transform.cesaro_mean(n + 1) - transform.cesaro_mean(n))});
    return DecayCurve(std::move(rows), std::move(meta));
}

namespace {

void require_identity_order(const CesaroTransform& transform, const char* who) {
    if (!(transform.order() >= 1.0))
        throw std::invalid_argument(std::string(who) + ": order must be >= 1");
}

void require_matching_aux(const CesaroTransform& transform, const CesaroTransform& aux,
                          const char* who) {
    const bool same_matrix = aux.dim() == transform.dim() &&
                             (aux.matrix() - transform.matrix()).cwiseAbs().maxCoeff() == 0.0;
    if (std::abs(aux.order() - (transform.order() - 1.0)) > 1e-12 || !same_matrix)
        throw std::invalid_argument(std::string(who) +
                                    ": aux transform must hold the same matrix at order - 1");
}

} // namespace

double mean_step_identity_residual(CesaroTransform& transform, CesaroTransform& aux,
                                   std::int64_t n) {
    require_identity_order(transform, "mean_step_identity_residual");
    require_matching_aux(transform, aux, "mean_step_identity_residual");
    if (n < 0)
        throw std::invalid_argument("mean_step_identity_residual: n must be >= 0");
    const double a = transform.order();
    const double nd = static_cast<double>(n);
    transform.prepare(n + 1);
    aux.prepare(n + 1);
    const CMatrix lhs = ((nd + a + 1.0) / (nd + 1.0)) * transform.cesaro_mean(n + 1) -
                        transform.cesaro_mean(n);
    const CMatrix rhs = (a / (nd + 1.0)) * aux.cesaro_mean(n + 1);
    return operator_norm(lhs - rhs);
}

double mean_step_identity_residual(CesaroTransform& transform, std::int64_t n) {
    require_identity_order(transform, "mean_step_identity_residual");
    CesaroTransform aux(transform.matrix(), transform.order() - 1.0);
    return mean_step_identity_residual(transform, aux, n);
}

double mean_shift_identity_residual(CesaroTransform& transform, CesaroTransform& aux,
                                    std::int64_t n) {
    require_identity_order(transform, "mean_shift_identity_residual");
    require_matching_aux(transform, aux, "mean_shift_identity_residual");
    if (n < 0)
        throw std::invalid_argument("mean_shift_identity_residual: n must be >= 0");
    const double a = transform.order();
    const double nd = static_cast<double>(n);
    transform.prepare(n);
    aux.prepare(n + 1);
    const CMatrix eye = CMatrix::Identity(transform.dim(), transform.dim());
    const CMatrix lhs = transform.cesaro_mean(n) * (transform.matrix() - eye);
    const CMatrix rhs = (a / (nd + 1.0)) * (aux.cesaro_mean(n + 1) - eye);
    return operator_norm(lhs - rhs);
}

double mean_shift_identity_residual(CesaroTransform& transform, std::int64_t n) {
    if (!(transform.order() >= 1.0))
        throw std::invalid_argument("mean_shift_identity_residual: order must be >= 1");
    CesaroTransform aux(transform.matrix(), transform.order() - 1.0);
    return mean_shift_identity_residual(transform, aux, n);
}

ErgodicReport ergodic_growth_report(CesaroTransform& transform, std::int64_t n_max) {
    require_identity_order(transform, "ergodic_growth_report");
    if (n_max < 1)
        throw std::invalid_argument("ergodic_growth_report: n_max must be >= 1");
    const double a = transform.order();
    transform.prepare(n_max);
    CesaroTransform aux(transform.matrix(), a - 1.0);
    aux.prepare(n_max);

    ErgodicReport report;
    report.meta.order = a;
    std::vector<double> mean_vals;
    std::vector<double> power_vals;
    for (std::int64_t n = 1; n <= n_max; ++n) {
        const double nd = static_cast<double>(n);
        const double mr = operator_norm(aux.cesaro_mean(n)) / nd;
        const double pr = operator_norm(transform.power(n)) / std::pow(nd, a);
        report.mean_ratio.push_back({n, mr});
        report.power_ratio.push_back({n, pr});
        mean_vals.push_back(mr);
        power_vals.push_back(pr);
    }
    auto decreasing = [](const std::vector<double>& v) {
        const std::size_t mid = v.size() / 2;
        double lower = 0.0;
        double upper = 0.0;
        for (std::size_t i = 0; i < v.size(); ++i) {
            if (i <= mid)
                lower = std::max(lower, v[i]);
            if (i >= mid)
                upper = std::max(upper, v[i]);
        }
        return upper < lower;
    };
    report.mean_ratio_decreasing = decreasing(mean_vals);
    report.power_ratio_decreasing = decreasing(power_vals);

    const auto peripheral = peripheral_spectrum(transform.matrix(), 1e-6);
    bool hypothesis = true;
    for (Complex p : peripheral)
        hypothesis = hypothesis && std::abs(p - 1.0) <= 1e-6;
    report.meta.notes.push_back(hypothesis ? "peripheral spectrum contained in {1}"
                                           : "peripheral spectrum not contained in {1}");
    return report;
}

} // namespace cesaro
