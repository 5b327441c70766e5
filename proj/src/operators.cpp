#include "cesaro/operators.hpp"

#include "cesaro/errors.hpp"
#include "cesaro/kernels.hpp"

#include <Eigen/Eigenvalues>

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>
#include <utility>

namespace cesaro {

namespace {

void require_square_finite(const CMatrix& t, const char* who) {
    if (t.rows() == 0 || t.rows() != t.cols())
        throw std::invalid_argument(std::string(who) + ": matrix must be square and nonempty");
    if (!t.allFinite())
        throw std::invalid_argument(std::string(who) + ": matrix entries must be finite");
}

// Deterministic unit start vector for the power iteration (splitmix-style
// generator with a fixed seed, so repeated runs are bit-identical).
Eigen::VectorXcd deterministic_start(Eigen::Index dim, std::uint64_t seed) {
    auto next = [state = seed]() mutable {
        state += 0x9e3779b97f4a7c15ull;
        std::uint64_t z = state;
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
        z = z ^ (z >> 31);
        return z;
    };
    auto uniform = [&next]() {
        return static_cast<double>(next() >> 11) * 0x1.0p-53 * 2.0 - 1.0;
    };
    Eigen::VectorXcd v(dim);
    for (Eigen::Index i = 0; i < dim; ++i) {
        const double re = uniform();
        const double im = uniform();
        v[i] = Complex(re, im);
    }
    const double norm = v.norm();
    return norm > 0.0 ? Eigen::VectorXcd(v / norm) : Eigen::VectorXcd::Unit(dim, 0);
}

struct EigenPairs {
    Eigen::VectorXcd values;
    Eigen::MatrixXcd vectors;
};

// Eigenpairs with a residual check ||T v - lambda v|| <= 1e-8 per pair.
EigenPairs eigenpairs_checked(const CMatrix& t, const char* who) {
    require_square_finite(t, who);
    Eigen::ComplexEigenSolver<CMatrix> solver(t, /*computeEigenvectors=*/true);
    if (solver.info() != Eigen::Success)
        throw NumericError(std::string(who) + ": eigensolver did not converge");
    const Eigen::VectorXcd values = solver.eigenvalues();
    const Eigen::MatrixXcd vectors = solver.eigenvectors(); // unit columns
    for (Eigen::Index i = 0; i < values.size(); ++i) {
        const double residual = (t * vectors.col(i) - values[i] * vectors.col(i)).norm();
        if (!(residual <= 1e-8))
            throw NumericError(std::string(who) + ": eigenpair residual " +
                               std::to_string(residual) + " exceeds 1e-8");
    }
    return {values, vectors};
}

} // namespace

CMatrix matrix_power(const CMatrix& t, std::int64_t n) {
    require_square_finite(t, "matrix_power");
    if (n < 0)
        throw std::invalid_argument("matrix_power: exponent must be >= 0");
    CMatrix acc = CMatrix::Identity(t.rows(), t.cols());
    for (std::int64_t i = 0; i < n; ++i)
        acc = acc * t;
    return acc;
}

double operator_norm(const CMatrix& t) {
    require_square_finite(t, "operator_norm");
    const CMatrix h = t.adjoint() * t; // Hermitian PSD; top eigenvalue = ||T||^2
    if (h.cwiseAbs().maxCoeff() == 0.0)
        return 0.0;

    constexpr int kMaxIterations = 20000;
    constexpr double kRelTol = 1e-12;
    Eigen::VectorXcd q = deterministic_start(t.rows(), 0x243f6a8885a308d3ull);
    double rayleigh = 0.0;
    double previous = -1.0;
    int stable = 0;
    for (int it = 0; it < kMaxIterations; ++it) {
        const Eigen::VectorXcd z = h * q;
        const double zn = z.norm();
        if (zn == 0.0) {
            // Start vector fell in the kernel; restart once with a fresh seed.
            q = deterministic_start(t.rows(), 0x452821e638d01377ull + static_cast<std::uint64_t>(it));
            previous = -1.0;
            stable = 0;
            continue;
        }
        rayleigh = q.dot(z).real(); // q* H q, real for Hermitian H
        if (std::abs(rayleigh - previous) <= kRelTol * std::max(std::abs(rayleigh), 1e-300))
            ++stable;
        else
            stable = 0;
        previous = rayleigh;
        q = z / zn;
        if (stable >= 3) {
            const double residual = (h * q - rayleigh * q).norm();
            if (residual <= 1e-8 * std::max(rayleigh, 1e-300))
                return std::sqrt(std::max(rayleigh, 0.0));
            stable = 0; // converged increments but poor residual: keep going
        }
    }
    throw NumericError("operator_norm: power iteration did not converge within 20000 iterations");
}

double spectral_radius(const CMatrix& t) {
    const EigenPairs pairs = eigenpairs_checked(t, "spectral_radius");
    double radius = 0.0;
    for (Eigen::Index i = 0; i < pairs.values.size(); ++i)
        radius = std::max(radius, std::abs(pairs.values[i]));
    return radius;
}

std::vector<Complex> peripheral_spectrum(const CMatrix& t, double tol) {
    if (!(tol > 0.0))
        throw std::invalid_argument("peripheral_spectrum: tol must be > 0");
    const EigenPairs pairs = eigenpairs_checked(t, "peripheral_spectrum");
    std::vector<Complex> on_circle;
    for (Eigen::Index i = 0; i < pairs.values.size(); ++i)
        if (std::abs(std::abs(pairs.values[i]) - 1.0) <= tol)
            on_circle.push_back(pairs.values[i]);
    std::sort(on_circle.begin(), on_circle.end(), [](Complex a, Complex b) {
        return a.real() != b.real() ? a.real() < b.real() : a.imag() < b.imag();
    });
    std::vector<Complex> unique;
    for (Complex v : on_circle) {
        if (!unique.empty() && std::abs(v - unique.back()) <= tol)
            continue;
        unique.push_back(v);
    }
    return unique;
}

CesaroTransform::CesaroTransform(CMatrix t, double order) : t_(std::move(t)), order_(order) {
    require_square_finite(t_, "CesaroTransform");
    if (!(order >= 0.0))
        throw std::invalid_argument("CesaroTransform: order must be >= 0");
    mean_weight_.push_back(1.0);
    powers_.push_back(CMatrix::Identity(t_.rows(), t_.cols()));
    sums_.push_back(powers_.front());
}

void CesaroTransform::prepare(std::int64_t n_max) {
    if (n_max < 0)
        throw std::invalid_argument("CesaroTransform::prepare: n_max must be >= 0");
    const std::int64_t have = prepared();
    if (n_max <= have)
        return;
    powers_.reserve(static_cast<std::size_t>(n_max) + 1);
    sums_.reserve(static_cast<std::size_t>(n_max) + 1);
    mean_weight_.reserve(static_cast<std::size_t>(n_max) + 1);
    for (std::int64_t n = have + 1; n <= n_max; ++n) {
        powers_.push_back(powers_.back() * t_);
        mean_weight_.push_back(mean_weight_.back() * (order_ + 1.0 + static_cast<double>(n - 1)) /
                               static_cast<double>(n));
        if (order_ == 0.0) {
            sums_.push_back(powers_.back());
        } else if (order_ == 1.0) {
            sums_.push_back(sums_.back() + powers_.back());
        } else {
            // sum_{j<=n} k^order(n-j) T^j, accumulated far-from-n first.
            const KernelTable k(order_, n);
            CMatrix acc = CMatrix::Zero(t_.rows(), t_.cols());
            for (std::int64_t j = 0; j <= n; ++j)
                acc += k[n - j] * powers_[static_cast<std::size_t>(j)];
            sums_.push_back(std::move(acc));
        }
    }
}

const CMatrix& CesaroTransform::power(std::int64_t n) const {
    if (n < 0 || n > prepared())
        throw std::out_of_range("CesaroTransform::power: index " + std::to_string(n) +
                                " outside prepared range [0, " + std::to_string(prepared()) + "]");
    return powers_[static_cast<std::size_t>(n)];
}

const CMatrix& CesaroTransform::cesaro_sum(std::int64_t n) const {
    if (n < 0 || n > prepared())
        throw std::out_of_range("CesaroTransform::cesaro_sum: index " + std::to_string(n) +
                                " outside prepared range [0, " + std::to_string(prepared()) + "]");
    return sums_[static_cast<std::size_t>(n)];
}

CMatrix CesaroTransform::cesaro_mean(std::int64_t n) const {
    return cesaro_sum(n) / mean_weight_[static_cast<std::size_t>(n)];
}

namespace {

ProbeResult windowed_probe(const std::vector<double>& values) {
    ProbeResult result;
    const std::size_t mid = values.size() / 2;
    for (std::size_t i = 0; i < values.size(); ++i) {
        result.max_value = std::max(result.max_value, values[i]);
        if (i <= mid)
            result.lower_half_max = std::max(result.lower_half_max, values[i]);
        if (i >= mid)
            result.upper_half_max = std::max(result.upper_half_max, values[i]);
    }
    return result;
}

} // namespace

ProbeResult cesaro_bounded_probe(const CMatrix& t, double order, std::int64_t n_max) {
    if (n_max < 1)
        throw std::invalid_argument("cesaro_bounded_probe: n_max must be >= 1");
    CesaroTransform transform(t, order);
    transform.prepare(n_max);
    std::vector<double> norms;
    norms.reserve(static_cast<std::size_t>(n_max) + 1);
    for (std::int64_t n = 0; n <= n_max; ++n)
        norms.push_back(operator_norm(transform.cesaro_mean(n)));
    return windowed_probe(norms);
}

ProbeResult power_growth_probe(const CMatrix& t, double order, std::int64_t n_max) {
    if (!(order > 0.0))
        throw std::invalid_argument("power_growth_probe: order must be > 0");
    if (n_max < 1)
        throw std::invalid_argument("power_growth_probe: n_max must be >= 1");
    require_square_finite(t, "power_growth_probe");
    const KernelTable weight(order + 1.0, n_max);
    std::vector<double> ratios;
    ratios.reserve(static_cast<std::size_t>(n_max));
    CMatrix power = CMatrix::Identity(t.rows(), t.cols());
    for (std::int64_t n = 1; n <= n_max; ++n) {
        power = power * t;
        ratios.push_back(operator_norm(power) / weight[n]);
    }
    return windowed_probe(ratios);
}

} // namespace cesaro
