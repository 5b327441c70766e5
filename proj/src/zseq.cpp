#include "cesaro/zseq.hpp"

#include "cesaro/kernels.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <utility>

namespace cesaro {

namespace {

bool is_zero(Complex v) { return v.real() == 0.0 && v.imag() == 0.0; }

} // namespace

ZSeq::ZSeq(std::int64_t lo, std::vector<Complex> values) : lo_(lo), values_(std::move(values)) {
    // Trim exact zeros at both ends so the representation is canonical.
    std::size_t first = 0;
    while (first < values_.size() && is_zero(values_[first]))
        ++first;
    if (first == values_.size()) {
        lo_ = 0;
        values_.clear();
        return;
    }
    std::size_t last = values_.size() - 1;
    while (is_zero(values_[last]))
        --last;
    if (first > 0 || last + 1 < values_.size()) {
        values_ = std::vector<Complex>(values_.begin() + static_cast<std::ptrdiff_t>(first),
                                       values_.begin() + static_cast<std::ptrdiff_t>(last) + 1);
    }
    lo_ += static_cast<std::int64_t>(first);
}

ZSeq ZSeq::unit(std::int64_t n) { return ZSeq(n, {Complex(1.0, 0.0)}); }

ZSeq ZSeq::kernel_slice(double order, std::int64_t n_max) {
    const KernelTable table(order, n_max);
    std::vector<Complex> values(table.values().begin(), table.values().end());
    return ZSeq(0, std::move(values));
}

double ZSeq::l1_norm() const {
    double acc = 0.0;
    for (Complex v : values_)
        acc += std::abs(v);
    return acc;
}

namespace {

ZSeq pointwise(const ZSeq& f, const ZSeq& g, double sign) {
    if (f.empty())
        return sign > 0 ? g : Complex(-1.0, 0.0) * g;
    if (g.empty())
        return f;
    const std::int64_t lo = std::min(f.lo(), g.lo());
    const std::int64_t hi = std::max(f.hi(), g.hi());
    std::vector<Complex> values(static_cast<std::size_t>(hi - lo + 1));
    for (std::int64_t n = lo; n <= hi; ++n)
        values[static_cast<std::size_t>(n - lo)] = f.at(n) + sign * g.at(n);
    return ZSeq(lo, std::move(values));
}

} // namespace

ZSeq operator+(const ZSeq& f, const ZSeq& g) { return pointwise(f, g, 1.0); }
ZSeq operator-(const ZSeq& f, const ZSeq& g) { return pointwise(f, g, -1.0); }

ZSeq operator*(Complex c, const ZSeq& f) {
    std::vector<Complex> values(f.values().begin(), f.values().end());
    for (Complex& v : values)
        v *= c;
    return ZSeq(f.empty() ? 0 : f.lo(), std::move(values));
}

ZSeq convolve(const ZSeq& f, const ZSeq& g) {
    if (f.empty() || g.empty())
        return {};
    const std::int64_t lo = f.lo() + g.lo();
    std::vector<Complex> values(f.length() + g.length() - 1);
    for (std::size_t a = 0; a < f.length(); ++a)
        for (std::size_t b = 0; b < g.length(); ++b)
            values[a + b] += f.values()[a] * g.values()[b];
    return ZSeq(lo, std::move(values));
}

ZSeq split_pos(const ZSeq& f) {
    if (f.empty() || f.hi() < 0)
        return {};
    const std::int64_t lo = std::max<std::int64_t>(f.lo(), 0);
    std::vector<Complex> values;
    values.reserve(static_cast<std::size_t>(f.hi() - lo + 1));
    for (std::int64_t n = lo; n <= f.hi(); ++n)
        values.push_back(f.at(n));
    return ZSeq(lo, std::move(values));
}

ZSeq split_neg(const ZSeq& f) {
    if (f.empty() || f.lo() >= 0)
        return {};
    const std::int64_t hi = std::min<std::int64_t>(f.hi(), -1);
    std::vector<Complex> values;
    values.reserve(static_cast<std::size_t>(hi - f.lo() + 1));
    for (std::int64_t n = f.lo(); n <= hi; ++n)
        values.push_back(f.at(n));
    return ZSeq(f.lo(), std::move(values));
}

ZSeq reflect(const ZSeq& f) {
    if (f.empty())
        return {};
    std::vector<Complex> values(f.values().begin(), f.values().end());
    std::reverse(values.begin(), values.end());
    return ZSeq(-f.hi(), std::move(values));
}

double max_abs_diff(const ZSeq& f, const ZSeq& g) {
    if (f.empty() && g.empty())
        return 0.0;
    const std::int64_t lo = std::min(f.empty() ? g.lo() : f.lo(), g.empty() ? f.lo() : g.lo());
    const std::int64_t hi = std::max(f.empty() ? g.hi() : f.hi(), g.empty() ? f.hi() : g.hi());
    double worst = 0.0;
    for (std::int64_t n = lo; n <= hi; ++n)
        worst = std::max(worst, std::abs(f.at(n) - g.at(n)));
    return worst;
}

} // namespace cesaro
