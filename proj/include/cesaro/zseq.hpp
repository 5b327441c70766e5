#pragma once

#include <complex>
#include <cstdint>
#include <span>
#include <vector>

namespace cesaro {

using Complex = std::complex<double>;

// Finitely supported complex sequence over the integers, stored as a
// contiguous window [lo, hi].  Instances are kept canonical: the first and
// last stored entries are nonzero (the zero sequence stores nothing), so
// index-wise equality coincides with representation equality.
class ZSeq {
public:
    ZSeq() = default;
    ZSeq(std::int64_t lo, std::vector<Complex> values);

    /// Unit mass e_n.
    static ZSeq unit(std::int64_t n);

    /// Kernel slice (k^order(0), ..., k^order(n_max)) supported on [0, n_max].
    static ZSeq kernel_slice(double order, std::int64_t n_max);

    bool empty() const { return values_.empty(); }
    std::int64_t lo() const { return lo_; }
    std::int64_t hi() const { return lo_ + static_cast<std::int64_t>(values_.size()) - 1; }
    std::size_t length() const { return values_.size(); }

    /// Value at index n; zero outside the stored window.
    Complex at(std::int64_t n) const {
        if (empty() || n < lo_ || n > hi())
            return {};
        return values_[static_cast<std::size_t>(n - lo_)];
    }

    std::span<const Complex> values() const { return values_; }

    double l1_norm() const;

    bool operator==(const ZSeq& other) const {
        return lo_ == other.lo_ && values_ == other.values_;
    }

private:
    std::int64_t lo_ = 0;
    std::vector<Complex> values_;
};

ZSeq operator+(const ZSeq& f, const ZSeq& g);
ZSeq operator-(const ZSeq& f, const ZSeq& g);
ZSeq operator*(Complex c, const ZSeq& f);

/// Convolution (f*g)(n) = sum_j f(n-j) g(j); support adds.
ZSeq convolve(const ZSeq& f, const ZSeq& g);

/// Restriction to indices n >= 0.
ZSeq split_pos(const ZSeq& f);

/// Restriction to indices n <= -1.
ZSeq split_neg(const ZSeq& f);

/// (reflect f)(n) = f(-n).
ZSeq reflect(const ZSeq& f);

/// sup_n |f(n) - g(n)|; zero iff f == g as sequences.
double max_abs_diff(const ZSeq& f, const ZSeq& g);

} // namespace cesaro
