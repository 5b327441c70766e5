#pragma once

#include "cesaro/zseq.hpp"

#include <cstdint>
#include <span>
#include <utility>

// Weighted norms built from the combined fractional difference W^a:
//
//     q_a(f)    = sum_n k^{a+1}(|n|) |W^a f(n)|
//     qbar_a(f) = |f(0)| + sum_{n>=1} n^a (|W^a f(n)| + |W^a f(-n)|)
//
// q_0 is the plain l^1 norm; the two scales are equivalent for a > 0.
// Through Fourier coefficients these are the Beurling-type weighted Wiener
// norms of functions on the circle.

namespace cesaro {

/// Trigonometric polynomial on the circle, held by its Fourier
/// coefficients: fn(t) = sum_n coeffs(n) e^{int}.
struct PeriodicFn {
    ZSeq coeffs;

    /// True when no negative-frequency coefficients are present.
    bool analytic() const { return coeffs.empty() || coeffs.lo() >= 0; }

    Complex eval(double t) const;
};

/// q_order(f); requires order >= 0.
double q_norm(const ZSeq& f, double order);

/// The (negative-index, nonnegative-index) halves of q_order; they add up
/// to q_norm(f, order).
std::pair<double, double> q_norm_split(const ZSeq& f, double order);

/// The power-weighted variant qbar_order(f); requires order > 0.
double q_bar_norm(const ZSeq& f, double order);

/// Weighted Wiener norm of a trigonometric polynomial: q_order of its
/// coefficient sequence.
double wiener_norm(const PeriodicFn& fn, double order);

/// Fourier coefficients f^(n), |n| <= band, from uniform samples
/// fn(2*pi*k/M), k = 0..M-1.  Exact for trigonometric polynomials of
/// degree <= band; requires M >= 2*band + 1 (otherwise frequencies alias).
ZSeq fourier_coefficients(std::span<const Complex> samples, std::int64_t band);

/// q_order(f*g) / (q_order(f) q_order(g)); rejects zero inputs.
double submultiplicativity_ratio(const ZSeq& f, const ZSeq& g, double order);

/// Monic polynomial prod (z - lambda) through the given unimodular points,
/// as an analytic trigonometric polynomial vanishing exactly there.
/// Rejects points with ||lambda| - 1| > 1e-8.
PeriodicFn annihilator_polynomial(std::span<const Complex> points);

} // namespace cesaro
