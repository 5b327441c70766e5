#pragma once

#include "cesaro/zseq.hpp"

#include <cstdint>

// Weyl-style fractional sums and differences on finitely supported
// sequences.  With the kernel convention k^a, the forward/backward sums of
// order a > 0 and differences of order a (any real a) at an index n are
//
//     sum_plus:   sum_{j >= n} k^{a}(j-n)  f(j)
//     sum_minus:  sum_{j <= n} k^{a}(n-j)  f(j)
//     diff_plus:  sum_{j >= n} k^{-a}(j-n) f(j)
//     diff_minus: sum_{j <= n} k^{-a}(n-j) f(j)
//
// All four are finite sums because f has finite support.  Order 1 reduces
// to the first difference f(n) - f(n+1) (resp. f(n) - f(n-1)); order 0 is
// the identity.  Fractional differences of one-sided sequences have
// infinite one-sided tails, so the pointwise evaluators are the primitive
// interface; the combined operator below is the sequence-valued one.
//
// Sums are accumulated from the far end of the support toward n, which
// keeps the alternating-kernel cancellation well conditioned.

namespace cesaro {

/// Forward (right-looking) fractional sum of order `order` > 0 at index n.
Complex weyl_sum_plus_at(const ZSeq& f, double order, std::int64_t n);

/// Backward (left-looking) fractional sum of order `order` > 0 at index n.
Complex weyl_sum_minus_at(const ZSeq& f, double order, std::int64_t n);

/// Forward fractional difference of any real order at index n.
Complex weyl_diff_plus_at(const ZSeq& f, double order, std::int64_t n);

/// Backward fractional difference of any real order at index n.
Complex weyl_diff_minus_at(const ZSeq& f, double order, std::int64_t n);

/// Forward difference of non-integer order `order` > 0 computed the long
/// way round: a fractional sum of order m - `order` (m = floor(order) + 1)
/// followed by the integer difference of order m.  Agrees with
/// weyl_diff_plus_at; kept as an independent route for cross-checking.
/// Rejects integer orders.
Complex weyl_diff_plus_via_composition(const ZSeq& f, double order, std::int64_t n);

/// Combined difference W^order: forward at indices n >= 0, backward at
/// n <= -1.  Maps finitely supported sequences to finitely supported
/// sequences for every real order (entries vanish outside
/// [min(lo,0), max(hi,0)]), and satisfies W^a W^b = W^{a+b} on them.
ZSeq weyl_combined(const ZSeq& f, double order);

} // namespace cesaro
