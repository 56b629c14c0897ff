#pragma once

#include "bincert/enclosure.hpp"

namespace bincert {

// Certified value of I(x) = P(|Z| < x) for a standard normal Z, that is
// (2/sqrt(2 pi)) * integral_0^x exp(-s^2/2) ds.
struct GaussianIntegral {
    Rational x;
    Enclosure enclosure;    // inside [0, 1]
    unsigned series_terms;  // terms consumed by the series route
    unsigned partitions;    // cells used by the step-function cross-check
};

// Primary route: the alternating series
//   integral_0^x exp(-s^2/2) ds = sum_k (-1)^k x^{2k+1} / ((2k+1) 2^k k!),
// summed exactly in rationals with the remainder bounded by the first omitted
// term, then normalized by an enclosure of 2/sqrt(2 pi). A coarse monotone
// step-function bracket of the same integral is computed independently and
// intersected in; disagreement between the routes throws std::logic_error.
// Requires x >= 0.
GaussianIntegral gauss_integral(const Rational& x, const Precision& prec);

// Enclosure of the unnormalized integral_0^x exp(-s^2/2) ds by the series
// route alone. Requires x >= 0.
Enclosure gauss_half_series(const Rational& x, const Rational& target_width,
                            unsigned* terms_used = nullptr);

// Step-function bracket of the same integral on a uniform grid with the given
// number of cells: the integrand decreases on [0, x], so right endpoints give
// the lower sum and left endpoints the upper sum. Nodes are evaluated at a
// fixed fine precision, so doubling partitions never moves lo down or hi up.
// Requires x > 0 and partitions >= 1.
Enclosure gauss_half_step_bracket(const Rational& x, unsigned partitions);

// Rational u with I(x) <= u <= 1, a certified upper bound on the central mass
// (equivalently 1 - u lower-bounds the two-sided tail).
Rational gauss_tail_bound(const Rational& x);

}  // namespace bincert
