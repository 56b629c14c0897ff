#pragma once

#include "bincert/certify.hpp"

namespace bincert {

// Certificates for fair-coin windows. Throughout, n is the half-index: the
// even-trial statements concern S_{2n}, the odd-trial ones S_{2n+1}, and
// I(x) is the standard normal mass on (-x, x). Preconditions stated as gates
// produce Skipped claims, never errors.

// Exact gate predicates (squared / cubed rational forms, no rounding).
bool gate_n_ge_x2(unsigned n, const Rational& x);   // n >= x^2
bool gate_n_ge_2x2(unsigned n, const Rational& x);  // n >= 2 x^2
// j^3/n^2 <= x^3/(2 sqrt(2n)), exactly: 8 n j^6 <= x^6 n^4.
bool gate_cube_term_ok(unsigned n, const Rational& x, long j);
// (x/2) sqrt(2n+1) - 1/2 < x sqrt(n/2), decided exactly by nested squaring.
bool odd_threshold_below_even(unsigned n, const Rational& x);

// Bounds on pi(j, n) for 0 <= j <= j_max (j_max <= n):
//   product_upper[j]: pi(j, n) <= exp(-j^2/n + j^3/n^2)
//   product_lower[j]: pi(j, n) >= exp(-j^2/n - 2 j^3/n^2), gated on 2j <= n.
CertificateReport check_pi_bounds_even(unsigned n, unsigned j_max,
                                       const certify::Options& opts = {});

// Same for the odd-trial products pi_tilde(j, n):
//   tilde_product_upper[j]: pi_tilde(j, n) <= exp(-j^2/n + j^3/n^2)
//   tilde_product_lower[j]: pi_tilde(j, n) >= (n+1)/(n+j+1) exp(-j^2/n - 2 j^3/n^2),
//   gated on 2j <= n.
CertificateReport check_pi_bounds_odd(unsigned n, unsigned j_max,
                                      const certify::Options& opts = {});

// In-window bracket for pi_tilde at threshold x (window (2j+1)^2 < x^2 (2n+1)):
//   tilde_window_upper[j] (n >= x^2):  pi_tilde <= exp(-j^2/n + x^3/(2 sqrt(2n)))
//   tilde_window_lower[j] (n >= 2x^2): pi_tilde >= n/(n + x sqrt(n)) exp(-j^2/n - x^3/sqrt(2n))
CertificateReport check_pi_tilde_window_bracket(unsigned n, const Rational& x,
                                                const certify::Options& opts = {});

// Sandwich for P = P(|2 S_{2n} - 2n| < x sqrt(2n)), C = P(S_{2n} = n):
//   window_upper (n >= x^2):  P <= C + sqrt(n pi) C e^{x^3/(2 sqrt(2n))} I(x)
//   window_lower (n >= 2x^2): P >= sqrt(n pi) C e^{-x^3/sqrt(2n)} I(x) - C
CertificateReport check_window_sandwich_even(unsigned n, const Rational& x,
                                             const certify::Options& opts = {});

// Sandwich for P = P(|2 S_{2n+1} - (2n+1)| < x sqrt(2n+1)), C = P(S_{2n+1} = n).
// The odd window has no central lattice point, so the lower bound pays a
// half-cell boundary deduction and the ratio damping sqrt(n)/(sqrt(n) + x);
// without them it fails (27 trials, x = 1/2).
//   window_lower (n >= 2x^2): P >= sqrt(n pi) C sqrt(n)/(sqrt(n)+x) e^{-x^3/sqrt(2n)} I(x) - C
//   window_upper (n >= x^2):  P <= 2 sqrt(pi) C + sqrt(n pi) C e^{x^3/(2 sqrt(2n))} I(x)
CertificateReport check_window_sandwich_odd(unsigned n, const Rational& x,
                                            const certify::Options& opts = {});

// Two-sided certificate for even trials (gate n >= max(2x^2, 1)):
//   abs_diff_bound:       |P - I(x)| <= e^{(x^3+2)/sqrt(n)} - 1
//   one_sided_upper:      P <= I(x) + e^{(x^3+2)/(2 sqrt(2n))} - 1
//   one_sided_lower:      P >= I(x) + 1 - e^{(x^3+2)/sqrt(n)}
//   upper_slack_fold:     e^{x^3/(2 sqrt(2n))} + 1/sqrt(n pi) <= e^{(x^3+2)/(2 sqrt(2n))}
//   lower_prefactor_fold: e^{-1/(4n) - x^3/sqrt(2n)} <= e^{-x^3/sqrt(2n)} / sqrt(1 + 1/(2n))
//   lower_slack_fold:     1 - e^{(x^3+2)/sqrt(n)} <= e^{-1/(4n) - x^3/sqrt(2n)} - 1 - 1/sqrt(2n)
CertificateReport certify_nonasymptotic_even(unsigned n, const Rational& x,
                                             const certify::Options& opts = {});

// Two-sided certificate for odd trials 2n+1 with the same half-index bound:
//   abs_diff_bound: |P - I(x)| <= e^{(x^3+2)/sqrt(n)} - 1   (gate n >= max(2x^2, 1))
CertificateReport certify_nonasymptotic_odd(unsigned n, const Rational& x,
                                            const certify::Options& opts = {});

// Unified certificate for any trial count (gate n_total >= max(4x^2, 2)):
//   abs_diff_bound: |P(|2 S - n_total| < x sqrt(n_total)) - I(x)|
//                     <= e^{(4x^3+8)/sqrt(n_total)} - 1
CertificateReport certify_unified(unsigned n_total, const Rational& x,
                                  const certify::Options& opts = {});

// Exact probability of x <= |2 S - n|/sqrt(n) < y, with the enclosure of
// I(y) - I(x). Requires 0 < x < y.
struct IntervalDifference {
    Rational prob;
    Enclosure gauss_diff;
};
IntervalDifference interval_difference(const Rational& x, const Rational& y, unsigned n_total,
                                       const certify::Options& opts = {});

// Ordering of the even-trial upper chain (gate n >= x^2): window probability
// <= discrete exponential-sum form <= integral form, plus a consistency check
// that the two algebraically equal integral forms overlap.
CertificateReport upper_chain_ordering(unsigned n, const Rational& x,
                                       const certify::Options& opts = {});

}  // namespace bincert
