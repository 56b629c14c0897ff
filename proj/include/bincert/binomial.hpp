#pragma once

#include "bincert/rational.hpp"

#include <utility>

namespace bincert {

// Probability masses are exact rationals; producers in this module verify the
// [0, 1] range and (where two derivations exist) cross-check them against
// each other before returning.
using PmfValue = Rational;

// P(S_n = k) for S_n ~ Binomial(n, p), exact: C(n,k) p^k (1-p)^(n-k).
// Requires 0 < p < 1; returns 0 for k outside [0, n].
PmfValue pmf(unsigned n, const Rational& p, long k);

// P(S_{2n} = n) = C(2n, n) / 4^n.
PmfValue central_pmf_even(unsigned n);

// P(S_{2n+1} = n), equal to P(S_{2n+1} = n+1).
PmfValue central_pmf_odd(unsigned n);

// pi(j, n) = prod_{l=1}^{j} (n + l - j)/(n + l); equals C(2n, n+j)/C(2n, n).
// Requires j <= n.
Rational pi_sym(unsigned j, unsigned n);

// Odd-trial variant: prod_{l=1}^{j} (n + l - j)/(n + l + 1), which equals
// (n+1)/(n+j+1) * pi_sym(j, n). Requires j <= n.
Rational pi_sym_odd(unsigned j, unsigned n);

// The unique integer m with np - (1-p) < m <= np + p, i.e. m = floor(np + p);
// delta = m - np lies in (-q, p].
struct CentralIndex {
    long m;
    Rational delta;
};
CentralIndex central_index(unsigned n, const Rational& p);

// Event |2 S_n - n| < x sqrt(n) for fair coins. Membership is decided by the
// exact squared comparison (2k - n)^2 < x^2 n, so boundary points (where
// x^2 n is a perfect square) are excluded exactly, never by rounding.
struct SymmetricWindow {
    unsigned n;  // number of trials, >= 1
    Rational x;  // threshold, > 0
    SymmetricWindow(unsigned n_, Rational x_);
    bool contains(long k) const;
    // Inclusive index range; first > second means the window is empty.
    std::pair<long, long> k_range() const;
};

// Event m <= S_n < m + x sqrt(npq) for Binomial(n, p), anchored at the
// central index m. Membership: k >= m and (k - m)^2 < x^2 npq, exact.
struct GeneralWindow {
    unsigned n;
    Rational p, x;
    long m;
    Rational delta;
    GeneralWindow(unsigned n_, Rational p_, Rational x_);
    Rational q() const { return Rational(1) - p; }
    bool contains(long k) const;
    std::pair<long, long> k_range() const;  // clamped to [m, n]
};

// pi(j) = pmf(n, p, m+j) / pmf(n, p, m); requires m + j <= n. Verified
// internally against the product form
//   prod_{l=1}^{j} (npq - (delta + l - 1) p) / (npq + (delta + l) q).
Rational pi_gen(const GeneralWindow& w, unsigned j);

// Exact window probabilities, each computed by two independent routes:
// direct summation of binomial terms, and central term times the product
// expansion. The routes must agree exactly (std::logic_error otherwise).
PmfValue window_prob_sym(const SymmetricWindow& w);
PmfValue window_prob_gen(const GeneralWindow& w);

struct WindowRoutes {
    Rational direct;
    Rational product_form;
};
WindowRoutes window_prob_sym_routes(const SymmetricWindow& w);
WindowRoutes window_prob_gen_routes(const GeneralWindow& w);

// Largest integer v >= 0 with v^2 < t; requires t > 0.
long strict_sqrt_floor(const Rational& t);

}  // namespace bincert
