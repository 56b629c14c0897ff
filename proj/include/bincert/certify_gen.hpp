#pragma once

#include "bincert/binomial.hpp"
#include "bincert/certify.hpp"

namespace bincert {

// Certificates for the general-parameter window P(m <= S_n < m + x sqrt(npq)),
// with m the central index of Binomial(n, p) and q = 1 - p.

// Certificate bundle carrying the instance's central-index data.
struct GeneralCertificate {
    CertificateReport report;
    Rational p;
    long m = 0;
    Rational delta;
};

// gen_product_upper[j]: pi(j) <= exp(-(j-1)^2/(2(n+1)pq) + j^3/(2 n^2 p^2 q)),
// asserted for 1 <= j <= (n+1)p. The bound is below 1 at j = 0 while
// pi(0) = 1, so j = 0 is reported Skipped rather than certified; indices past
// the support (m + j > n) have pi(j) = 0 and the claim is certified with an
// exact zero left side.
Claim check_pi_gen_upper(const GeneralWindow& win, long j, const certify::Options& opts = {});

// gen_product_lower[j]: pi(j) >= exp(-(j+1)^2/(2npq) - (j+1)^3/(n^2 p q^2)),
// asserted for 0 <= j <= (n+1)pq/2 (which keeps m + j within the support).
Claim check_pi_gen_lower(const GeneralWindow& win, long j, const certify::Options& opts = {});

// Exact decomposition of the window probability plus the two-sided sandwich:
//   window_upper (gate n >= (q/p) x^2):
//     P_n(x) <= sqrt(2 pi npq) P(S_n=m) e^{(x^3+1)/sqrt(pn)} (1/sqrt(npq) + I(x)/2)
//   window_lower (gate x sqrt(npq) >= max(1, 2x^2)):
//     P_n(x) >= sqrt(2 pi npq) P(S_n=m) e^{-8x^3/sqrt(qn)} (I(x)/2 - 1/sqrt(npq))
GeneralCertificate check_general_sandwich(const GeneralWindow& win,
                                          const certify::Options& opts = {});

// The left window np - x sqrt(npq) < S_n < np rewritten through the flipped
// count n - S_n ~ Binomial(n, q). left_window_prob sums p-side terms over the
// left window; flipped_window_prob is the q-side window anchored at the
// flipped central index; adjustment is the exact (signed) sum of the boundary
// atoms separating the two conventions, so
//   left_window_prob + adjustment = flipped_window_prob
// exactly (verified internally).
struct ReflectionResult {
    Rational left_window_prob;
    Rational flipped_window_prob;
    Rational adjustment;
};
ReflectionResult reflect_left_window(const GeneralWindow& win);

}  // namespace bincert
