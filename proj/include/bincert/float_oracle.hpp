#pragma once

#include "bincert/binomial.hpp"

namespace bincert::float_oracle {

// Fast double-precision estimates, used to pre-screen instances before the
// certified routes run and as an independent cross-check in tests. Window
// index ranges come from the exact integer boundaries, so rounding enters
// only through the summed terms. All entry points reject n > 10^6.

// C(n,k) p^k (1-p)^(n-k) via log-gamma; 0 outside [0, n].
double pmf(unsigned n, double p, long k);

// P(|2 S_n - n| < x sqrt(n)) for fair coins.
double window_prob_sym(const SymmetricWindow& w);

// P(m <= S_n < m + x sqrt(npq)).
double window_prob_gen(const GeneralWindow& w);

// I(x) = P(|Z| < x) for standard normal Z.
double gauss_mass(double x);

}  // namespace bincert::float_oracle
