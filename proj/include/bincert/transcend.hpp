#pragma once

#include "bincert/enclosure.hpp"

namespace bincert {

// Enclosure of exp(t) for rational t. Uses the reduction
// exp(t) = exp(t/2^k)^(2^k) with |t/2^k| <= 1/2, a truncated Taylor sum with
// an explicit tail bound on the reduced argument, and repeated squaring with
// outward dyadic rounding. Refinement is a deterministic ladder keyed only on
// (t, round), with successive rounds intersected, so a tighter target always
// yields an enclosure nested inside a looser one. The result additionally
// satisfies lo >= 1 + t for t >= -1 once the width permits; that condition is
// part of the convergence test, never forced.
Enclosure exp_enclose(const Rational& t, const Precision& prec);

// Enclosure of sqrt(t); exact for perfect squares of rationals, otherwise a
// dyadic bracket [s/2^B, (s+1)/2^B] from an integer square root. t < 0 throws
// std::domain_error.
Enclosure sqrt_enclose(const Rational& t, const Precision& prec);

// Enclosure of pi from 16*arctan(1/5) - 4*arctan(1/239), each arctangent
// bracketed by the alternating-series tail bound.
Enclosure pi_enclose(const Precision& prec);

// Monotone extensions to interval arguments.
Enclosure exp_enclose(const Enclosure& t, const Precision& prec);
Enclosure sqrt_enclose(const Enclosure& t, const Precision& prec);

}  // namespace bincert
