#pragma once

#include "bincert/enclosure.hpp"
#include "bincert/rational.hpp"
#include "bincert/verdict.hpp"

#include <vector>

namespace bincert {

// W_n = integral_0^{pi/2} sin^n, represented exactly as coeff * pi^pi_power.
// Even n gives pi_power 1, odd n gives pi_power 0; the representation is
// closed under the recurrence n W_n = (n-1) W_{n-2}.
struct WallisValue {
    Rational coeff;
    int pi_power = 0;

    friend WallisValue operator*(const WallisValue& a, const WallisValue& b) {
        return WallisValue{a.coeff * b.coeff, a.pi_power + b.pi_power};
    }
    friend bool operator==(const WallisValue& a, const WallisValue& b) {
        return a.pi_power == b.pi_power && a.coeff == b.coeff;
    }
};

// W_n via the recurrence from W_0 = pi/2, W_1 = 1.
WallisValue wallis(unsigned n);

// W_0 .. W_n in one pass.
std::vector<WallisValue> wallis_upto(unsigned n);

// n W_n W_{n-1} = pi/2, checked exactly in the (coeff, pi_power) algebra.
// Requires n >= 1.
struct ProductIdentityResult {
    bool pass;
    WallisValue product;  // n W_n W_{n-1} as computed
};
ProductIdentityResult check_product_identity(unsigned n);

// Certified sandwich for the central term, in squared form. For even trials
// (value P = P(S_{2n} = n)): 1/(1 + 1/(2n)) <= n pi P^2 <= 1. For odd trials
// (value P = P(S_{2n+1} = n)): 1/(1 + 1/(2n))^3 <= n pi P^2 <= 1.
// Requires n >= 1.
struct SandwichResult {
    Rational pi_coeff;    // n P^2; the claim is bracket_lo <= pi_coeff * pi <= bracket_hi
    Rational bracket_lo;
    Rational bracket_hi;
    Enclosure value;      // enclosure of pi_coeff * pi at the final precision
    Verdict verdict;
};
SandwichResult central_sandwich_even(unsigned n, const Precision& prec);
SandwichResult central_sandwich_odd(unsigned n, const Precision& prec);

// Certified bracket 1 <= W_{2n}/W_{2n+1} <= 1 + 1/(2n). The ratio is
// ratio_coeff * pi exactly, with ratio_coeff checked against
// (n + 1/2) P(S_{2n} = n)^2. Requires n >= 1.
struct RatioBracket {
    Rational ratio_coeff;
    Enclosure value;
    Verdict verdict;
};
RatioBracket wallis_ratio_bracket(unsigned n, const Precision& prec);

}  // namespace bincert
