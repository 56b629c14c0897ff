#include "bincert/wallis.hpp"

#include "bincert/binomial.hpp"
#include "bincert/check.hpp"
#include "bincert/transcend.hpp"

namespace bincert {

WallisValue wallis(unsigned n) {
    return wallis_upto(n).back();
}

std::vector<WallisValue> wallis_upto(unsigned n) {
    std::vector<WallisValue> w;
    w.reserve(n + 1);
    w.push_back(WallisValue{Rational(1, 2), 1});
    if (n >= 1) w.push_back(WallisValue{Rational(1), 0});
    for (unsigned i = 2; i <= n; ++i)
        w.push_back(WallisValue{w[i - 2].coeff * Rational(static_cast<long>(i) - 1, static_cast<long>(i)),
                                w[i - 2].pi_power});
    return w;
}

ProductIdentityResult check_product_identity(unsigned n) {
    if (n == 0) throw std::invalid_argument("check_product_identity: n must be >= 1");
    const auto w = wallis_upto(n);
    WallisValue prod = w[n] * w[n - 1];
    prod.coeff *= Rational(static_cast<long>(n));
    const bool pass = prod == WallisValue{Rational(1, 2), 1};
    return ProductIdentityResult{pass, prod};
}

namespace {

// Certifies bracket_lo <= coeff * pi <= bracket_hi, refining the pi enclosure
// until the comparison is decided or rounds run out.
SandwichResult certify_pi_bracket(Rational coeff, Rational lo, Rational hi, const Precision& prec) {
    Rational w = prec.target_width;
    Enclosure value(Rational(0));
    for (int round = 0; round <= prec.max_refinements; ++round) {
        value = pi_enclose(Precision{w, prec.max_refinements}) * coeff;
        if (value.lo() >= lo && value.hi() <= hi)
            return SandwichResult{coeff, lo, hi, value, Verdict::Holds};
        if (value.hi() < lo || value.lo() > hi)
            return SandwichResult{coeff, lo, hi, value, Verdict::Violated};
        w *= pow10(-10);
    }
    return SandwichResult{coeff, lo, hi, value, Verdict::Undecided};
}

}  // namespace

SandwichResult central_sandwich_even(unsigned n, const Precision& prec) {
    if (n == 0) throw std::invalid_argument("central_sandwich_even: n must be >= 1");
    const Rational nr(static_cast<long>(n));
    const Rational coeff = nr * central_pmf_even(n).squared();
    const Rational hi(1);
    const Rational lo = (Rational(1) + Rational(1) / (2 * nr)).reciprocal();
    return certify_pi_bracket(coeff, lo, hi, prec);
}

SandwichResult central_sandwich_odd(unsigned n, const Precision& prec) {
    if (n == 0) throw std::invalid_argument("central_sandwich_odd: n must be >= 1");
    const Rational nr(static_cast<long>(n));
    const Rational coeff = nr * central_pmf_odd(n).squared();
    const Rational hi(1);
    const Rational lo = (Rational(1) + Rational(1) / (2 * nr)).pow(3).reciprocal();
    return certify_pi_bracket(coeff, lo, hi, prec);
}

RatioBracket wallis_ratio_bracket(unsigned n, const Precision& prec) {
    if (n == 0) throw std::invalid_argument("wallis_ratio_bracket: n must be >= 1");
    const auto w = wallis_upto(2 * n + 1);
    internal_check(w[2 * n].pi_power == 1 && w[2 * n + 1].pi_power == 0,
                   "wallis parity of pi powers");
    const Rational ratio_coeff = w[2 * n].coeff / w[2 * n + 1].coeff;
    // W_{2n}/W_{2n+1} = (n + 1/2) pi P(S_{2n} = n)^2
    internal_check(ratio_coeff ==
                       (Rational(static_cast<long>(n)) + Rational(1, 2)) * central_pmf_even(n).squared(),
                   "wallis ratio vs central term");
    const SandwichResult s = certify_pi_bracket(
        ratio_coeff, Rational(1), Rational(1) + Rational(1, 2 * static_cast<long>(n)), prec);
    return RatioBracket{ratio_coeff, s.value, s.verdict};
}

}  // namespace bincert
