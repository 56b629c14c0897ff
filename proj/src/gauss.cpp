#include "bincert/gauss.hpp"

#include "bincert/check.hpp"
#include "bincert/transcend.hpp"

#include <stdexcept>

namespace bincert {

Enclosure gauss_half_series(const Rational& x, const Rational& target_width, unsigned* terms_used) {
    if (x.sign() < 0) throw std::domain_error("gauss_half_series: negative argument");
    if (target_width.sign() <= 0) throw std::invalid_argument("gauss_half_series: nonpositive width");
    if (x.is_zero()) {
        if (terms_used) *terms_used = 0;
        return Enclosure(Rational(0));
    }
    const Rational x2 = x.squared();
    Rational sum(0);
    Rational term = x;  // x^{2k+1} / ((2k+1) 2^k k!), here at k = 0
    const Rational half_width = target_width / 2;
    for (unsigned k = 0;; ++k) {
        sum += (k % 2 == 0) ? term : -term;
        // next term: multiply by x^2 (2k+1) / (2 (k+1) (2k+3))
        term *= x2 * Rational(2 * static_cast<long>(k) + 1);
        term /= Rational(2 * (static_cast<long>(k) + 1) * (2 * static_cast<long>(k) + 3));
        // terms decrease from here on iff x^2 (2k+3) <= 2 (k+2) (2k+5)
        const bool decreasing =
            x2 * Rational(2 * static_cast<long>(k) + 3) <=
            Rational(2 * (static_cast<long>(k) + 2) * (2 * static_cast<long>(k) + 5));
        if (decreasing && term <= half_width) {
            if (terms_used) *terms_used = k + 1;
            return Enclosure(sum - term, sum + term);
        }
        if (k > 1000000) throw std::logic_error("gauss_half_series: series failed to converge");
    }
}

Enclosure gauss_half_step_bracket(const Rational& x, unsigned partitions) {
    if (x.sign() <= 0) throw std::domain_error("gauss_half_step_bracket: x must be > 0");
    if (partitions == 0) throw std::invalid_argument("gauss_half_step_bracket: zero partitions");
    const Precision node_prec = prec_pow10(18);
    const Rational dx = x / Rational(static_cast<long>(partitions));
    Rational lo(0), hi(0);
    Enclosure prev = exp_enclose(Rational(0), node_prec);  // f(0) = 1 exactly
    for (unsigned i = 1; i <= partitions; ++i) {
        const Rational s = dx * Rational(static_cast<long>(i));
        const Enclosure node = exp_enclose(-(s.squared() / 2), node_prec);
        lo += node.lo();   // right endpoint of the cell: integrand decreases
        hi += prev.hi();   // left endpoint
        prev = node;
    }
    return Enclosure(lo * dx, hi * dx);
}

GaussianIntegral gauss_integral(const Rational& x, const Precision& prec) {
    if (x.sign() < 0) throw std::domain_error("gauss_integral: negative argument");
    if (prec.target_width.sign() <= 0) throw std::invalid_argument("gauss_integral: nonpositive width");
    if (x.is_zero()) return GaussianIntegral{x, Enclosure(Rational(0)), 0, 0};

    const Rational scale = Rational(1) + Rational(x.ceil());
    constexpr unsigned kPartitions = 64;
    unsigned terms = 0;
    Rational w = prec.target_width;
    Enclosure result(Rational(0), Rational(1));
    for (int round = 0; round <= prec.max_refinements; ++round) {
        const Rational ws = w / 8;            // unnormalized series width
        const Rational wc = w / (8 * scale);  // normalization constant width
        const Enclosure series = gauss_half_series(x, ws, &terms);
        const Enclosure two_pi = pi_enclose(Precision{wc / 4, prec.max_refinements}) * Rational(2);
        const Enclosure norm =  // 2 / sqrt(2 pi)
            Enclosure(Rational(2)) / sqrt_enclose(two_pi, Precision{wc / 4, prec.max_refinements});
        Enclosure e = (series * norm).clamp(Rational(0), Rational(1));
        // Independent bracket of the same quantity; soundness of both routes
        // makes the intersection nonempty (intersect throws otherwise).
        const Enclosure bracket =
            (gauss_half_step_bracket(x, kPartitions) * norm).clamp(Rational(0), Rational(1));
        e = e.intersect(bracket);
        result = round == 0 ? e : result.intersect(e);
        if (result.width() <= prec.target_width)
            return GaussianIntegral{x, result, terms, kPartitions};
        w *= pow10(-10);
    }
    result.set_exhausted(true);
    return GaussianIntegral{x, result, terms, kPartitions};
}

Rational gauss_tail_bound(const Rational& x) {
    const GaussianIntegral g = gauss_integral(x, prec_pow10(9));
    return std::min(g.enclosure.hi(), Rational(1));
}

}  // namespace bincert
