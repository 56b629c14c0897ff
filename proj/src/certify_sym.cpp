#include "bincert/certify_sym.hpp"

#include "bincert/binomial.hpp"
#include "bincert/check.hpp"
#include "certify_common.hpp"

#include <stdexcept>
#include <string>

namespace bincert {

namespace {

using certify::EncFn;
using certify::Options;
using certify::Rel;

void require_positive_x(const Rational& x) {
    if (x.sign() <= 0) throw std::invalid_argument("threshold x must be positive");
}

EncFn exp_of(const Rational& t) {
    return [t](const Rational& w) { return exp_enclose(t, detail::deep(w)); };
}

// coeff * exp(t) with coeff >= 0; the exponential is evaluated tightly enough
// that the scaled width still meets the request.
EncFn scaled_exp(const Rational& coeff, const Rational& t) {
    return [coeff, t](const Rational& w) {
        const Enclosure e = exp_enclose(t, detail::deep(w / (coeff + 1)));
        return e * coeff;
    };
}

std::string num(const Rational& v) { return v.str(); }

std::string gate_note(const std::string& cond, unsigned n, const Rational& x) {
    return "gate " + cond + " fails (n=" + std::to_string(n) + ", x=" + num(x) + ")";
}

}  // namespace

bool gate_n_ge_x2(unsigned n, const Rational& x) {
    return Rational(n) >= x.squared();
}

bool gate_n_ge_2x2(unsigned n, const Rational& x) {
    return Rational(n) >= 2 * x.squared();
}

bool gate_cube_term_ok(unsigned n, const Rational& x, long j) {
    if (j <= 0) return true;
    // j^3/n^2 <= x^3/(2 sqrt(2n))  <=>  8 n j^6 <= x^6 n^4 (both sides >= 0).
    const Rational j6 = Rational(j).pow(6);
    const Rational n4 = Rational(n).pow(4);
    return 8 * Rational(n) * j6 <= x.pow(6) * n4;
}

bool odd_threshold_below_even(unsigned n, const Rational& x) {
    // x (sqrt(2n+1) - sqrt(2n)) <= 1. Squaring once reduces it to
    // x^2 - 1 <= 2x sqrt(2n); squaring again settles the positive case.
    const Rational d = x.squared() - 1;
    if (d.sign() <= 0) return true;
    return d.squared() <= 8 * Rational(n) * x.squared();
}

CertificateReport check_pi_bounds_even(unsigned n, unsigned j_max, const certify::Options& opts) {
    if (n < 1 || j_max < 1 || j_max > n)
        throw std::invalid_argument("check_pi_bounds_even: need 1 <= j_max <= n");
    CertificateReport rep;
    rep.instance =
        "kind=product-bounds-even half_index=" + std::to_string(n) + " j_max=" + std::to_string(j_max);
    const Rational nn(n);
    for (unsigned j = 0; j <= j_max; ++j) {
        const Rational pij = pi_sym(j, n);
        const Rational j2_over_n = Rational(j).squared() / nn;
        const Rational j3_over_n2 = Rational(j).pow(3) / nn.squared();
        const std::string tag = "[j=" + std::to_string(j) + "]";
        rep.add(certify::check("product_upper" + tag, Rel::LE, certify::constant(pij),
                               exp_of(-j2_over_n + j3_over_n2), opts));
        if (2 * j <= n) {
            rep.add(certify::check("product_lower" + tag, Rel::GE, certify::constant(pij),
                                   exp_of(-j2_over_n - 2 * j3_over_n2), opts));
        } else {
            rep.add(certify::gate_skip("product_lower" + tag, "requires 2j <= n"));
        }
    }
    rep.finalize();
    return rep;
}

CertificateReport check_pi_bounds_odd(unsigned n, unsigned j_max, const certify::Options& opts) {
    if (n < 1 || j_max < 1 || j_max > n)
        throw std::invalid_argument("check_pi_bounds_odd: need 1 <= j_max <= n");
    CertificateReport rep;
    rep.instance =
        "kind=product-bounds-odd half_index=" + std::to_string(n) + " j_max=" + std::to_string(j_max);
    const Rational nn(n);
    for (unsigned j = 0; j <= j_max; ++j) {
        const Rational pij = pi_sym_odd(j, n);
        const Rational j2_over_n = Rational(j).squared() / nn;
        const Rational j3_over_n2 = Rational(j).pow(3) / nn.squared();
        const std::string tag = "[j=" + std::to_string(j) + "]";
        rep.add(certify::check("tilde_product_upper" + tag, Rel::LE, certify::constant(pij),
                               exp_of(-j2_over_n + j3_over_n2), opts));
        if (2 * j <= n) {
            const Rational coeff = (nn + 1) / (nn + Rational(j) + 1);
            rep.add(certify::check("tilde_product_lower" + tag, Rel::GE, certify::constant(pij),
                                   scaled_exp(coeff, -j2_over_n - 2 * j3_over_n2), opts));
        } else {
            rep.add(certify::gate_skip("tilde_product_lower" + tag, "requires 2j <= n"));
        }
    }
    rep.finalize();
    return rep;
}

CertificateReport check_pi_tilde_window_bracket(unsigned n, const Rational& x,
                                                const certify::Options& opts) {
    require_positive_x(x);
    if (n < 1) throw std::invalid_argument("check_pi_tilde_window_bracket: need n >= 1");
    CertificateReport rep;
    rep.instance = "kind=tilde-window-bracket half_index=" + std::to_string(n) + " x=" + num(x);
    const bool gate_upper = gate_n_ge_x2(n, x);
    const bool gate_lower = gate_n_ge_2x2(n, x);
    // In-window j: (2j+1)^2 < x^2 (2n+1), and j <= n.
    const long v = strict_sqrt_floor(x.squared() * Rational(2 * static_cast<long>(n) + 1));
    const long j_hi = std::min(v >= 1 ? (v - 1) / 2 : -1, static_cast<long>(n));
    if (j_hi < 0) {
        rep.add(certify::gate_skip("tilde_window_upper", "window is empty"));
        rep.add(certify::gate_skip("tilde_window_lower", "window is empty"));
        rep.finalize();
        return rep;
    }
    const Rational nn(n);
    const Rational x3 = x.pow(3);
    const Rational two_n = 2 * nn;
    for (long j = 0; j <= j_hi; ++j) {
        const Rational pij = pi_sym_odd(static_cast<unsigned>(j), n);
        const Rational mj2_over_n = -Rational(j).squared() / nn;
        const std::string tag = "[j=" + std::to_string(j) + "]";
        if (gate_upper) {
            auto rhs = [=](const Rational& w) {
                return detail::exp_shifted_over_sqrt(mj2_over_n, x3 / 2, two_n, w);
            };
            rep.add(certify::check("tilde_window_upper" + tag, Rel::LE, certify::constant(pij), rhs,
                                   opts));
        } else {
            rep.add(certify::gate_skip("tilde_window_upper" + tag, gate_note("n >= x^2", n, x)));
        }
        if (gate_lower) {
            auto rhs = [=](const Rational& w) {
                const Enclosure root_n = detail::sqrt_rat(nn, w / 8);
                const Enclosure coeff = Enclosure(nn) / (nn + x * root_n);
                return coeff * detail::exp_shifted_over_sqrt(mj2_over_n, -x3, two_n, w / 4);
            };
            rep.add(certify::check("tilde_window_lower" + tag, Rel::GE, certify::constant(pij), rhs,
                                   opts));
        } else {
            rep.add(certify::gate_skip("tilde_window_lower" + tag, gate_note("n >= 2x^2", n, x)));
        }
    }
    rep.finalize();
    return rep;
}

CertificateReport check_window_sandwich_even(unsigned n, const Rational& x,
                                             const certify::Options& opts) {
    require_positive_x(x);
    if (n < 1) throw std::invalid_argument("check_window_sandwich_even: need n >= 1");
    CertificateReport rep;
    rep.instance = "kind=sandwich-even trials=" + std::to_string(2 * n) + " x=" + num(x);
    const bool gate_upper = gate_n_ge_x2(n, x);
    const bool gate_lower = gate_n_ge_2x2(n, x);
    if (!gate_upper && !gate_lower) {
        rep.add(certify::gate_skip("window_upper", gate_note("n >= x^2", n, x)));
        rep.add(certify::gate_skip("window_lower", gate_note("n >= 2x^2", n, x)));
        rep.finalize();
        return rep;
    }
    const Rational p_win = window_prob_sym(SymmetricWindow(2 * n, x));
    const Rational c = central_pmf_even(n);
    const Rational nn(n);
    const Rational x3 = x.pow(3);
    const Rational two_n = 2 * nn;
    if (gate_upper) {
        auto rhs = [=](const Rational& w) {
            const Enclosure root_npi = detail::sqrt_pi_times(nn, w / 8);
            const Enclosure e = detail::exp_num_over_sqrt(x3 / 2, two_n, w / 8);
            const Enclosure mass = detail::gauss_mass(x, w / 8);
            return c + root_npi * c * e * mass;
        };
        rep.add(certify::check("window_upper", Rel::LE, certify::constant(p_win), rhs, opts));
    } else {
        rep.add(certify::gate_skip("window_upper", gate_note("n >= x^2", n, x)));
    }
    if (gate_lower) {
        auto rhs = [=](const Rational& w) {
            const Enclosure root_npi = detail::sqrt_pi_times(nn, w / 8);
            const Enclosure e = detail::exp_num_over_sqrt(-x3, two_n, w / 8);
            const Enclosure mass = detail::gauss_mass(x, w / 8);
            return root_npi * c * e * mass - c;
        };
        rep.add(certify::check("window_lower", Rel::GE, certify::constant(p_win), rhs, opts));
    } else {
        rep.add(certify::gate_skip("window_lower", gate_note("n >= 2x^2", n, x)));
    }
    rep.finalize();
    return rep;
}

CertificateReport check_window_sandwich_odd(unsigned n, const Rational& x,
                                            const certify::Options& opts) {
    require_positive_x(x);
    CertificateReport rep;
    rep.instance = "kind=sandwich-odd trials=" + std::to_string(2 * n + 1) + " x=" + num(x);
    const bool gate_upper = gate_n_ge_x2(n, x);
    const bool gate_lower = gate_n_ge_2x2(n, x);
    if (!gate_upper && !gate_lower) {
        rep.add(certify::gate_skip("window_upper", gate_note("n >= x^2", n, x)));
        rep.add(certify::gate_skip("window_lower", gate_note("n >= 2x^2", n, x)));
        rep.finalize();
        return rep;
    }
    // Either gate forces n >= x^2 > 0, so the normalization below is safe.
    const Rational p_win = window_prob_sym(SymmetricWindow(2 * n + 1, x));
    const Rational ratio = p_win / central_pmf_odd(n);
    const Rational nn(n);
    const Rational x3 = x.pow(3);
    const Rational two_n = 2 * nn;
    auto mid = [=](const Rational& w) {
        return Enclosure(ratio) / detail::sqrt_pi_times(nn, w / 4);
    };
    if (gate_upper) {
        auto rhs = [=](const Rational& w) {
            const Enclosure tail = Enclosure(Rational(2)) / detail::sqrt_rat(nn, w / 8);
            const Enclosure e = detail::exp_num_over_sqrt(x3 / 2, two_n, w / 8);
            return tail + e * detail::gauss_mass(x, w / 8);
        };
        rep.add(certify::check("window_upper", Rel::LE, mid, rhs, opts));
    } else {
        rep.add(certify::gate_skip("window_upper", gate_note("n >= x^2", n, x)));
    }
    if (gate_lower) {
        // The odd window has no lattice point at its center: it can stop up to
        // half an integration cell short of x sqrt(n/2), and the ratios carry
        // the damping factor n/(n + x sqrt(n)).  Both corrections are needed:
        // at 27 trials, x = 1/2, the window holds only the two central terms
        // and its normalized mass lies strictly below e^{-x^3/sqrt(2n)} I(x).
        auto lhs = [=](const Rational& w) {
            const Enclosure root_n = detail::sqrt_rat(nn, w / 8);
            const Enclosure damp = root_n / (root_n + x);
            const Enclosure e = detail::exp_num_over_sqrt(-x3, two_n, w / 8);
            return damp * e * detail::gauss_mass(x, w / 8) -
                   detail::sqrt_pi_times(nn, w / 8).reciprocal();
        };
        rep.add(certify::check("window_lower", Rel::GE, mid, lhs, opts));
    } else {
        rep.add(certify::gate_skip("window_lower", gate_note("n >= 2x^2", n, x)));
    }
    rep.finalize();
    return rep;
}

CertificateReport certify_nonasymptotic_even(unsigned n, const Rational& x,
                                             const certify::Options& opts) {
    require_positive_x(x);
    if (n < 1) throw std::invalid_argument("certify_nonasymptotic_even: need n >= 1");
    CertificateReport rep;
    rep.instance = "kind=nonasymptotic-even trials=" + std::to_string(2 * n) + " x=" + num(x);
    static const char* names[] = {"abs_diff_bound",       "one_sided_upper", "one_sided_lower",
                                  "upper_slack_fold",     "lower_prefactor_fold",
                                  "lower_slack_fold"};
    if (!gate_n_ge_2x2(n, x)) {
        for (const char* name : names)
            rep.add(certify::gate_skip(name, gate_note("n >= max(2x^2, 1)", n, x)));
        rep.finalize();
        return rep;
    }
    const Rational p_win = window_prob_sym(SymmetricWindow(2 * n, x));
    const Rational nn(n);
    const Rational x3 = x.pow(3);
    const Rational two_n = 2 * nn;
    rep.add(certify::check(
        names[0], Rel::LE,
        [=](const Rational& w) { return (Enclosure(p_win) - detail::gauss_mass(x, w)).abs(); },
        [=](const Rational& w) { return detail::exp_num_over_sqrt(x3 + 2, nn, w / 2) - Rational(1); },
        opts));
    rep.add(certify::check(
        names[1], Rel::LE, certify::constant(p_win),
        [=](const Rational& w) {
            return detail::gauss_mass(x, w / 4) +
                   detail::exp_num_over_sqrt((x3 + 2) / 2, two_n, w / 4) - Rational(1);
        },
        opts));
    rep.add(certify::check(
        names[2], Rel::GE, certify::constant(p_win),
        [=](const Rational& w) {
            return detail::gauss_mass(x, w / 4) +
                   (Rational(1) - detail::exp_num_over_sqrt(x3 + 2, nn, w / 4));
        },
        opts));
    rep.add(certify::check(
        names[3], Rel::LE,
        [=](const Rational& w) {
            return detail::exp_num_over_sqrt(x3 / 2, two_n, w / 4) +
                   detail::sqrt_pi_times(nn, w / 4).reciprocal();
        },
        [=](const Rational& w) { return detail::exp_num_over_sqrt((x3 + 2) / 2, two_n, w / 2); },
        opts));
    rep.add(certify::check(
        names[4], Rel::LE,
        [=](const Rational& w) {
            return detail::exp_shifted_over_sqrt(-1 / (4 * nn), -x3, two_n, w / 2);
        },
        [=](const Rational& w) {
            return detail::exp_num_over_sqrt(-x3, two_n, w / 4) /
                   detail::sqrt_rat(1 + 1 / two_n, w / 4);
        },
        opts));
    rep.add(certify::check(
        names[5], Rel::LE,
        [=](const Rational& w) {
            return Rational(1) - detail::exp_num_over_sqrt(x3 + 2, nn, w / 2);
        },
        [=](const Rational& w) {
            return detail::exp_shifted_over_sqrt(-1 / (4 * nn), -x3, two_n, w / 4) - Rational(1) -
                   Enclosure(Rational(1)) / detail::sqrt_rat(two_n, w / 4);
        },
        opts));
    rep.finalize();
    return rep;
}

CertificateReport certify_nonasymptotic_odd(unsigned n, const Rational& x,
                                            const certify::Options& opts) {
    require_positive_x(x);
    CertificateReport rep;
    rep.instance = "kind=nonasymptotic-odd trials=" + std::to_string(2 * n + 1) + " x=" + num(x);
    if (n < 1 || !gate_n_ge_2x2(n, x)) {
        for (const char* name : {"abs_diff_bound", "one_sided_upper", "one_sided_lower"})
            rep.add(certify::gate_skip(name, gate_note("n >= max(2x^2, 1)", n, x)));
        rep.finalize();
        return rep;
    }
    const Rational p_win = window_prob_sym(SymmetricWindow(2 * n + 1, x));
    const Rational nn(n);
    const Rational x3 = x.pow(3);
    auto slack = [=](const Rational& w) {
        return detail::exp_num_over_sqrt(x3 + 2, nn, w) - Rational(1);
    };
    rep.add(certify::check(
        "abs_diff_bound", Rel::LE,
        [=](const Rational& w) { return (Enclosure(p_win) - detail::gauss_mass(x, w)).abs(); },
        [=](const Rational& w) { return slack(w / 2); }, opts));
    rep.add(certify::check(
        "one_sided_upper", Rel::LE, certify::constant(p_win),
        [=](const Rational& w) { return detail::gauss_mass(x, w / 4) + slack(w / 4); }, opts));
    rep.add(certify::check(
        "one_sided_lower", Rel::GE, certify::constant(p_win),
        [=](const Rational& w) { return detail::gauss_mass(x, w / 4) - slack(w / 4); }, opts));
    rep.finalize();
    return rep;
}

CertificateReport certify_unified(unsigned n_total, const Rational& x,
                                  const certify::Options& opts) {
    require_positive_x(x);
    if (n_total < 1) throw std::invalid_argument("certify_unified: need n_total >= 1");
    CertificateReport rep;
    rep.instance = "kind=unified trials=" + std::to_string(n_total) + " x=" + num(x);
    if (n_total < 2 || Rational(n_total) < 4 * x.squared()) {
        rep.add(certify::gate_skip("abs_diff_bound",
                                   "gate n >= max(4x^2, 2) fails (n=" + std::to_string(n_total) +
                                       ", x=" + num(x) + ")"));
        rep.finalize();
        return rep;
    }
    const Rational p_win = window_prob_sym(SymmetricWindow(n_total, x));
    const Rational nt(n_total);
    const Rational numerator = 4 * x.pow(3) + 8;
    rep.add(certify::check(
        "abs_diff_bound", Rel::LE,
        [=](const Rational& w) { return (Enclosure(p_win) - detail::gauss_mass(x, w)).abs(); },
        [=](const Rational& w) {
            return detail::exp_num_over_sqrt(numerator, nt, w / 2) - Rational(1);
        },
        opts));
    rep.finalize();
    return rep;
}

IntervalDifference interval_difference(const Rational& x, const Rational& y, unsigned n_total,
                                       const certify::Options& opts) {
    if (x.sign() <= 0 || x >= y) throw std::invalid_argument("interval_difference: need 0 < x < y");
    if (n_total < 1) throw std::invalid_argument("interval_difference: need n_total >= 1");
    const Rational wide = window_prob_sym(SymmetricWindow(n_total, y));
    const Rational narrow = window_prob_sym(SymmetricWindow(n_total, x));
    const Rational prob = wide - narrow;
    internal_check(prob.sign() >= 0, "nested windows give a nonnegative difference");
    const Rational w = opts.start_width;
    const Enclosure diff =
        (detail::gauss_mass(y, w / 2) - detail::gauss_mass(x, w / 2)).clamp(Rational(0), Rational(1));
    return {prob, diff};
}

CertificateReport upper_chain_ordering(unsigned n, const Rational& x,
                                       const certify::Options& opts) {
    require_positive_x(x);
    if (n < 1) throw std::invalid_argument("upper_chain_ordering: need n >= 1");
    CertificateReport rep;
    rep.instance = "kind=upper-chain half_index=" + std::to_string(n) + " x=" + num(x);
    if (!gate_n_ge_x2(n, x)) {
        for (const char* name :
             {"window_le_sum_form", "sum_form_le_integral_form", "integral_forms_consistent"})
            rep.add(certify::gate_skip(name, gate_note("n >= x^2", n, x)));
        rep.finalize();
        return rep;
    }
    const Rational p_win = window_prob_sym(SymmetricWindow(2 * n, x));
    const Rational c = central_pmf_even(n);
    const Rational nn(n);
    const Rational x3 = x.pow(3);
    const Rational two_n = 2 * nn;
    // Indices 1 <= j < x sqrt(n/2), i.e. j^2 < x^2 n / 2.
    const long j_v = strict_sqrt_floor(x.squared() * nn / 2);
    auto sum_form = [=](const Rational& w) {
        const Rational slice = w / (4 * (Rational(j_v) + 2));
        const Enclosure e = detail::exp_num_over_sqrt(x3 / 2, two_n, slice);
        Enclosure acc(Rational(0));
        for (long j = 1; j <= j_v; ++j)
            acc = acc + exp_enclose(-Rational(j).squared() / nn, detail::deep(slice));
        return c * (1 + 2 * e * acc);
    };
    auto integral_form = [=](const Rational& w) {
        const Enclosure root_npi = detail::sqrt_pi_times(nn, w / 8);
        const Enclosure e = detail::exp_num_over_sqrt(x3 / 2, two_n, w / 8);
        return c + root_npi * c * e * detail::gauss_mass(x, w / 8);
    };
    auto integral_form_raw = [=](const Rational& w) {
        const Enclosure root = detail::sqrt_rat(two_n, w / 8);
        const Enclosure e = detail::exp_num_over_sqrt(x3 / 2, two_n, w / 8);
        return c * (1 + root * e * gauss_half_series(x, w / 8));
    };
    rep.add(certify::check("window_le_sum_form", Rel::LE, certify::constant(p_win), sum_form, opts));
    rep.add(
        certify::check("sum_form_le_integral_form", Rel::LE, sum_form, integral_form, opts));
    // The two integral forms describe the same real number through different
    // evaluation pipelines, so their enclosures must overlap.
    {
        const Enclosure a = integral_form(opts.start_width);
        const Enclosure b = integral_form_raw(opts.start_width);
        auto show = [](const Enclosure& e) {
            return "[" + e.lo().decimal(18) + ", " + e.hi().decimal(18) + "]";
        };
        Claim consistency;
        consistency.name = "integral_forms_consistent";
        consistency.relation = "==";
        consistency.lhs = show(a);
        consistency.rhs = show(b);
        const bool overlap = !(a.hi() < b.lo() || b.hi() < a.lo());
        consistency.verdict = overlap ? Verdict::Holds : Verdict::Violated;
        if (!overlap) consistency.note = "enclosures of equal quantities are disjoint";
        rep.add(std::move(consistency));
    }
    rep.finalize();
    return rep;
}

}  // namespace bincert
