#include "bincert/certify_gen.hpp"

#include "bincert/check.hpp"
#include "certify_common.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace bincert {

namespace {

using certify::EncFn;
using certify::Options;
using certify::Rel;

EncFn exp_of(const Rational& t) {
    return [t](const Rational& w) { return exp_enclose(t, detail::deep(w)); };
}

std::string jtag(long j) { return "[j=" + std::to_string(j) + "]"; }

// Exact value of pi(j) extended by zero past the support.
Rational pi_gen_or_zero(const GeneralWindow& win, long j) {
    if (win.m + j > static_cast<long>(win.n)) return Rational(0);
    return pi_gen(win, static_cast<unsigned>(j));
}

}  // namespace

Claim check_pi_gen_upper(const GeneralWindow& win, long j, const certify::Options& opts) {
    if (j < 0) throw std::invalid_argument("check_pi_gen_upper: j must be >= 0");
    const std::string name = "gen_product_upper" + jtag(j);
    const Rational n(win.n), p = win.p, q = win.q();
    if (Rational(j) > (n + 1) * p)
        return certify::gate_skip(name, "requires j <= (n+1)p = " + ((n + 1) * p).str());
    if (j == 0)
        return certify::gate_skip(name, "excluded at j=0: the right side is below pi(0) = 1");
    const Rational arg = -Rational(j - 1).squared() / (2 * (n + 1) * p * q) +
                         Rational(j).pow(3) / (2 * n.squared() * p.squared() * q);
    return certify::check(name, Rel::LE, certify::constant(pi_gen_or_zero(win, j)), exp_of(arg),
                          opts);
}

Claim check_pi_gen_lower(const GeneralWindow& win, long j, const certify::Options& opts) {
    if (j < 0) throw std::invalid_argument("check_pi_gen_lower: j must be >= 0");
    const std::string name = "gen_product_lower" + jtag(j);
    const Rational n(win.n), p = win.p, q = win.q();
    if (Rational(j) > (n + 1) * p * q / 2)
        return certify::gate_skip(name, "requires j <= (n+1)pq/2 = " + ((n + 1) * p * q / 2).str());
    // Within this gate the index stays inside the support (nq - delta >= j).
    internal_check(win.m + j <= static_cast<long>(win.n), "lower product gate stays in support");
    const Rational jp1 = Rational(j) + 1;
    const Rational arg = -jp1.squared() / (2 * n * p * q) - jp1.pow(3) / (n.squared() * p * q.squared());
    return certify::check(name, Rel::GE, certify::constant(pi_gen(win, static_cast<unsigned>(j))),
                          exp_of(arg), opts);
}

GeneralCertificate check_general_sandwich(const GeneralWindow& win, const certify::Options& opts) {
    GeneralCertificate cert;
    cert.p = win.p;
    cert.m = win.m;
    cert.delta = win.delta;
    CertificateReport& rep = cert.report;
    rep.instance = "kind=sandwich-general trials=" + std::to_string(win.n) + " p=" + win.p.str() +
                   " x=" + win.x.str() + " m=" + std::to_string(win.m) +
                   " delta=" + win.delta.str();
    const Rational n(win.n), p = win.p, q = win.q(), x = win.x;
    const Rational npq = n * p * q;
    const Rational x3 = x.pow(3);

    const WindowRoutes routes = window_prob_gen_routes(win);
    rep.add(certify::check_exact_eq("decomposition_identity", routes.direct, routes.product_form));

    const Rational p_win = routes.direct;
    const Rational p_m = pmf(win.n, p, win.m);

    // Upper gate n >= (q/p) x^2, i.e. np >= q x^2.
    if (n * p >= q * x.squared()) {
        auto rhs = [=](const Rational& w) {
            const Enclosure root = detail::sqrt_pi_times(2 * npq, w / 8);
            const Enclosure e = detail::exp_num_over_sqrt(x3 + 1, p * n, w / 8);
            const Enclosure bracket =
                detail::sqrt_rat(npq, w / 8).reciprocal() + detail::gauss_mass(x, w / 8) / 2;
            return root * p_m * e * bracket;
        };
        rep.add(certify::check("window_upper", Rel::LE, certify::constant(p_win), rhs, opts));
    } else {
        rep.add(certify::gate_skip("window_upper", "gate n >= (q/p) x^2 fails"));
    }

    // Lower gate x sqrt(npq) >= max(1, 2x^2): squared, x^2 npq >= 1 and npq >= 4x^2.
    if (x.squared() * npq >= 1 && npq >= 4 * x.squared()) {
        auto rhs = [=](const Rational& w) {
            const Enclosure root = detail::sqrt_pi_times(2 * npq, w / 8);
            const Enclosure e = detail::exp_num_over_sqrt(-8 * x3, q * n, w / 8);
            const Enclosure bracket =
                detail::gauss_mass(x, w / 8) / 2 - detail::sqrt_rat(npq, w / 8).reciprocal();
            return root * p_m * e * bracket;
        };
        rep.add(certify::check("window_lower", Rel::GE, certify::constant(p_win), rhs, opts));
    } else {
        rep.add(certify::gate_skip("window_lower", "gate x sqrt(npq) >= max(1, 2x^2) fails"));
    }
    rep.finalize();
    return cert;
}

ReflectionResult reflect_left_window(const GeneralWindow& win) {
    const Rational n(win.n), p = win.p, q = win.q(), x = win.x;
    const Rational nq = n * q;
    const Rational t = x.squared() * n * p * q;
    const long nl = static_cast<long>(win.n);

    // Left window in flipped coordinates kt = n - k:  nq < kt < nq + x sqrt(npq),
    // i.e. kt > nq and (kt - nq)^2 < x^2 npq.
    const auto member = [&](long kt) {
        if (kt < 0 || kt > nl) return false;
        const Rational d = Rational(kt) - nq;
        return d.sign() > 0 && d.squared() < t;
    };
    long l_lo = 0;
    {
        const Int f = nq.floor();
        internal_check(mpz_fits_slong_p(f.get_mpz_t()) != 0, "flipped index fits a machine word");
        l_lo = f.get_si() + 1;
    }
    long l_hi = l_lo - 1;
    if (l_lo <= nl) {
        long cand = static_cast<long>(std::floor(nq.to_double() + std::sqrt(t.to_double())));
        if (cand < l_lo - 1) cand = l_lo - 1;
        if (cand > nl) cand = nl;
        while (cand + 1 <= nl && member(cand + 1)) ++cand;
        while (cand >= l_lo && !member(cand)) --cand;
        l_hi = cand;
    }

    Rational left(0);
    for (long kt = l_lo; kt <= l_hi; ++kt) left += pmf(win.n, p, nl - kt);

    const GeneralWindow flipped(win.n, q, x);
    const Rational flipped_prob = window_prob_gen(flipped);
    const auto [g_lo, g_hi] = flipped.k_range();

    // Sum of q-side atoms over [a_lo, a_hi] minus those also in [b_lo, b_hi].
    const auto diff_sum = [&](long a_lo, long a_hi, long b_lo, long b_hi) {
        Rational s(0);
        const long first_hi = std::min(a_hi, b_lo - 1);
        for (long kt = a_lo; kt <= first_hi; ++kt) s += pmf(win.n, q, kt);
        const long second_lo = std::max(a_lo, b_hi + 1);
        for (long kt = second_lo; kt <= a_hi; ++kt) s += pmf(win.n, q, kt);
        return s;
    };
    const Rational adjustment = diff_sum(g_lo, g_hi, l_lo, l_hi) - diff_sum(l_lo, l_hi, g_lo, g_hi);
    internal_check(left + adjustment == flipped_prob, "reflection boundary accounting");
    return {left, flipped_prob, adjustment};
}

}  // namespace bincert
