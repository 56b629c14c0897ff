#include "bincert/binomial.hpp"

#include "bincert/check.hpp"

#include <algorithm>
#include <stdexcept>

namespace bincert {

namespace {

void require_p_open(const Rational& p) {
    if (p.sign() <= 0 || p >= Rational(1))
        throw std::domain_error("binomial: p must lie strictly between 0 and 1");
}

Int binom_coeff(unsigned long n, unsigned long k) {
    Int b;
    mpz_bin_uiui(b.get_mpz_t(), n, k);
    return b;
}

long to_long(const Int& v) {
    if (!v.fits_slong_p()) throw std::domain_error("binomial: index out of range");
    return v.get_si();
}

void check_unit_range(const Rational& v, const char* what) {
    internal_check(v.sign() >= 0 && v <= Rational(1), std::string(what) + " outside [0, 1]");
}

}  // namespace

PmfValue pmf(unsigned n, const Rational& p, long k) {
    require_p_open(p);
    if (k < 0 || k > static_cast<long>(n)) return Rational(0);
    const Rational q = Rational(1) - p;
    const Rational v = Rational(binom_coeff(n, static_cast<unsigned long>(k))) *
                       p.pow(k) * q.pow(static_cast<long>(n) - k);
    check_unit_range(v, "pmf");
    return v;
}

PmfValue central_pmf_even(unsigned n) {
    const Rational v(binom_coeff(2UL * n, n), Int(1) << (2 * n));
    check_unit_range(v, "central_pmf_even");
    return v;
}

PmfValue central_pmf_odd(unsigned n) {
    const Rational v(binom_coeff(2UL * n + 1, n), Int(1) << (2 * n + 1));
    // P(S_{2n+1} = n) = (2n+1)/(2n+2) P(S_{2n} = n)
    internal_check(v == central_pmf_even(n) * Rational(2 * n + 1) / Rational(2 * n + 2),
                   "odd/even central term relation");
    return v;
}

Rational pi_sym(unsigned j, unsigned n) {
    if (j > n) throw std::invalid_argument("pi_sym: j > n");
    Rational prod(1);
    for (unsigned l = 1; l <= j; ++l) prod *= Rational(static_cast<long>(n + l - j), static_cast<long>(n + l));
    internal_check(prod == Rational(binom_coeff(2UL * n, n + j), binom_coeff(2UL * n, n)),
                   "pi_sym vs binomial ratio");
    return prod;
}

Rational pi_sym_odd(unsigned j, unsigned n) {
    if (j > n) throw std::invalid_argument("pi_sym_odd: j > n");
    Rational prod(1);
    for (unsigned l = 1; l <= j; ++l) prod *= Rational(static_cast<long>(n + l - j), static_cast<long>(n + l + 1));
    internal_check(prod == Rational(static_cast<long>(n + 1), static_cast<long>(n + j + 1)) * pi_sym(j, n),
                   "pi_sym_odd vs shifted pi_sym");
    return prod;
}

CentralIndex central_index(unsigned n, const Rational& p) {
    require_p_open(p);
    const Rational np = Rational(static_cast<long>(n)) * p;
    const long m = to_long((np + p).floor());
    const Rational delta = Rational(m) - np;
    internal_check(delta > -(Rational(1) - p) && delta <= p, "central index window");
    return CentralIndex{m, delta};
}

long strict_sqrt_floor(const Rational& t) {
    if (t.sign() <= 0) throw std::invalid_argument("strict_sqrt_floor: nonpositive argument");
    Int s;
    {
        const Int f = t.floor();
        mpz_sqrt(s.get_mpz_t(), f.get_mpz_t());
    }
    while (s > 0 && Rational(s) * Rational(s) >= t) s -= 1;
    for (Int next = s + 1; Rational(next) * Rational(next) < t; next = s + 1) s = next;
    internal_check(Rational(s) * Rational(s) < t, "strict sqrt floor");
    return to_long(s);
}

SymmetricWindow::SymmetricWindow(unsigned n_, Rational x_) : n(n_), x(std::move(x_)) {
    if (n == 0) throw std::invalid_argument("SymmetricWindow: n must be >= 1");
    if (x.sign() <= 0) throw std::invalid_argument("SymmetricWindow: x must be > 0");
}

bool SymmetricWindow::contains(long k) const {
    if (k < 0 || k > static_cast<long>(n)) return false;
    const Rational dev(2 * k - static_cast<long>(n));
    return dev * dev < x.squared() * Rational(static_cast<long>(n));
}

std::pair<long, long> SymmetricWindow::k_range() const {
    const long v = strict_sqrt_floor(x.squared() * Rational(static_cast<long>(n)));
    const long ln = static_cast<long>(n);
    // |2k - n| <= v with 2k - n of the parity of n. The raw lower bound is
    // ceil((n - v)/2); when n - v < 0 the truncated form can land one high,
    // but the clamp to 0 makes that irrelevant.
    const long k_lo = std::max((ln - v + 1) / 2, 0L);
    const long k_hi = std::min((ln + v) / 2, ln);
    return {k_lo, k_hi};
}

GeneralWindow::GeneralWindow(unsigned n_, Rational p_, Rational x_)
    : n(n_), p(std::move(p_)), x(std::move(x_)) {
    if (n == 0) throw std::invalid_argument("GeneralWindow: n must be >= 1");
    require_p_open(p);
    if (x.sign() <= 0) throw std::invalid_argument("GeneralWindow: x must be > 0");
    const CentralIndex c = central_index(n, p);
    m = c.m;
    delta = c.delta;
}

bool GeneralWindow::contains(long k) const {
    if (k < m || k > static_cast<long>(n)) return false;
    const Rational dev(k - m);
    return dev * dev < x.squared() * Rational(static_cast<long>(n)) * p * q();
}

std::pair<long, long> GeneralWindow::k_range() const {
    const long v = strict_sqrt_floor(x.squared() * Rational(static_cast<long>(n)) * p * q());
    return {m, std::min(m + v, static_cast<long>(n))};
}

Rational pi_gen(const GeneralWindow& w, unsigned j) {
    if (w.m + static_cast<long>(j) > static_cast<long>(w.n))
        throw std::invalid_argument("pi_gen: m + j exceeds n");
    const Rational ratio = pmf(w.n, w.p, w.m + static_cast<long>(j)) / pmf(w.n, w.p, w.m);
    // product form in terms of npq and delta
    const Rational npq = Rational(static_cast<long>(w.n)) * w.p * w.q();
    Rational prod(1);
    for (unsigned l = 1; l <= j; ++l) {
        const Rational lr(static_cast<long>(l));
        prod *= (npq - (w.delta + lr - 1) * w.p) / (npq + (w.delta + lr) * w.q());
    }
    internal_check(prod == ratio, "pi_gen product form vs pmf ratio");
    return ratio;
}

WindowRoutes window_prob_sym_routes(const SymmetricWindow& w) {
    const auto [k_lo, k_hi] = w.k_range();
    Int total(0);
    for (long k = k_lo; k <= k_hi; ++k) total += binom_coeff(w.n, static_cast<unsigned long>(k));
    const Rational direct(total, Int(1) << w.n);

    Rational product_form(0);
    if (w.n % 2 == 0) {
        const unsigned nu = w.n / 2;
        // j < x sqrt(nu/2), i.e. j^2 < x^2 nu / 2, and j <= nu
        const long j_hi = std::min<long>(strict_sqrt_floor(w.x.squared() * Rational(static_cast<long>(nu)) / 2),
                                         static_cast<long>(nu));
        Rational sum(1), term(1);
        for (long j = 1; j <= j_hi; ++j) {
            term *= Rational(static_cast<long>(nu) + 1 - j, static_cast<long>(nu) + j);
            sum += term * 2;
        }
        product_form = central_pmf_even(nu) * sum;
    } else {
        const unsigned nu = w.n / 2;  // trials = 2 nu + 1
        // j + 1/2 < (x/2) sqrt(2 nu + 1), i.e. (2j + 1)^2 < x^2 (2 nu + 1)
        const long v = strict_sqrt_floor(w.x.squared() * Rational(static_cast<long>(w.n)));
        const long j_hi = std::min<long>(v >= 1 ? (v - 1) / 2 : -1, static_cast<long>(nu));
        Rational sum(0), term(1);
        for (long j = 0; j <= j_hi; ++j) {
            if (j > 0) term *= Rational(static_cast<long>(nu) + 1 - j, static_cast<long>(nu) + j + 1);
            sum += term;
        }
        product_form = central_pmf_odd(nu) * 2 * sum;
    }
    return WindowRoutes{direct, product_form};
}

PmfValue window_prob_sym(const SymmetricWindow& w) {
    const WindowRoutes r = window_prob_sym_routes(w);
    internal_check(r.direct == r.product_form, "symmetric window routes disagree");
    check_unit_range(r.direct, "window_prob_sym");
    return r.direct;
}

WindowRoutes window_prob_gen_routes(const GeneralWindow& w) {
    const auto [k_lo, k_hi] = w.k_range();
    Rational direct(0);
    for (long k = k_lo; k <= k_hi; ++k) direct += pmf(w.n, w.p, k);

    const Rational anchor = pmf(w.n, w.p, w.m);
    Rational sum(0), term(1);
    for (long j = 0; w.m + j <= k_hi; ++j) {
        if (j > 0)
            term *= (Rational(static_cast<long>(w.n) - w.m - j + 1) * w.p) /
                    (Rational(w.m + j) * w.q());
        sum += term;
    }
    return WindowRoutes{direct, anchor * sum};
}

PmfValue window_prob_gen(const GeneralWindow& w) {
    const WindowRoutes r = window_prob_gen_routes(w);
    internal_check(r.direct == r.product_form, "general window routes disagree");
    check_unit_range(r.direct, "window_prob_gen");
    return r.direct;
}

}  // namespace bincert
