#include "bincert/transcend.hpp"

#include <stdexcept>

namespace bincert {

namespace {

long to_long_checked(const Int& v) {
    if (!v.fits_slong_p()) throw std::domain_error("transcend: argument magnitude out of range");
    return v.get_si();
}

// Smallest B >= 0 with 2^-B <= w.
long width_bits(const Rational& w) {
    if (w.sign() <= 0) throw std::invalid_argument("width_bits: nonpositive width");
    if (w >= 1) return 0;
    const long nb = static_cast<long>(mpz_sizeinbase(w.num().get_mpz_t(), 2));
    const long db = static_cast<long>(mpz_sizeinbase(w.den().get_mpz_t(), 2));
    return std::max(db - nb + 1, 0L);
}

// Dyadic bounds on the magnitude of exp(t), from 11/8 < log2(e) < 3/2:
// 2^lo_exp <= e^t <= 2^hi_exp.
long exp2_hi_exponent(const Rational& t) {
    const Rational b = t.sign() >= 0 ? t * Rational(3, 2) : t * Rational(11, 8);
    return to_long_checked(b.ceil());
}

long exp2_lo_exponent(const Rational& t) {
    const Rational b = t.sign() >= 0 ? t * Rational(11, 8) : t * Rational(3, 2);
    return to_long_checked(b.floor());
}

// One ladder round: Taylor order d on the reduced argument u (|u| <= 1/2),
// then k squarings, rounding outward to the 2^-D grid after every step.
Enclosure exp_round(const Rational& u, long k, long d, unsigned D) {
    Rational s(1), term(1);
    for (long i = 1; i <= d; ++i) {
        term *= u;
        term /= i;
        s += term;
    }
    // |tail| <= |u|^{d+1}/(d+1)! * 1/(1 - |u|/(d+2)) <= |u|^{d+1}/(d+1)! * 3/2
    const Rational tail = term.abs() * u.abs() * Rational(3, 2 * (d + 1));
    Rational lo = u.sign() >= 0 ? s : s - tail;
    const Rational hi = s + tail;
    if (lo.sign() < 0) lo = Rational(0);  // exp is positive; keep the bracket sound
    Enclosure e = Enclosure(lo, hi).outward_round(D);
    for (long i = 0; i < k; ++i) {
        Rational l2 = e.lo() * e.lo();
        Rational h2 = e.hi() * e.hi();
        e = Enclosure(std::move(l2), std::move(h2)).outward_round(D);
    }
    return e;
}

}  // namespace

Enclosure exp_enclose(const Rational& t, const Precision& prec) {
    if (t.is_zero()) return Enclosure(Rational(1));

    Rational u = t;
    long k = 0;
    const Rational half(1, 2);
    while (u.abs() > half) {
        u /= 2;
        ++k;
    }

    // Skip rounds whose rounding grid cannot even represent the result scale;
    // the starting round depends only on t, so calls at different targets walk
    // the same chain and refinement stays nested.
    long min_grid = k + 8;
    if (t.sign() < 0)
        min_grid = std::max(min_grid, -exp2_lo_exponent(t) + 8);
    else
        min_grid = std::max(min_grid, exp2_hi_exponent(t) + k + 8);
    if (min_grid > (1L << 24)) throw std::domain_error("exp_enclose: argument too large");
    int r_start = 0;
    while ((64L << r_start) < min_grid) ++r_start;

    const Rational one_plus_t = Rational(1) + t;
    const bool check_floor = t >= Rational(-1);
    bool have = false;
    Enclosure acc(Rational(0));
    for (int r = r_start; r <= r_start + prec.max_refinements; ++r) {
        const long d = 6L << r;
        const unsigned D = static_cast<unsigned>(64L << r);
        const Enclosure e = exp_round(u, k, d, D);
        acc = have ? acc.intersect(e) : e;
        have = true;
        if (acc.width() <= prec.target_width && (!check_floor || acc.lo() >= one_plus_t))
            return acc;
    }
    acc.set_exhausted(true);
    return acc;
}

Enclosure sqrt_enclose(const Rational& t, const Precision& prec) {
    if (t.sign() < 0) throw std::domain_error("sqrt_enclose: negative argument");
    if (t.is_zero()) return Enclosure(Rational(0));
    if (mpz_perfect_square_p(t.num().get_mpz_t()) && mpz_perfect_square_p(t.den().get_mpz_t())) {
        Int rn, rd;
        mpz_sqrt(rn.get_mpz_t(), t.num().get_mpz_t());
        mpz_sqrt(rd.get_mpz_t(), t.den().get_mpz_t());
        return Enclosure(Rational(rn, rd));
    }
    const unsigned long B = static_cast<unsigned long>(width_bits(prec.target_width)) + 1;
    Int shifted = t.num() << (2 * B);
    Int q;
    mpz_fdiv_q(q.get_mpz_t(), shifted.get_mpz_t(), t.den().get_mpz_t());
    Int s;
    mpz_sqrt(s.get_mpz_t(), q.get_mpz_t());
    const Int grid = Int(1) << B;
    // s = floor(sqrt(floor(t*4^B))): s^2 <= t*4^B and (s+1)^2 > t*4^B.
    return Enclosure(Rational(s, grid), Rational(s + 1, grid));
}

namespace {

// Bracket of arctan(1/x) for integer x >= 2 from m+1 leading series terms;
// the alternating tail is bounded by the first omitted term.
Enclosure arctan_recip(long x, long m) {
    Rational s(0);
    Rational p(1, x);
    const Rational x2 = p.squared();
    for (long i = 0; i <= m; ++i) {
        const Rational term = p / (2 * i + 1);
        if (i % 2 == 0)
            s += term;
        else
            s -= term;
        p *= x2;
    }
    const Rational tail = p / (2 * m + 3);
    return Enclosure(s - tail, s + tail);
}

}  // namespace

Enclosure pi_enclose(const Precision& prec) {
    bool have = false;
    Enclosure acc(Rational(0));
    for (int r = 0; r <= prec.max_refinements; ++r) {
        const long m = 10L << r;
        const Enclosure e = arctan_recip(5, m) * Rational(16) - arctan_recip(239, m) * Rational(4);
        acc = have ? acc.intersect(e) : e;
        have = true;
        if (acc.width() <= prec.target_width) return acc;
    }
    acc.set_exhausted(true);
    return acc;
}

Enclosure exp_enclose(const Enclosure& t, const Precision& prec) {
    const Precision half{prec.target_width / 2, prec.max_refinements};
    const Enclosure lo = exp_enclose(t.lo(), half);
    const Enclosure hi = exp_enclose(t.hi(), half);
    Enclosure out(lo.lo(), hi.hi());
    out.set_exhausted(lo.refinement_exhausted() || hi.refinement_exhausted() || t.refinement_exhausted());
    return out;
}

Enclosure sqrt_enclose(const Enclosure& t, const Precision& prec) {
    const Precision half{prec.target_width / 2, prec.max_refinements};
    const Enclosure lo = sqrt_enclose(t.lo(), half);
    const Enclosure hi = sqrt_enclose(t.hi(), half);
    Enclosure out(lo.lo(), hi.hi());
    out.set_exhausted(lo.refinement_exhausted() || hi.refinement_exhausted() || t.refinement_exhausted());
    return out;
}

}  // namespace bincert
