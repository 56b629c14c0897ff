#include "bincert/enclosure.hpp"
#include "bincert/transcend.hpp"

#include <doctest.h>

#include <random>
#include <stdexcept>

using bincert::Cmp;
using bincert::Enclosure;
using bincert::Precision;
using bincert::Rational;
using bincert::cmp_certified;
using bincert::exp_enclose;
using bincert::pi_enclose;
using bincert::pow10;
using bincert::sqrt_enclose;

namespace {

const Precision kTight{pow10(-30), 8};
const Precision kLoose{pow10(-12), 8};

}  // namespace

TEST_CASE("interval arithmetic contains the pointwise images") {
    const Enclosure a(Rational(1, 3), Rational(1, 2));
    const Enclosure b(Rational(-2), Rational(3, 4));
    const Enclosure sum = a + b;
    CHECK(sum.lo() == Rational(1, 3) - 2);
    CHECK(sum.hi() == Rational(1, 2) + Rational(3, 4));
    const Enclosure prod = a * b;
    CHECK(prod.contains(Rational(1, 3) * Rational(-2)));
    CHECK(prod.contains(Rational(1, 2) * Rational(3, 4)));
    CHECK(prod.contains(Rational(0)));
    const Enclosure diff = a - b;
    CHECK(diff.lo() == Rational(1, 3) - Rational(3, 4));
    CHECK(diff.hi() == Rational(1, 2) + 2);
    CHECK((-a).hi() == -Rational(1, 3));
}

TEST_CASE("division and reciprocal guard against zero") {
    const Enclosure pos(Rational(1, 4), Rational(1, 2));
    const Enclosure r = pos.reciprocal();
    CHECK(r.lo() == Rational(2));
    CHECK(r.hi() == Rational(4));
    const Enclosure straddles(Rational(-1), Rational(1));
    CHECK_THROWS_AS(straddles.reciprocal(), std::domain_error);
    CHECK_THROWS_AS(pos / straddles, std::domain_error);
    const Enclosure neg(Rational(-4), Rational(-2));
    CHECK(neg.reciprocal().lo() == Rational(-1, 2));
    CHECK(neg.reciprocal().hi() == Rational(-1, 4));
}

TEST_CASE("abs, clamp, hull, intersect") {
    const Enclosure e(Rational(-3), Rational(2));
    CHECK(e.abs().lo() == Rational(0));
    CHECK(e.abs().hi() == Rational(3));
    const Enclosure pos(Rational(1), Rational(2));
    CHECK(pos.abs().lo() == Rational(1));

    CHECK(e.clamp(Rational(-1), Rational(5)).lo() == Rational(-1));
    CHECK(e.clamp(Rational(-1), Rational(5)).hi() == Rational(2));

    const Enclosure h = Enclosure::hull(Enclosure(Rational(0)), Enclosure(Rational(7)));
    CHECK(h.lo() == Rational(0));
    CHECK(h.hi() == Rational(7));

    const Enclosure i = Enclosure(Rational(0), Rational(3)).intersect(Enclosure(Rational(2), Rational(5)));
    CHECK(i.lo() == Rational(2));
    CHECK(i.hi() == Rational(3));
    CHECK_THROWS_AS(Enclosure(Rational(0), Rational(1)).intersect(Enclosure(Rational(2), Rational(3))),
                    std::logic_error);
}

TEST_CASE("outward rounding only widens") {
    const Enclosure e(Rational(1, 3), Rational(2, 3));
    const Enclosure r = e.outward_round(8);
    CHECK(r.lo() <= e.lo());
    CHECK(r.hi() >= e.hi());
    CHECK(r.lo().den() <= 256);
    CHECK(r.hi().den() <= 256);
    CHECK(r.contains(e));
}

TEST_CASE("certified comparison admits only sound answers") {
    CHECK(cmp_certified(Enclosure(Rational(0), Rational(1)), Enclosure(Rational(2), Rational(3))) ==
          Cmp::Less);
    CHECK(cmp_certified(Enclosure(Rational(2), Rational(3)), Enclosure(Rational(0), Rational(1))) ==
          Cmp::Greater);
    CHECK(cmp_certified(Enclosure(Rational(0), Rational(2)), Enclosure(Rational(1), Rational(3))) ==
          Cmp::Overlapping);
    // shared endpoint: equality cannot be excluded
    CHECK(cmp_certified(Enclosure(Rational(0), Rational(1)), Enclosure(Rational(1), Rational(2))) ==
          Cmp::Overlapping);
}

// A reference truncated to ~39 digits sits within 1e-36 of the true value;
// an enclosure of width <= 1e-30 must place its midpoint within 1e-30 of it.
// (Containment of the truncated point itself is not guaranteed: an endpoint
// may hug the true value more tightly than the reference's truncation error.)
bool pins(const Enclosure& e, const char* digits) {
    return e.width() <= pow10(-30) && (e.midpoint() - Rational::parse(digits)).abs() < pow10(-30);
}

TEST_CASE("exp enclosure matches reference digits") {
    // reference digits from the Taylor series summed far past the precision used
    CHECK(pins(exp_enclose(Rational(1), kTight), "2.718281828459045235360287471352662497757"));
    CHECK(pins(exp_enclose(Rational(-1), kTight), "0.367879441171442321595523770161460867445"));
    const Enclosure eq = exp_enclose(Rational(-1, 4), kTight);
    CHECK(pins(eq, "0.778800783071404868245170266978320647296"));
    CHECK(eq.lo() >= Rational(3, 4));
    CHECK(pins(exp_enclose(Rational(10), kTight), "22026.4657948067165169579006452842443663535"));
    CHECK(exp_enclose(Rational(0), kTight).is_point());
    CHECK(exp_enclose(Rational(0), kTight).lo() == Rational(1));
}

TEST_CASE("exp enclosure stays above the tangent line") {
    std::mt19937 rng(20240817u);
    std::uniform_int_distribution<long> num(-10000, 10000);
    for (int i = 0; i < 1000; ++i) {
        const Rational t(num(rng), 1000);
        const Enclosure e = exp_enclose(t, kLoose);
        if (t >= Rational(-1)) CHECK(e.lo() >= 1 + t);
        CHECK(e.lo().sign() > 0);
    }
}

TEST_CASE("tighter targets give nested exp enclosures") {
    const Rational t(-7, 3);
    const Enclosure loose = exp_enclose(t, Precision{pow10(-6), 8});
    const Enclosure mid = exp_enclose(t, kLoose);
    const Enclosure tight = exp_enclose(t, kTight);
    CHECK(loose.contains(mid));
    CHECK(mid.contains(tight));
    CHECK(tight.width() <= pow10(-30));
}

TEST_CASE("exp rejects astronomically large arguments") {
    CHECK_THROWS_AS(exp_enclose(Rational(1L << 26), kLoose), std::domain_error);
}

TEST_CASE("exp extends monotonically to interval arguments") {
    const Enclosure t(Rational(-1), Rational(1));
    const Enclosure e = exp_enclose(t, kLoose);
    CHECK(e.contains(exp_enclose(Rational(-1), kLoose)));
    CHECK(e.contains(exp_enclose(Rational(1), kLoose)));
    CHECK(e.contains(exp_enclose(Rational(0), kLoose)));
}

TEST_CASE("sqrt enclosure brackets reference values") {
    const Enclosure r2 = sqrt_enclose(Rational(2), kTight);
    CHECK(pins(r2, "1.414213562373095048801688724209698078569"));
    CHECK(sqrt_enclose(Rational(9, 4), kTight).contains(Rational(3, 2)));
    CHECK(sqrt_enclose(Rational(0), kTight).contains(Rational(0)));
    CHECK_THROWS_AS(sqrt_enclose(Rational(-1), kTight), std::domain_error);
    // squaring the enclosure must bracket the radicand
    const Enclosure sq = r2 * r2;
    CHECK(sq.contains(Rational(2)));
}

TEST_CASE("sqrt extends monotonically to interval arguments") {
    const Enclosure t(Rational(1, 4), Rational(4));
    const Enclosure s = sqrt_enclose(t, kLoose);
    CHECK(s.lo() <= Rational(1, 2));
    CHECK(s.hi() >= Rational(2));
    CHECK(s.contains(Rational(1)));
}

TEST_CASE("pi enclosure matches reference digits") {
    const Enclosure pi = pi_enclose(kTight);
    CHECK(pins(pi, "3.141592653589793238462643383279502884197"));
    const Enclosure loose = pi_enclose(kLoose);
    CHECK(loose.contains(pi));
}
