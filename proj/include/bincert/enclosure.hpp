#pragma once

#include "bincert/rational.hpp"

#include <iosfwd>
#include <string>

namespace bincert {

// Requested tightness for enclosure-producing operations. target_width is an
// absolute bound on hi - lo; producers refine until they meet it or run out
// of rounds, in which case the result carries the refinement_exhausted flag.
struct Precision {
    Rational target_width;
    int max_refinements = 6;
};

// Precision with target width 10^-digits.
Precision prec_pow10(int digits, int max_refinements = 6);

enum class Cmp { Less, Greater, Overlapping };

// Closed rational interval [lo, hi] certified to contain a real value.
// Arithmetic never rounds inward: the result of any operation contains the
// image of every point of the operands.
class Enclosure {
public:
    explicit Enclosure(const Rational& point) : lo_(point), hi_(point) {}
    Enclosure(Rational lo, Rational hi);

    const Rational& lo() const { return lo_; }
    const Rational& hi() const { return hi_; }
    Rational width() const { return hi_ - lo_; }
    Rational midpoint() const { return (lo_ + hi_) / 2; }
    bool is_point() const { return lo_ == hi_; }
    bool contains(const Rational& v) const { return lo_ <= v && v <= hi_; }
    bool contains(const Enclosure& o) const { return lo_ <= o.lo_ && o.hi_ <= hi_; }

    bool refinement_exhausted() const { return exhausted_; }
    void set_exhausted(bool v) { exhausted_ = v; }

    // Intersection of two enclosures of the same value; empty intersection
    // means at least one of them was unsound, so it throws std::logic_error.
    Enclosure intersect(const Enclosure& o) const;
    static Enclosure hull(const Enclosure& a, const Enclosure& b);

    // Widens endpoints outward to the dyadic grid with denominator 2^bits.
    Enclosure outward_round(unsigned bits) const;

    // Intersects with [lo_bound, hi_bound] (for values known a priori to lie
    // in that range).
    Enclosure clamp(const Rational& lo_bound, const Rational& hi_bound) const;

    Enclosure abs() const;
    Enclosure reciprocal() const;  // throws std::domain_error if 0 is inside

    friend Enclosure operator+(const Enclosure& a, const Enclosure& b);
    friend Enclosure operator-(const Enclosure& a, const Enclosure& b);
    friend Enclosure operator*(const Enclosure& a, const Enclosure& b);
    friend Enclosure operator/(const Enclosure& a, const Enclosure& b);
    Enclosure operator-() const;

    friend Enclosure operator+(const Enclosure& a, const Rational& b);
    friend Enclosure operator+(const Rational& a, const Enclosure& b) { return b + a; }
    friend Enclosure operator-(const Enclosure& a, const Rational& b);
    friend Enclosure operator-(const Rational& a, const Enclosure& b);
    friend Enclosure operator*(const Enclosure& a, const Rational& b);
    friend Enclosure operator*(const Rational& a, const Enclosure& b) { return b * a; }
    friend Enclosure operator/(const Enclosure& a, const Rational& b);

    std::string str() const;  // "[lo, hi]" with exact endpoints

private:
    Rational lo_, hi_;
    bool exhausted_ = false;
};

// Certified three-way comparison. Less and Greater are proofs about the
// underlying real values; Overlapping means the enclosures are too wide to
// decide and is the only admissible answer in that case.
Cmp cmp_certified(const Enclosure& a, const Enclosure& b);

std::ostream& operator<<(std::ostream& os, const Enclosure& e);

}  // namespace bincert
