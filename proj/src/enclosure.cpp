#include "bincert/enclosure.hpp"

#include <algorithm>
#include <ostream>
#include <stdexcept>

namespace bincert {

Precision prec_pow10(int digits, int max_refinements) {
    return Precision{pow10(-digits), max_refinements};
}

Enclosure::Enclosure(Rational lo, Rational hi) : lo_(std::move(lo)), hi_(std::move(hi)) {
    if (lo_ > hi_) throw std::logic_error("Enclosure: lo > hi");
}

Enclosure Enclosure::intersect(const Enclosure& o) const {
    const Rational& l = std::max(lo_, o.lo_);
    const Rational& h = std::min(hi_, o.hi_);
    if (l > h) throw std::logic_error("Enclosure::intersect: disjoint enclosures of one value");
    Enclosure out(l, h);
    out.exhausted_ = exhausted_ || o.exhausted_;
    return out;
}

Enclosure Enclosure::hull(const Enclosure& a, const Enclosure& b) {
    Enclosure out(std::min(a.lo_, b.lo_), std::max(a.hi_, b.hi_));
    out.exhausted_ = a.exhausted_ || b.exhausted_;
    return out;
}

Enclosure Enclosure::outward_round(unsigned bits) const {
    Int scale;
    mpz_ui_pow_ui(scale.get_mpz_t(), 2, bits);
    const Rational s(scale);
    Enclosure out(Rational((lo_ * s).floor()) / s, Rational((hi_ * s).ceil()) / s);
    out.exhausted_ = exhausted_;
    return out;
}

Enclosure Enclosure::clamp(const Rational& lo_bound, const Rational& hi_bound) const {
    return intersect(Enclosure(lo_bound, hi_bound));
}

Enclosure Enclosure::abs() const {
    Enclosure out = *this;
    if (lo_.sign() >= 0) return out;
    if (hi_.sign() <= 0) return -out;
    out = Enclosure(Rational(0), std::max(-lo_, hi_));
    out.exhausted_ = exhausted_;
    return out;
}

Enclosure Enclosure::reciprocal() const {
    if (lo_.sign() <= 0 && hi_.sign() >= 0)
        throw std::domain_error("Enclosure::reciprocal: interval contains zero");
    Enclosure out(hi_.reciprocal(), lo_.reciprocal());
    out.exhausted_ = exhausted_;
    return out;
}

Enclosure operator+(const Enclosure& a, const Enclosure& b) {
    Enclosure out(a.lo_ + b.lo_, a.hi_ + b.hi_);
    out.exhausted_ = a.exhausted_ || b.exhausted_;
    return out;
}

Enclosure operator-(const Enclosure& a, const Enclosure& b) {
    Enclosure out(a.lo_ - b.hi_, a.hi_ - b.lo_);
    out.exhausted_ = a.exhausted_ || b.exhausted_;
    return out;
}

Enclosure operator*(const Enclosure& a, const Enclosure& b) {
    const Rational p1 = a.lo_ * b.lo_, p2 = a.lo_ * b.hi_, p3 = a.hi_ * b.lo_, p4 = a.hi_ * b.hi_;
    Enclosure out(std::min({p1, p2, p3, p4}), std::max({p1, p2, p3, p4}));
    out.exhausted_ = a.exhausted_ || b.exhausted_;
    return out;
}

Enclosure operator/(const Enclosure& a, const Enclosure& b) {
    return a * b.reciprocal();
}

Enclosure Enclosure::operator-() const {
    Enclosure out(-hi_, -lo_);
    out.exhausted_ = exhausted_;
    return out;
}

Enclosure operator+(const Enclosure& a, const Rational& b) {
    Enclosure out(a.lo_ + b, a.hi_ + b);
    out.exhausted_ = a.exhausted_;
    return out;
}

Enclosure operator-(const Enclosure& a, const Rational& b) {
    Enclosure out(a.lo_ - b, a.hi_ - b);
    out.exhausted_ = a.exhausted_;
    return out;
}

Enclosure operator-(const Rational& a, const Enclosure& b) {
    Enclosure out(a - b.hi_, a - b.lo_);
    out.exhausted_ = b.exhausted_;
    return out;
}

Enclosure operator*(const Enclosure& a, const Rational& b) {
    Enclosure out = b.sign() >= 0 ? Enclosure(a.lo_ * b, a.hi_ * b) : Enclosure(a.hi_ * b, a.lo_ * b);
    out.exhausted_ = a.exhausted_;
    return out;
}

Enclosure operator/(const Enclosure& a, const Rational& b) {
    if (b.is_zero()) throw std::domain_error("Enclosure: division by zero");
    return a * b.reciprocal();
}

std::string Enclosure::str() const {
    return "[" + lo_.str() + ", " + hi_.str() + "]";
}

Cmp cmp_certified(const Enclosure& a, const Enclosure& b) {
    if (a.hi() < b.lo()) return Cmp::Less;
    if (a.lo() > b.hi()) return Cmp::Greater;
    return Cmp::Overlapping;
}

std::ostream& operator<<(std::ostream& os, const Enclosure& e) {
    return os << e.str();
}

}  // namespace bincert
