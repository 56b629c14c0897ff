#pragma once

#include <gmpxx.h>

#include <compare>
#include <iosfwd>
#include <string>
#include <string_view>

namespace bincert {

using Int = mpz_class;

// Exact rational number. Canonical form is maintained at all times: the
// denominator is positive and coprime to the numerator. Every operation is
// exact; division by zero throws std::domain_error.
class Rational {
public:
    Rational() : v_(0) {}
    Rational(long n) : v_(static_cast<signed long>(n)) {}  // NOLINT: implicit by design
    Rational(unsigned long n) : v_(n) {}                   // NOLINT
    Rational(int n) : v_(n) {}                             // NOLINT
    Rational(unsigned n) : v_(static_cast<unsigned long>(n)) {}  // NOLINT
    Rational(const Int& n) : v_(n) {}                      // NOLINT
    Rational(long num, long den);
    Rational(const Int& num, const Int& den);

    // Accepts "a", "a/b", and finite decimals: "0.125", "-7.5", "2.5e-3".
    static Rational parse(std::string_view text);

    Int num() const { return v_.get_num(); }
    Int den() const { return v_.get_den(); }

    int sign() const { return sgn(v_); }
    bool is_zero() const { return sgn(v_) == 0; }
    bool is_integer() const { return v_.get_den() == 1; }

    Rational abs() const;
    Rational squared() const { return Rational(mpq_class(v_ * v_)); }
    Rational reciprocal() const;
    Int floor() const;
    Int ceil() const;

    // this^k, exact; k < 0 inverts and requires a nonzero base.
    Rational pow(long k) const;

    double to_double() const { return v_.get_d(); }
    std::string str() const;                // "num/den", or "num" when integral
    std::string decimal(int places) const;  // fixed point, round half to even

    friend Rational operator+(const Rational& a, const Rational& b) {
        return Rational(mpq_class(a.v_ + b.v_));
    }
    friend Rational operator-(const Rational& a, const Rational& b) {
        return Rational(mpq_class(a.v_ - b.v_));
    }
    friend Rational operator*(const Rational& a, const Rational& b) {
        return Rational(mpq_class(a.v_ * b.v_));
    }
    friend Rational operator/(const Rational& a, const Rational& b);
    Rational operator-() const { return Rational(mpq_class(-v_)); }

    Rational& operator+=(const Rational& o) { v_ += o.v_; return *this; }
    Rational& operator-=(const Rational& o) { v_ -= o.v_; return *this; }
    Rational& operator*=(const Rational& o) { v_ *= o.v_; return *this; }
    Rational& operator/=(const Rational& o);

    friend bool operator==(const Rational& a, const Rational& b) { return mpq_equal(a.v_.get_mpq_t(), b.v_.get_mpq_t()) != 0; }
    friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
        const int c = mpq_cmp(a.v_.get_mpq_t(), b.v_.get_mpq_t());
        if (c < 0) return std::strong_ordering::less;
        if (c > 0) return std::strong_ordering::greater;
        return std::strong_ordering::equal;
    }

private:
    explicit Rational(mpq_class q) : v_(std::move(q)) {}
    mpq_class v_;
};

// 10^k as a Rational; k may be negative.
Rational pow10(int k);

std::ostream& operator<<(std::ostream& os, const Rational& r);

}  // namespace bincert
