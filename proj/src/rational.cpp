#include "bincert/rational.hpp"

#include <cctype>
#include <ostream>
#include <stdexcept>

namespace bincert {

Rational::Rational(long num, long den) : Rational(Int(num), Int(den)) {}

Rational::Rational(const Int& num, const Int& den) {
    if (sgn(den) == 0) throw std::domain_error("Rational: zero denominator");
    mpq_class q(num);
    q /= mpq_class(den);  // mpq arithmetic keeps the result canonical
    v_ = std::move(q);
}

Rational operator/(const Rational& a, const Rational& b) {
    if (b.is_zero()) throw std::domain_error("Rational: division by zero");
    return Rational(mpq_class(a.v_ / b.v_));
}

Rational& Rational::operator/=(const Rational& o) {
    if (o.is_zero()) throw std::domain_error("Rational: division by zero");
    v_ /= o.v_;
    return *this;
}

Rational Rational::abs() const {
    return sign() < 0 ? -*this : *this;
}

Rational Rational::reciprocal() const {
    if (is_zero()) throw std::domain_error("Rational: reciprocal of zero");
    mpq_class r;
    mpq_inv(r.get_mpq_t(), v_.get_mpq_t());
    return Rational(std::move(r));
}

Int Rational::floor() const {
    Int q;
    mpz_fdiv_q(q.get_mpz_t(), v_.get_num().get_mpz_t(), v_.get_den().get_mpz_t());
    return q;
}

Int Rational::ceil() const {
    Int q;
    mpz_cdiv_q(q.get_mpz_t(), v_.get_num().get_mpz_t(), v_.get_den().get_mpz_t());
    return q;
}

Rational Rational::pow(long k) const {
    if (k == 0) return Rational(1);
    if (k < 0) return reciprocal().pow(-k);
    Int pn, pd;
    mpz_pow_ui(pn.get_mpz_t(), v_.get_num().get_mpz_t(), static_cast<unsigned long>(k));
    mpz_pow_ui(pd.get_mpz_t(), v_.get_den().get_mpz_t(), static_cast<unsigned long>(k));
    return Rational(pn, pd);  // powers of a canonical fraction stay coprime
}

std::string Rational::str() const {
    return v_.get_str();
}

std::string Rational::decimal(int places) const {
    if (places < 0) throw std::invalid_argument("Rational::decimal: negative places");
    const bool neg = sign() < 0;
    Int a = num();
    if (neg) a = -a;
    const Int d = den();

    Int scale;
    mpz_ui_pow_ui(scale.get_mpz_t(), 10, static_cast<unsigned long>(places));
    Int scaled = a * scale;
    Int q, r;
    mpz_fdiv_qr(q.get_mpz_t(), r.get_mpz_t(), scaled.get_mpz_t(), d.get_mpz_t());

    // round half to even on the remainder
    const Int twice = r * 2;
    const int c = cmp(twice, d);
    if (c > 0 || (c == 0 && mpz_odd_p(q.get_mpz_t()))) q += 1;

    std::string digits = q.get_str();
    if (places > 0) {
        if (digits.size() <= static_cast<size_t>(places))
            digits.insert(0, static_cast<size_t>(places) + 1 - digits.size(), '0');
        digits.insert(digits.size() - static_cast<size_t>(places), ".");
    }
    if (neg && sgn(q) != 0) digits.insert(0, "-");
    return digits;
}

Rational Rational::parse(std::string_view text) {
    size_t b = 0, e = text.size();
    while (b < e && std::isspace(static_cast<unsigned char>(text[b]))) ++b;
    while (e > b && std::isspace(static_cast<unsigned char>(text[e - 1]))) --e;
    const std::string s(text.substr(b, e - b));
    if (s.empty()) throw std::invalid_argument("Rational::parse: empty input");

    if (const auto slash = s.find('/'); slash != std::string::npos) {
        const std::string ns = s.substr(0, slash), ds = s.substr(slash + 1);
        if (ns.empty() || ds.empty()) throw std::invalid_argument("Rational::parse: malformed fraction");
        try {
            return Rational(Int(ns), Int(ds));
        } catch (const std::invalid_argument&) {
            throw std::invalid_argument("Rational::parse: malformed fraction: " + s);
        }
    }

    // decimal form: [sign] digits [. digits] [e|E [sign] digits]
    std::string mant = s;
    long exp10 = 0;
    if (const auto ep = s.find_first_of("eE"); ep != std::string::npos) {
        mant = s.substr(0, ep);
        const std::string es = s.substr(ep + 1);
        if (es.empty()) throw std::invalid_argument("Rational::parse: malformed exponent: " + s);
        try {
            exp10 = std::stol(es);
        } catch (...) {
            throw std::invalid_argument("Rational::parse: malformed exponent: " + s);
        }
    }
    std::string intpart = mant, fracpart;
    if (const auto dot = mant.find('.'); dot != std::string::npos) {
        intpart = mant.substr(0, dot);
        fracpart = mant.substr(dot + 1);
    }
    bool neg = false;
    if (!intpart.empty() && (intpart[0] == '+' || intpart[0] == '-')) {
        neg = intpart[0] == '-';
        intpart.erase(0, 1);
    }
    if (intpart.empty() && fracpart.empty())
        throw std::invalid_argument("Rational::parse: no digits: " + s);
    for (const std::string* part : {&intpart, &fracpart})
        for (char ch : *part)
            if (!std::isdigit(static_cast<unsigned char>(ch)))
                throw std::invalid_argument("Rational::parse: bad digit in: " + s);

    Int numerator(intpart.empty() ? "0" : intpart);
    if (!fracpart.empty()) {
        Int fscale;
        mpz_ui_pow_ui(fscale.get_mpz_t(), 10, fracpart.size());
        numerator = numerator * fscale + Int(fracpart);
        exp10 -= static_cast<long>(fracpart.size());
    }
    Rational out(numerator);
    if (neg) out = -out;
    return out * pow10(static_cast<int>(exp10));
}

Rational pow10(int k) {
    Int p;
    mpz_ui_pow_ui(p.get_mpz_t(), 10, static_cast<unsigned long>(k < 0 ? -k : k));
    return k < 0 ? Rational(Int(1), p) : Rational(p);
}

std::ostream& operator<<(std::ostream& os, const Rational& r) {
    return os << r.str();
}

}  // namespace bincert
