#pragma once

// Shared enclosure composers for the certificate modules. Internal header.

#include "bincert/enclosure.hpp"
#include "bincert/gauss.hpp"
#include "bincert/transcend.hpp"

#include <map>
#include <mutex>

namespace bincert::detail {

inline Precision deep(const Rational& w) {
    return Precision{w, 8};
}

// I(x) with a process-wide cache of the tightest enclosure seen per x.
// Cached results only ever shrink (intersection), so any returned enclosure
// is sound and at least as tight as requested history allows.
inline Enclosure gauss_mass(const Rational& x, const Rational& w) {
    static std::mutex mu;
    static std::map<Rational, Enclosure> cache;
    std::scoped_lock lock(mu);
    auto it = cache.find(x);
    if (it != cache.end() && it->second.width() <= w) return it->second;
    Enclosure e = gauss_integral(x, deep(w)).enclosure;
    if (it != cache.end()) {
        e = e.intersect(it->second);
        it->second = e;
        return e;
    }
    cache.emplace(x, e);
    return e;
}

// sqrt of an exact rational.
inline Enclosure sqrt_rat(const Rational& v, const Rational& w) {
    return sqrt_enclose(v, deep(w));
}

// exp(num / sqrt(under_root)), num rational of either sign, under_root > 0.
inline Enclosure exp_num_over_sqrt(const Rational& num, const Rational& under_root, const Rational& w) {
    const Enclosure s = sqrt_rat(under_root, w / 8);
    const Enclosure arg = Enclosure(num) / s;
    return exp_enclose(arg, deep(w / 2));
}

// exp(base + num / sqrt(under_root)).
inline Enclosure exp_shifted_over_sqrt(const Rational& base, const Rational& num,
                                       const Rational& under_root, const Rational& w) {
    const Enclosure s = sqrt_rat(under_root, w / 8);
    const Enclosure arg = Enclosure(base) + Enclosure(num) / s;
    return exp_enclose(arg, deep(w / 2));
}

// sqrt(r * pi).
inline Enclosure sqrt_pi_times(const Rational& r, const Rational& w) {
    const Enclosure pie = pi_enclose(deep(w / (4 * (Rational(1) + r))));
    return sqrt_enclose(pie * r, deep(w / 2));
}

}  // namespace bincert::detail
