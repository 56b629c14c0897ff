#include "bincert/float_oracle.hpp"

#include <cmath>
#include <stdexcept>

namespace bincert::float_oracle {

namespace {

void guard_n(unsigned n) {
    if (n > 1'000'000u) throw std::domain_error("float_oracle: n exceeds 10^6");
}

}  // namespace

double pmf(unsigned n, double p, long k) {
    guard_n(n);
    if (k < 0 || k > static_cast<long>(n)) return 0.0;
    if (!(p > 0.0 && p < 1.0)) throw std::domain_error("float_oracle::pmf: p outside (0, 1)");
    const double kd = static_cast<double>(k);
    const double nd = static_cast<double>(n);
    const double log_choose =
        std::lgamma(nd + 1) - std::lgamma(kd + 1) - std::lgamma(nd - kd + 1);
    return std::exp(log_choose + kd * std::log(p) + (nd - kd) * std::log1p(-p));
}

double window_prob_sym(const SymmetricWindow& w) {
    guard_n(w.n);
    const auto [lo, hi] = w.k_range();
    double s = 0.0;
    for (long k = lo; k <= hi; ++k) s += pmf(w.n, 0.5, k);
    return s;
}

double window_prob_gen(const GeneralWindow& w) {
    guard_n(w.n);
    const double p = w.p.to_double();
    const auto [lo, hi] = w.k_range();
    double s = 0.0;
    for (long k = lo; k <= hi; ++k) s += pmf(w.n, p, k);
    return s;
}

double gauss_mass(double x) { return std::erf(x / std::sqrt(2.0)); }

}  // namespace bincert::float_oracle
