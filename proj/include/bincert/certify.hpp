#pragma once

#include "bincert/enclosure.hpp"
#include "bincert/report.hpp"

#include <functional>
#include <string>

namespace bincert::certify {

// Evaluator for one side of a claim: produces an enclosure of the quantity
// with (absolute) width at most the argument whenever possible.
using EncFn = std::function<Enclosure(const Rational& width)>;

// Per-claim refinement policy. A claim is evaluated at start_width; if the
// comparison stays Overlapping, the width is multiplied by refine_factor and
// the sides re-evaluated, up to `rounds` extra times. Only after the ladder is
// exhausted does a claim come back Undecided.
struct Options {
    Rational start_width = pow10(-30);
    Rational refine_factor = pow10(-10);
    int rounds = 6;
};

// Coarse starting width for bulk sweeps; the ladder still refines on demand.
Options sweep_options();

enum class Rel { LE, GE, LT, GT };

std::string rel_symbol(Rel r);

EncFn constant(const Rational& v);

// Certified comparison of two evaluated sides. Holds/Violated are decided
// purely from enclosure endpoints; equality decides non-strict relations as
// Holds and strict ones as Violated.
Claim check(std::string name, Rel rel, const EncFn& lhs, const EncFn& rhs, const Options& opts);

// Exact identity between rationals; no enclosures involved.
Claim check_exact_eq(std::string name, const Rational& lhs, const Rational& rhs);

// Claim excluded by a precondition gate.
Claim gate_skip(std::string name, std::string why);

}  // namespace bincert::certify
