#pragma once

#include "bincert/certify.hpp"
#include "bincert/rational.hpp"
#include "bincert/verdict.hpp"

#include <iosfwd>
#include <string>
#include <vector>

namespace bincert {

enum class SweepMode { SymEven, SymOdd, Unified, General, Wallis, Lemmas };

// Grid description for run_sweep. For the window modes, n counts total
// trials and runs from n_min to n_max in steps of n_step; parities that do
// not match the mode are passed over without emitting a row. x_list is
// required for the window modes and p_list additionally for General.
struct SweepConfig {
    unsigned n_min = 1;
    unsigned n_max = 1;
    unsigned n_step = 1;
    std::vector<Rational> x_list;
    std::vector<Rational> p_list;
    SweepMode mode = SweepMode::Unified;
    certify::Options options;

    void validate() const;  // throws std::invalid_argument
};

// Emits a CSV table (header plus one row per instance) and returns the worst
// verdict across all rows, ranked Violated > Undecided > Holds > Skipped.
// Output is deterministic: identical configs give byte-identical text, with
// displayed enclosures rendered at a fixed width independent of how far the
// certification ladder refined.
Verdict run_sweep(const SweepConfig& cfg, std::ostream& out);

// One elementary-inequality grid: `points` sample arguments checked
// individually, with the worst verdict retained.
struct LemmaGridResult {
    std::string name;
    unsigned points = 0;
    unsigned holds = 0, violated = 0, undecided = 0;
    Verdict verdict = Verdict::Skipped;
};

// Checks the four elementary inequalities the enclosure layer leans on, each
// on a deterministic rational grid of at least `points_per_lemma` arguments:
//   exp_above_tangent        e^t >= 1 + t          on [-10, 10]
//   reciprocal_above_tangent 1/(1-t) >= 1 + t      on [-1, 1)
//   reciprocal_below_double  1/(1-t) <= 1 + 2t     on [0, 1/2]
//   exp_below_reciprocal     e^{-t} <= 1/(1+t)     on [0, 1]
// The middle two are decided in exact rational arithmetic; the outer two via
// enclosures with refinement.
std::vector<LemmaGridResult> run_lemma_grids(unsigned points_per_lemma,
                                             const certify::Options& opts = {});

// Worst-of lattice used for exit statuses and sweep aggregation.
Verdict worse_verdict(Verdict a, Verdict b);

}  // namespace bincert
