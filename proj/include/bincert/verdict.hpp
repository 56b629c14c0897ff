#pragma once

#include <string_view>

namespace bincert {

// Outcome of a certified claim. Holds and Violated are proofs (derived from
// exact comparisons of enclosure endpoints); Undecided means precision ran
// out; Skipped means a precondition gate excluded the instance.
enum class Verdict { Holds, Violated, Undecided, Skipped };

constexpr std::string_view verdict_name(Verdict v) {
    switch (v) {
        case Verdict::Holds: return "HOLDS";
        case Verdict::Violated: return "VIOLATED";
        case Verdict::Undecided: return "UNDECIDED";
        case Verdict::Skipped: return "SKIPPED";
    }
    return "UNKNOWN";
}

}  // namespace bincert
