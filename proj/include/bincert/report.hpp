#pragma once

#include "bincert/verdict.hpp"

#include <iosfwd>
#include <string>
#include <vector>

namespace bincert {

// One certified inequality (or exact identity) inside a certificate.
struct Claim {
    std::string name;
    std::string relation;  // "<=", ">=", "<", ">", "=="
    Verdict verdict = Verdict::Skipped;
    std::string lhs, rhs;  // rendered values at the final precision
    std::string note;      // gate reasons and similar context
};

// A certificate for one instance: every claim listed with its own verdict.
// The overall verdict is Violated if any claim is Violated, else Undecided if
// any is Undecided, else Holds if at least one claim was actually decided;
// a report whose claims were all gated away stays Skipped.
struct CertificateReport {
    std::string instance;
    std::vector<Claim> claims;
    Verdict overall = Verdict::Skipped;
    unsigned holds = 0, violated = 0, undecided = 0, skipped = 0;

    void add(Claim c);
    void finalize();

    std::string to_text() const;                       // flat key=value lines
    void write_csv(std::ostream& os, bool header) const;  // one row per claim
};

}  // namespace bincert
