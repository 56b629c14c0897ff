#include "bincert/report.hpp"

#include <ostream>
#include <sstream>

namespace bincert {

void CertificateReport::add(Claim c) {
    claims.push_back(std::move(c));
}

void CertificateReport::finalize() {
    holds = violated = undecided = skipped = 0;
    for (const Claim& c : claims) {
        switch (c.verdict) {
            case Verdict::Holds: ++holds; break;
            case Verdict::Violated: ++violated; break;
            case Verdict::Undecided: ++undecided; break;
            case Verdict::Skipped: ++skipped; break;
        }
    }
    if (violated > 0)
        overall = Verdict::Violated;
    else if (undecided > 0)
        overall = Verdict::Undecided;
    else if (holds > 0)
        overall = Verdict::Holds;
    else
        overall = Verdict::Skipped;
}

std::string CertificateReport::to_text() const {
    std::ostringstream os;
    os << "instance=" << instance << "\n";
    os << "claims=" << claims.size() << "\n";
    for (size_t i = 0; i < claims.size(); ++i) {
        const Claim& c = claims[i];
        os << "claim." << i << ".name=" << c.name << "\n";
        os << "claim." << i << ".relation=" << c.relation << "\n";
        os << "claim." << i << ".verdict=" << verdict_name(c.verdict) << "\n";
        if (!c.lhs.empty()) os << "claim." << i << ".lhs=" << c.lhs << "\n";
        if (!c.rhs.empty()) os << "claim." << i << ".rhs=" << c.rhs << "\n";
        if (!c.note.empty()) os << "claim." << i << ".note=" << c.note << "\n";
    }
    os << "holds=" << holds << "\nviolated=" << violated << "\nundecided=" << undecided
       << "\nskipped=" << skipped << "\n";
    os << "overall=" << verdict_name(overall) << "\n";
    return os.str();
}

namespace {

std::string csv_escape(const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string out = "\"";
    for (char ch : s) {
        if (ch == '"') out += '"';
        out += ch;
    }
    out += '"';
    return out;
}

}  // namespace

void CertificateReport::write_csv(std::ostream& os, bool header) const {
    if (header) os << "instance,claim,relation,lhs,rhs,verdict,note\n";
    for (const Claim& c : claims) {
        os << csv_escape(instance) << ',' << csv_escape(c.name) << ',' << csv_escape(c.relation)
           << ',' << csv_escape(c.lhs) << ',' << csv_escape(c.rhs) << ','
           << verdict_name(c.verdict) << ',' << csv_escape(c.note) << '\n';
    }
}

}  // namespace bincert
