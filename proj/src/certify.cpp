#include "bincert/certify.hpp"

#include <utility>

namespace bincert::certify {

Options sweep_options() {
    Options o;
    o.start_width = pow10(-12);
    return o;
}

std::string rel_symbol(Rel r) {
    switch (r) {
        case Rel::LE: return "<=";
        case Rel::GE: return ">=";
        case Rel::LT: return "<";
        case Rel::GT: return ">";
    }
    return "?";
}

EncFn constant(const Rational& v) {
    return [v](const Rational&) { return Enclosure(v); };
}

namespace {

std::string render(const Enclosure& e) {
    if (e.is_point()) return e.lo().decimal(18);
    return "[" + e.lo().decimal(18) + ", " + e.hi().decimal(18) + "]";
}

}  // namespace

Claim check(std::string name, Rel rel, const EncFn& lhs, const EncFn& rhs, const Options& opts) {
    Claim c;
    c.name = std::move(name);
    c.relation = rel_symbol(rel);

    // normalize to a <= / < comparison
    const bool swap = rel == Rel::GE || rel == Rel::GT;
    const bool strict = rel == Rel::LT || rel == Rel::GT;

    Rational w = opts.start_width;
    Enclosure le(Rational(0)), re(Rational(0));
    c.verdict = Verdict::Undecided;
    for (int round = 0; round <= opts.rounds; ++round) {
        le = lhs(w);
        re = rhs(w);
        const Enclosure& a = swap ? re : le;
        const Enclosure& b = swap ? le : re;
        const bool holds = strict ? a.hi() < b.lo() : a.hi() <= b.lo();
        const bool violated = strict ? a.lo() >= b.hi() : a.lo() > b.hi();
        if (holds) {
            c.verdict = Verdict::Holds;
            break;
        }
        if (violated) {
            c.verdict = Verdict::Violated;
            break;
        }
        w *= opts.refine_factor;
    }
    c.lhs = render(le);
    c.rhs = render(re);
    return c;
}

Claim check_exact_eq(std::string name, const Rational& lhs, const Rational& rhs) {
    Claim c;
    c.name = std::move(name);
    c.relation = "==";
    c.verdict = lhs == rhs ? Verdict::Holds : Verdict::Violated;
    c.lhs = lhs.decimal(18);
    c.rhs = rhs.decimal(18);
    if (c.verdict == Verdict::Violated) c.note = "exact values differ: " + lhs.str() + " vs " + rhs.str();
    return c;
}

Claim gate_skip(std::string name, std::string why) {
    Claim c;
    c.name = std::move(name);
    c.relation = "";
    c.verdict = Verdict::Skipped;
    c.note = std::move(why);
    return c;
}

}  // namespace bincert::certify
