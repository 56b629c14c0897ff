#include "bincert/cli.hpp"

#include "bincert/binomial.hpp"
#include "bincert/certify_gen.hpp"
#include "bincert/certify_sym.hpp"
#include "bincert/report.hpp"
#include "bincert/sweep.hpp"
#include "certify_common.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace bincert {

namespace {

int exit_code_for(Verdict v) {
    switch (v) {
        case Verdict::Violated: return 2;
        case Verdict::Undecided: return 3;
        default: return 0;
    }
}

struct NRange {
    unsigned lo = 1, hi = 1, step = 1;
};

// Accepts "8", "2..20", and "2..20:2".
NRange parse_n_range(const std::string& text) {
    NRange r;
    std::string body = text;
    const auto colon = body.find(':');
    if (colon != std::string::npos) {
        r.step = static_cast<unsigned>(std::stoul(body.substr(colon + 1)));
        body = body.substr(0, colon);
    }
    const auto dots = body.find("..");
    if (dots == std::string::npos) {
        r.lo = r.hi = static_cast<unsigned>(std::stoul(body));
    } else {
        r.lo = static_cast<unsigned>(std::stoul(body.substr(0, dots)));
        r.hi = static_cast<unsigned>(std::stoul(body.substr(dots + 2)));
    }
    if (r.step < 1 || r.lo < 1 || r.hi < r.lo)
        throw std::invalid_argument("bad n range '" + text + "'");
    return r;
}

std::vector<Rational> parse_rational_list(const std::string& text) {
    std::vector<Rational> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) out.push_back(Rational::parse(item));
    if (out.empty()) throw std::invalid_argument("empty value list");
    return out;
}

certify::Options make_options(const std::string& precision_text, int max_refine) {
    certify::Options o;
    if (!precision_text.empty()) {
        o.start_width = Rational::parse(precision_text);
        if (o.start_width.sign() <= 0) throw std::invalid_argument("--precision must be positive");
    }
    if (max_refine >= 0) o.rounds = max_refine;
    return o;
}

// Routes the table either to --out or to the session stream.
class TableSink {
public:
    TableSink(const std::string& path, std::ostream& fallback) : fallback_(fallback) {
        if (!path.empty()) {
            file_.open(path);
            if (!file_) throw std::invalid_argument("cannot open output path '" + path + "'");
        }
    }
    std::ostream& stream() { return file_.is_open() ? file_ : fallback_; }

private:
    std::ofstream file_;
    std::ostream& fallback_;
};

SweepMode parse_mode(const std::string& text) {
    if (text == "sym-even") return SweepMode::SymEven;
    if (text == "sym-odd") return SweepMode::SymOdd;
    if (text == "unified") return SweepMode::Unified;
    if (text == "general") return SweepMode::General;
    if (text == "wallis") return SweepMode::Wallis;
    if (text == "lemmas") return SweepMode::Lemmas;
    throw std::invalid_argument("unknown mode '" + text + "'");
}

int run_certify_cmd(const std::string& mode, unsigned n, const std::string& x_text,
                    const std::string& p_text, const certify::Options& opts,
                    const std::string& format, const std::string& out_path, std::ostream& out) {
    const Rational x = Rational::parse(x_text);
    CertificateReport rep;
    if (mode == "sym-even") {
        if (n % 2 != 0 || n == 0) throw std::invalid_argument("sym-even needs an even n >= 2");
        rep = certify_nonasymptotic_even(n / 2, x, opts);
    } else if (mode == "sym-odd") {
        if (n % 2 != 1) throw std::invalid_argument("sym-odd needs an odd n >= 1");
        rep = certify_nonasymptotic_odd((n - 1) / 2, x, opts);
    } else if (mode == "unified") {
        rep = certify_unified(n, x, opts);
    } else if (mode == "general") {
        if (p_text.empty()) throw std::invalid_argument("general mode needs --p");
        rep = check_general_sandwich(GeneralWindow(n, Rational::parse(p_text), x), opts).report;
    } else {
        throw std::invalid_argument("unknown certify mode '" + mode + "'");
    }
    TableSink sink(out_path, out);
    if (format == "csv")
        rep.write_csv(sink.stream(), true);
    else
        sink.stream() << rep.to_text();
    return exit_code_for(rep.overall);
}

int run_sweep_cmd(const std::string& mode, const std::string& n_text, const std::string& x_text,
                  const std::string& p_text, const certify::Options& opts,
                  const std::string& out_path, std::ostream& out) {
    SweepConfig cfg;
    cfg.mode = parse_mode(mode);
    const NRange r = parse_n_range(n_text);
    cfg.n_min = r.lo;
    cfg.n_max = r.hi;
    cfg.n_step = r.step;
    if (!x_text.empty()) cfg.x_list = parse_rational_list(x_text);
    if (!p_text.empty()) cfg.p_list = parse_rational_list(p_text);
    cfg.options = opts;
    TableSink sink(out_path, out);
    return exit_code_for(run_sweep(cfg, sink.stream()));
}

int run_lemmas_cmd(const certify::Options& opts, const std::string& format,
                   const std::string& out_path, std::ostream& out) {
    TableSink sink(out_path, out);
    std::ostream& os = sink.stream();
    Verdict total = Verdict::Skipped;
    const auto results = run_lemma_grids(2000, opts);
    if (format == "csv") os << "lemma,points,holds,violated,undecided,verdict\n";
    for (const LemmaGridResult& r : results) {
        if (format == "csv")
            os << r.name << ',' << r.points << ',' << r.holds << ',' << r.violated << ','
               << r.undecided << ',' << verdict_name(r.verdict) << '\n';
        else
            os << r.name << ": " << r.points << " points, " << r.holds << " hold, " << r.violated
               << " violated, " << r.undecided << " undecided -> " << verdict_name(r.verdict)
               << '\n';
        total = worse_verdict(total, r.verdict);
    }
    return exit_code_for(total);
}

int run_hist_cmd(unsigned n, const std::string& p_text, const std::string& out_path,
                 std::ostream& out) {
    if (n > 10'000u) throw std::invalid_argument("hist: n exceeds 10^4");
    const Rational p = p_text.empty() ? Rational(1, 2) : Rational::parse(p_text);
    if (!(p.sign() > 0 && p < 1)) throw std::invalid_argument("hist: p must lie in (0, 1)");
    const Rational q = 1 - p;
    const Rational npq = Rational(n) * p * q;
    const Rational wd = pow10(-12);
    const Enclosure root_2pi = detail::sqrt_pi_times(2, wd / 4);
    TableSink sink(out_path, out);
    std::ostream& os = sink.stream();
    os << "k,pmf,pmf_frac,gauss_density_mid\n";
    for (unsigned k = 0; k <= n; ++k) {
        const Rational mass = pmf(n, p, static_cast<long>(k));
        const Rational z2 = (Rational(k) - Rational(n) * p).squared() / npq;
        const Enclosure density = exp_enclose(-z2 / 2, detail::deep(wd / 4)) / root_2pi;
        os << k << ',' << mass.decimal(15) << ',' << mass.str() << ','
           << density.midpoint().decimal(15) << '\n';
    }
    return 0;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out) {
    CLI::App app{"certified binomial window probabilities and their Gaussian comparisons"};
    app.require_subcommand(1);

    std::string mode, n_text, x_text, p_text, precision_text, out_path;
    std::string format = "text";
    unsigned n_value = 0;
    int max_refine = -1;

    CLI::App* certify_cmd = app.add_subcommand("certify", "certify one instance");
    certify_cmd->add_option("--mode", mode, "sym-even | sym-odd | unified | general")->required();
    certify_cmd->add_option("--n", n_value, "total number of trials")->required();
    certify_cmd->add_option("--x", x_text, "window half-width x (rational)")->required();
    certify_cmd->add_option("--p", p_text, "success probability (general mode)");
    certify_cmd->add_option("--precision", precision_text, "target enclosure width");
    certify_cmd->add_option("--max-refine", max_refine, "extra refinement rounds");
    certify_cmd->add_option("--format", format)->check(CLI::IsMember({"text", "csv"}));
    certify_cmd->add_option("--out", out_path, "write the report to a file");

    CLI::App* sweep_cmd = app.add_subcommand("sweep", "emit a CSV table over a parameter grid");
    sweep_cmd->add_option("--mode", mode, "sym-even | sym-odd | unified | general | wallis | lemmas")
        ->required();
    sweep_cmd->add_option("--n", n_text, "trial count or range: 8, 2..20, 2..20:2")->required();
    sweep_cmd->add_option("--x", x_text, "comma-separated x values");
    sweep_cmd->add_option("--p", p_text, "comma-separated p values (general mode)");
    sweep_cmd->add_option("--precision", precision_text, "target enclosure width");
    sweep_cmd->add_option("--max-refine", max_refine, "extra refinement rounds");
    sweep_cmd->add_option("--out", out_path, "write the CSV to a file");

    CLI::App* wallis_cmd = app.add_subcommand("wallis", "integral recurrence and identity table");
    wallis_cmd->add_option("--n", n_text, "index or range")->required();
    wallis_cmd->add_option("--precision", precision_text, "target enclosure width");
    wallis_cmd->add_option("--out", out_path, "write the CSV to a file");

    CLI::App* hist_cmd = app.add_subcommand("hist", "pmf histogram with Gaussian overlay data");
    hist_cmd->add_option("--n", n_value, "number of trials")->required();
    hist_cmd->add_option("--p", p_text, "success probability, default 1/2");
    hist_cmd->add_option("--out", out_path, "write the CSV to a file");

    CLI::App* lemmas_cmd = app.add_subcommand("lemmas", "elementary inequality grids");
    lemmas_cmd->add_option("--precision", precision_text, "target enclosure width");
    lemmas_cmd->add_option("--max-refine", max_refine, "extra refinement rounds");
    lemmas_cmd->add_option("--format", format)->check(CLI::IsMember({"text", "csv"}));
    lemmas_cmd->add_option("--out", out_path, "write the table to a file");

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return 0;
    } catch (const CLI::ParseError& e) {
        out << "error: " << e.what() << '\n';
        return 1;
    }

    try {
        const certify::Options opts = make_options(precision_text, max_refine);
        if (certify_cmd->parsed())
            return run_certify_cmd(mode, n_value, x_text, p_text, opts, format, out_path, out);
        if (sweep_cmd->parsed())
            return run_sweep_cmd(mode, n_text, x_text, p_text, opts, out_path, out);
        if (wallis_cmd->parsed())
            return run_sweep_cmd("wallis", n_text, "", "", opts, out_path, out);
        if (hist_cmd->parsed()) return run_hist_cmd(n_value, p_text, out_path, out);
        if (lemmas_cmd->parsed()) return run_lemmas_cmd(opts, format, out_path, out);
    } catch (const std::invalid_argument& e) {
        out << "error: " << e.what() << '\n';
        return 1;
    } catch (const std::domain_error& e) {
        out << "error: " << e.what() << '\n';
        return 1;
    } catch (const std::exception& e) {
        out << "internal error: " << e.what() << '\n';
        return 1;
    }
    out << "error: no command given\n";
    return 1;
}

}  // namespace bincert
