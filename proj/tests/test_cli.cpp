#include <doctest.h>

#include "bincert/binomial.hpp"
#include "bincert/cli.hpp"
#include "bincert/float_oracle.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

using namespace bincert;

namespace {

struct CliResult {
    int code;
    std::string out;
};

CliResult run(const std::vector<std::string>& args) {
    std::ostringstream os;
    const int code = run_cli(args, os);
    return {code, os.str()};
}

std::vector<std::string> split_lines(const std::string& text) {
    std::vector<std::string> out;
    std::stringstream ss(text);
    std::string line;
    while (std::getline(ss, line)) out.push_back(line);
    return out;
}

std::vector<std::string> split_fields(const std::string& line) {
    std::vector<std::string> out;
    std::stringstream ss(line);
    std::string field;
    while (std::getline(ss, field, ',')) out.push_back(field);
    return out;
}

std::size_t count_substr(const std::string& text, const std::string& needle) {
    std::size_t n = 0;
    for (auto pos = text.find(needle); pos != std::string::npos; pos = text.find(needle, pos + 1))
        ++n;
    return n;
}

const char* kWindowHeader =
    "n,parity,p,x,exact_window_prob,exact_window_prob_frac,gauss_lo,gauss_hi,"
    "abs_diff_lo,abs_diff_hi,certified_bound,verdict";

}  // namespace

TEST_CASE("certify unified decides the eight-trial fair coin") {
    const CliResult r = run({"certify", "--mode", "unified", "--n", "8", "--x", "1"});
    CHECK(r.code == 0);
    CHECK(r.out.find("trials=8") != std::string::npos);
    CHECK(r.out.find("abs_diff_bound") != std::string::npos);
    CHECK(r.out.find("overall=HOLDS") != std::string::npos);
}

TEST_CASE("certify unified reports the gate at three trials without failing") {
    const CliResult r = run({"certify", "--mode", "unified", "--n", "3", "--x", "1"});
    CHECK(r.code == 0);
    CHECK(r.out.find("overall=SKIPPED") != std::string::npos);
    CHECK(r.out.find("gate") != std::string::npos);
}

TEST_CASE("certify parity modes map trial counts onto half-indices") {
    const CliResult even = run({"certify", "--mode", "sym-even", "--n", "8", "--x", "1"});
    CHECK(even.code == 0);
    CHECK(even.out.find("trials=8") != std::string::npos);
    CHECK(even.out.find("overall=HOLDS") != std::string::npos);

    const CliResult odd = run({"certify", "--mode", "sym-odd", "--n", "9", "--x", "1"});
    CHECK(odd.code == 0);
    CHECK(odd.out.find("trials=9") != std::string::npos);
    CHECK(odd.out.find("overall=HOLDS") != std::string::npos);

    const CliResult parity = run({"certify", "--mode", "sym-even", "--n", "7", "--x", "1"});
    CHECK(parity.code == 1);
    CHECK(parity.out.find("error:") != std::string::npos);
    CHECK(run({"certify", "--mode", "sym-odd", "--n", "8", "--x", "1"}).code == 1);
}

TEST_CASE("certify general needs p and then certifies the sandwich") {
    const CliResult missing = run({"certify", "--mode", "general", "--n", "40", "--x", "1"});
    CHECK(missing.code == 1);
    CHECK(missing.out.find("--p") != std::string::npos);

    const CliResult r =
        run({"certify", "--mode", "general", "--n", "40", "--x", "1", "--p", "1/4"});
    CHECK(r.code == 0);
    CHECK(r.out.find("kind=sandwich-general") != std::string::npos);
    CHECK(r.out.find("overall=HOLDS") != std::string::npos);
}

TEST_CASE("certify csv format emits one row per claim") {
    const CliResult r =
        run({"certify", "--mode", "unified", "--n", "8", "--x", "1", "--format", "csv"});
    CHECK(r.code == 0);
    const auto lines = split_lines(r.out);
    REQUIRE(lines.size() == 2);
    CHECK(lines[0] == "instance,claim,relation,lhs,rhs,verdict,note");
    CHECK(lines[1].find("abs_diff_bound") != std::string::npos);
    CHECK(lines[1].find("HOLDS") != std::string::npos);
}

TEST_CASE("malformed invocations exit with code one") {
    CHECK(run({}).code == 1);
    CHECK(run({"frobnicate"}).code == 1);
    CHECK(run({"certify", "--mode", "bogus", "--n", "8", "--x", "1"}).code == 1);
    CHECK(run({"certify", "--mode", "unified", "--n", "8"}).code == 1);  // missing --x
    CHECK(run({"certify", "--mode", "unified", "--n", "8", "--x", "1/0"}).code == 1);
    CHECK(run({"certify", "--mode", "unified", "--n", "8", "--x", "-1"}).code == 1);
    CHECK(run({"certify", "--mode", "unified", "--n", "8", "--x", "1", "--precision", "0"}).code ==
          1);
    CHECK(run({"sweep", "--mode", "sym-even", "--n", "abc", "--x", "1"}).code == 1);
    CHECK(run({"sweep", "--mode", "sym-even", "--n", "9..2", "--x", "1"}).code == 1);
    CHECK(run({"sweep", "--mode", "sym-even", "--n", "2..10"}).code == 1);  // no x list
    CHECK(run({"sweep", "--mode", "general", "--n", "10", "--x", "1"}).code == 1);  // no p list
    const CliResult err = run({"certify", "--mode", "unified", "--n", "8", "--x", "0"});
    CHECK(err.code == 1);
    CHECK(err.out.find("error:") != std::string::npos);
}

TEST_CASE("help text lists the subcommands and exits cleanly") {
    const CliResult r = run({"--help"});
    CHECK(r.code == 0);
    CHECK(r.out.find("certify") != std::string::npos);
    CHECK(r.out.find("sweep") != std::string::npos);
    CHECK(r.out.find("hist") != std::string::npos);
}

TEST_CASE("sym-even sweep emits one row per even n with gates reported inline") {
    const std::vector<std::string> args = {"sweep", "--mode", "sym-even", "--n", "2..20",
                                           "--x",   "1"};
    const CliResult r = run(args);
    CHECK(r.code == 0);
    const auto lines = split_lines(r.out);
    REQUIRE(lines.size() == 11);  // header + n = 2, 4, ..., 20
    CHECK(lines[0] == kWindowHeader);
    // n = 2 has half-index 1 < 2x^2, so its row is reported but not certified.
    CHECK(count_substr(r.out, "SKIPPED") == 1);
    CHECK(count_substr(r.out, "HOLDS") == 9);
    CHECK(split_fields(lines[1])[0] == "2");
    CHECK(split_fields(lines[1])[1] == "even");

    // Byte-identical reruns: the table is a pure function of its arguments.
    const CliResult again = run(args);
    CHECK(again.code == 0);
    CHECK(again.out == r.out);
}

TEST_CASE("unified sweep covers both parities and respects its gate") {
    const CliResult r =
        run({"sweep", "--mode", "unified", "--n", "4..12:4", "--x", "1,2"});
    CHECK(r.code == 0);
    const auto lines = split_lines(r.out);
    REQUIRE(lines.size() == 7);  // header + {4, 8, 12} x {1, 2}
    // x = 2 needs n >= 16, so those three rows are gated.
    CHECK(count_substr(r.out, "SKIPPED") == 3);
    CHECK(count_substr(r.out, "HOLDS") == 3);
}

TEST_CASE("general sweep emits one row per (n, x, p) combination") {
    const CliResult r =
        run({"sweep", "--mode", "general", "--n", "40", "--x", "1", "--p", "1/4,1/2"});
    CHECK(r.code == 0);
    const auto lines = split_lines(r.out);
    REQUIRE(lines.size() == 3);
    CHECK(count_substr(r.out, "HOLDS") == 2);
    CHECK(split_fields(lines[1])[2] == "1/4");
    CHECK(split_fields(lines[2])[2] == "1/2");
}

TEST_CASE("sweep writes its table to a file when asked") {
    const std::string path = "/tmp/bincert_cli_sweep_out.csv";
    const CliResult r = run({"sweep", "--mode", "sym-even", "--n", "4..8", "--x", "1", "--out",
                             path});
    CHECK(r.code == 0);
    CHECK(r.out.empty());
    std::ifstream in(path);
    REQUIRE(in.good());
    std::string first;
    std::getline(in, first);
    CHECK(first == kWindowHeader);
    in.close();
    std::remove(path.c_str());

    CHECK(run({"sweep", "--mode", "sym-even", "--n", "4..8", "--x", "1", "--out",
               "/nonexistent-dir-zz/t.csv"})
              .code == 1);
}

TEST_CASE("wallis table reports the identity and sandwich columns") {
    const CliResult r = run({"wallis", "--n", "1..50"});
    CHECK(r.code == 0);
    const auto lines = split_lines(r.out);
    REQUIRE(lines.size() == 51);
    CHECK(lines[0] ==
          "n,coeff,pi_power,value_lo,value_hi,identity,central_sandwich_even,"
          "central_sandwich_odd,ratio_bracket,verdict");
    CHECK(count_substr(r.out, "FAIL") == 0);
    CHECK(count_substr(r.out, "VIOLATED") == 0);
    // W_2 = (1/4) pi: coefficient column carries the exact rational.
    CHECK(split_fields(lines[2])[1] == "1/4");
    CHECK(split_fields(lines[2])[2] == "1");
}

TEST_CASE("lemma grids pass in both output formats") {
    const CliResult text = run({"lemmas"});
    CHECK(text.code == 0);
    const auto text_lines = split_lines(text.out);
    REQUIRE(text_lines.size() == 4);
    for (const char* name : {"exp_above_tangent", "reciprocal_above_tangent",
                             "reciprocal_below_double", "exp_below_reciprocal"})
        CHECK(text.out.find(name) != std::string::npos);
    CHECK(count_substr(text.out, "-> HOLDS") == 4);

    const CliResult csv = run({"lemmas", "--format", "csv"});
    CHECK(csv.code == 0);
    const auto csv_lines = split_lines(csv.out);
    REQUIRE(csv_lines.size() == 5);
    CHECK(csv_lines[0] == "lemma,points,holds,violated,undecided,verdict");
    for (std::size_t i = 1; i < csv_lines.size(); ++i) {
        const auto fields = split_fields(csv_lines[i]);
        REQUIRE(fields.size() == 6);
        CHECK(fields[2] == fields[1]);  // every point holds
        CHECK(fields[5] == "HOLDS");
    }
}

TEST_CASE("hist emits the pmf with an exact fraction column summing to one") {
    const CliResult r = run({"hist", "--n", "4"});
    CHECK(r.code == 0);
    const auto lines = split_lines(r.out);
    REQUIRE(lines.size() == 6);
    CHECK(lines[0] == "k,pmf,pmf_frac,gauss_density_mid");
    Rational total(0);
    for (std::size_t i = 1; i < lines.size(); ++i)
        total += Rational::parse(split_fields(lines[i])[2]);
    CHECK(total == Rational(1));
    CHECK(split_fields(lines[3])[2] == "3/8");  // pmf(4, 1/2, 2)

    const CliResult peak = run({"hist", "--n", "20"});
    const auto peak_lines = split_lines(peak.out);
    REQUIRE(peak_lines.size() == 22);
    Rational peak_total(0);
    for (std::size_t i = 1; i < peak_lines.size(); ++i)
        peak_total += Rational::parse(split_fields(peak_lines[i])[2]);
    CHECK(peak_total == Rational(1));
    CHECK(split_fields(peak_lines[11])[2] == "46189/262144");  // C(20,10)/2^20

    CHECK(run({"hist", "--n", "10001"}).code == 1);
    CHECK(run({"hist", "--n", "4", "--p", "1"}).code == 1);
    CHECK(run({"hist", "--n", "4", "--p", "0"}).code == 1);
}

TEST_CASE("floating-point oracle tracks the exact probabilities") {
    CHECK(float_oracle::pmf(2, 0.5, 1) == doctest::Approx(0.5).epsilon(1e-12));
    CHECK(float_oracle::window_prob_sym(SymmetricWindow(8, Rational(1))) ==
          doctest::Approx(0.7109375).epsilon(1e-12));

    for (unsigned n : {10u, 100u, 2000u}) {
        for (const Rational& x : {Rational(1, 2), Rational(1), Rational(2)}) {
            const SymmetricWindow win(n, x);
            const double exact = window_prob_sym(win).to_double();
            const double approx = float_oracle::window_prob_sym(win);
            CHECK(std::abs(exact - approx) <= 1e-9);
        }
    }
    for (unsigned n : {50u, 500u}) {
        for (const Rational& p : {Rational(1, 4), Rational(9, 10)}) {
            const GeneralWindow win(n, p, Rational(1));
            const double exact = window_prob_gen(win).to_double();
            const double approx = float_oracle::window_prob_gen(win);
            CHECK(std::abs(exact - approx) <= 1e-9);
        }
    }
    CHECK(std::abs(float_oracle::gauss_mass(1.0) - 0.682689492137086) <= 1e-12);

    CHECK_THROWS_AS(float_oracle::pmf(2'000'000u, 0.5, 1000), std::domain_error);
    CHECK_THROWS_AS(float_oracle::pmf(10, 0.0, 1), std::domain_error);
}
