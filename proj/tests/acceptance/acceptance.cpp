// Acceptance suite: one PASS/FAIL line per criterion, exit status 1 if any
// criterion fails. All comparisons are exact.

#include <sys/wait.h>

#include <array>
#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>

#include "normlen/normlen.hpp"

using namespace normlen;

namespace {

constexpr std::uint64_t kSeed = 42;

struct Outcome {
    bool pass = false;
    std::string detail;
};

double seconds_since(std::chrono::steady_clock::time_point t0) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

verify::SessionConfig config(unsigned trials) {
    verify::SessionConfig cfg;
    cfg.seed = kSeed;
    cfg.trials = trials;
    cfg.max_level = 2;
    return cfg;
}

std::string summary(const verify::SuiteReport& r) {
    std::ostringstream s;
    s << r.passed << "/" << r.trials;
    if (r.tight_cases) s << ", " << r.tight_cases << " tight";
    if (!r.failures.empty()) s << "; first failure: trial " << r.failures[0].trial << " " << r.failures[0].inputs << " -- "
                               << r.failures[0].detail;
    return s.str();
}

Outcome suite(verify::SuiteReport (*fn)(const verify::SessionConfig&), unsigned trials) {
    const auto r = fn(config(trials));
    return {r.pass() && r.passed == trials, summary(r)};
}

Outcome pullback() {
    const auto t0 = std::chrono::steady_clock::now();
    const auto r = verify::pullback(config(500));
    const double secs = seconds_since(t0);
    std::ostringstream s;
    s << summary(r) << ", " << secs << " s (limit 30 s)";
    return {r.pass() && r.passed == 500 && secs < 30.0, s.str()};
}

Outcome product_bound() {
    auto out = suite(verify::product_bound, 300);
    const AmbientRing amb(2, 2);
    const auto w = check_product_bound(parse_ideal("<p^2, x2^2>", amb), parse_ideal("<p, x2>", amb),
                                 parse_monomial("p", amb), parse_monomial("x2^(1/2)", amb));
    const bool worked = w.ab_n.to_rational() == Rational(3, 2) && w.a_sub.to_rational() == 1 &&
                        w.b_quotient.to_rational() == Rational(1, 2) && w.part1_tight;
    out.detail += "; worked instance " + w.ab_n.str() + " = " + w.a_sub.str() + " + " + w.b_quotient.str() +
                  (worked ? " (tight)" : " (MISMATCH)");
    out.pass = out.pass && worked;
    return out;
}

Outcome annihilator_bound() {
    auto out = suite(verify::annihilator_bound, 300);
    const AmbientRing amb(2, 2);
    const auto r = check_annihilator_bound(parse_module("R/<p^(1/2), p^(1/4)*x2^(1/4), x2^(1/2)>", amb));
    const bool values = r.lambda.to_rational() == Rational(3, 16) && r.t.to_rational() == Rational(1, 2);
    const bool literal_fails = r.box_bound && *r.box_bound == Rational(1, 4) && r.box_holds && !*r.box_holds;
    const bool corrected_holds = r.simplex_bound == Rational(1, 8) && r.simplex_holds;
    out.detail += "; counterexample lambda " + r.lambda.str() + ", t " + r.t.str() + ", p^(-dk) " +
                  (r.box_bound ? r.box_bound->str() : "-") + (literal_fails ? " fails" : " DOES NOT FAIL") +
                  ", t^d/d! " + r.simplex_bound.str() + (corrected_holds ? " holds" : " FAILS");
    out.pass = out.pass && values && literal_fails && corrected_holds;
    return out;
}

Outcome family_decay_criterion() {
    bool ok = true;
    std::ostringstream s;
    int families = 0;
    for (std::uint32_t p : {2u, 3u}) {
        for (std::size_t d : {2u, 3u}) {
            const AmbientRing amb(p, d);
            std::vector<ExpVector> base_gens;
            for (std::size_t i = 1; i < d; ++i) base_gens.push_back(amb.pure(i, 1));
            const IdealFamily slow{amb, make_ideal(amb, base_gens), {uniformizer(amb)}};
            std::vector<ExpVector> all;
            for (std::size_t i = 0; i < d; ++i) all.push_back(amb.pure(i, 1));
            const IdealFamily fast{amb, MonomialIdeal::zero(amb), all};

            const auto rs = family_report(slow, 4);
            const auto rf = family_report(fast, 4);
            const Rational l0 = rs.rows[0].lambda.to_rational();
            for (unsigned n = 0; n <= 4; ++n) {
                const Rational pn = Rational(1, prime_power(p, n));
                const bool slow_ok = rs.rows[n].lambda.to_rational() == l0 * pn &&
                                     rs.rows[n].witness_valuation->to_rational() == pn;
                const bool fast_ok = rf.rows[n].lambda.to_rational() == Rational(1, prime_power(p, d * n)) &&
                                     rf.rows[n].witness_valuation->to_rational() == pn;
                if (!slow_ok || !fast_ok) {
                    ok = false;
                    s << "p=" << p << " d=" << d << " n=" << n << " slow " << rs.rows[n].lambda.str() << " fast "
                      << rf.rows[n].lambda.str() << "; ";
                }
            }
            ok = ok && rs.almost_zero_evidence && rf.almost_zero_evidence;
            families += 2;
        }
    }
    const auto cor = verify::family_decay(config(100));
    ok = ok && cor.pass();
    s << families << " fixed families exact for n <= 4, witness valuations p^-n; random families " << summary(cor);
    return {ok, s.str()};
}

Outcome splinter_sweep() {
    bool ok = true;
    double worst = 0;
    int count = 0;
    std::ostringstream bad;
    for (unsigned k = 3; k <= 6; ++k)
        for (unsigned l = 3; l <= 6; ++l)
            for (unsigned m = 3; m <= 6; ++m) {
                const auto t0 = std::chrono::steady_clock::now();
                const splinter::WitnessParams w(k, l, m);
                const bool eq = splinter::verify_integral_equation(w);
                const bool pass = splinter::verify_non_splinter(w).pass();
                const double secs = seconds_since(t0);
                worst = std::max(worst, secs);
                ++count;
                if (!eq || !pass || secs >= 1.0) {
                    ok = false;
                    bad << " (" << k << "," << l << "," << m << ")";
                }
            }
    std::ostringstream s;
    s << count << " parameter sets, slowest " << worst << " s (limit 1 s)";
    if (!ok) s << "; failing:" << bad.str();
    return {ok, s.str()};
}

std::string capture(const std::string& cmd, int& code) {
    std::string out;
    FILE* pipe = popen(cmd.c_str(), "r");
    if (!pipe) {
        code = -1;
        return out;
    }
    std::array<char, 4096> buf{};
    std::size_t got;
    while ((got = fread(buf.data(), 1, buf.size(), pipe)) > 0) out.append(buf.data(), got);
    const int status = pclose(pipe);
    code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return out;
}

Outcome cli_determinism() {
    const std::string cmd = std::string("'") + NORMLEN_CLI + "' verify all --seed 42 --trials 100 --json";
    int c1 = 0, c2 = 0;
    const auto a = capture(cmd, c1);
    const auto b = capture(cmd + " --threads 2", c2);
    std::ostringstream s;
    s << a.size() << " bytes, exit codes " << c1 << "/" << c2 << (a == b ? ", identical" : ", DIFFERENT");
    return {c1 == 0 && c2 == 0 && !a.empty() && a == b, s.str()};
}

} // namespace

int main() {
    const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria{
        {"1 Frobenius pull-back", pullback},
        {"2 additivity", [] { return suite(verify::additivity, 500); }},
        {"3 level independence", [] { return suite(verify::level_independence, 200); }},
        {"4 oracle equivalence", [] { return suite(verify::oracle, 300); }},
        {"5 length inequality for abN", product_bound},
        {"6 filtration inequalities", [] { return suite(verify::filtration, 300); }},
        {"7 annihilator valuation bound", annihilator_bound},
        {"8 family decay", family_decay_criterion},
        {"9 positivity", [] { return suite(verify::positivity, 300); }},
        {"10 splinter witness", splinter_sweep},
        {"11 CLI determinism", cli_determinism},
    };

    int failed = 0;
    for (const auto& [name, check] : criteria) {
        Outcome o;
        try {
            o = check();
        } catch (const std::exception& e) {
            o = {false, std::string("exception: ") + e.what()};
        }
        if (!o.pass) ++failed;
        std::cout << (o.pass ? "PASS " : "FAIL ") << name << ": " << o.detail << std::endl;
    }
    std::cout << (criteria.size() - failed) << "/" << criteria.size() << " criteria pass" << std::endl;
    return failed == 0 ? 0 : 1;
}
