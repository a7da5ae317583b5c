// normlen: exact normalized lengths of monomial torsion modules over the
// perfectoid-style p-power tower, plus seeded verification suites.
//
// Exit codes: 0 all checks pass, 1 a check failed, 2 usage or input error.

#include <cstdint>
#include <iostream>
#include <iterator>
#include <optional>
#include <string>

#include "CLI11.hpp"
#include "json.hpp"

#include "normlen/normlen.hpp"

namespace {

using nlohmann::ordered_json;
using namespace normlen;

constexpr int kPass = 0;
constexpr int kCheckFailed = 1;
constexpr int kUsage = 2;

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct Options {
    std::uint32_t prime = 2;
    std::uint32_t dim = 2;
    std::uint64_t seed = 0;
    unsigned trials = 100;
    unsigned max_level = 2;
    unsigned threads = 1;
    bool json = false;
    bool timing = false;
    CLI::Option* prime_opt = nullptr;
    CLI::Option* dim_opt = nullptr;
    CLI::Option* max_level_opt = nullptr;

    AmbientRing ambient() const { return AmbientRing(prime, dim); }

    unsigned level_cap() const {
        const unsigned cap = max_level_opt->count() ? max_level : verify::kMaxLevelCap;
        if (cap > verify::kMaxLevelCap)
            throw UsageError("--max-level " + std::to_string(cap) + " exceeds the cap of " +
                             std::to_string(verify::kMaxLevelCap));
        return cap;
    }
};

std::string read_expr(const std::string& arg) {
    if (arg != "-") return arg;
    return std::string(std::istreambuf_iterator<char>(std::cin), std::istreambuf_iterator<char>());
}

void check_level(unsigned lvl, const Options& opt) {
    if (lvl > opt.level_cap())
        throw UsageError("level " + std::to_string(lvl) + " exceeds --max-level " + std::to_string(opt.level_cap()));
}

ordered_json count_json(const BigInt& c) {
    if (c <= std::numeric_limits<std::uint64_t>::max()) return static_cast<std::uint64_t>(c);
    return c.str();
}

void emit(const Options& opt, const ordered_json& j, const std::string& text) {
    if (opt.json)
        std::cout << j.dump(2) << "\n";
    else
        std::cout << text;
}

ordered_json header(const std::string& command) {
    ordered_json j;
    j["schema"] = 1;
    j["command"] = command;
    return j;
}

int cmd_lambda(const Options& opt, const std::string& expr) {
    const auto M = parse_module(read_expr(expr), opt.ambient());
    check_level(level(M), opt);
    const auto r = length_report(M);
    ordered_json j = header("lambda");
    j["module"] = render_module(M);
    j["lambda"] = r.lambda.str();
    j["level_used"] = r.level_used;
    j["counts"] = ordered_json::array();
    for (const auto& c : r.counts) j["counts"].push_back(count_json(c));
    emit(opt, j, r.lambda.str() + "\n");
    return kPass;
}

int cmd_length(const Options& opt, const std::string& expr, unsigned n) {
    const auto M = parse_module(read_expr(expr), opt.ambient());
    check_level(n, opt);
    if (!has_finite_length(M)) throw UsageError("module has infinite length");
    const auto c = length_at_level(M, n);
    ordered_json j = header("length");
    j["module"] = render_module(M);
    j["level"] = n;
    j["length"] = count_json(c);
    emit(opt, j, c.str() + "\n");
    return kPass;
}

int cmd_twist(const Options& opt, const std::string& expr) {
    const auto M = parse_module(read_expr(expr), opt.ambient());
    check_level(level(M), opt);
    const auto T = twist(M);
    const auto r = check_pullback(M);
    ordered_json j = header("twist");
    j["module"] = render_module(M);
    j["twist"] = render_module(T);
    j["lambda"] = r.lambda.str();
    j["lambda_twist"] = r.lambda_twist.str();
    j["pass"] = r.pass;
    emit(opt, j,
         "twist: " + render_module(T) + "\nlambda: " + r.lambda.str() + "\nlambda_twist: " + r.lambda_twist.str() +
             "\npullback: " + (r.pass ? "pass" : "FAIL") + "\n");
    return r.pass ? kPass : kCheckFailed;
}

int cmd_valuation(const Options& opt, const std::string& mon) {
    const auto m = parse_monomial(read_expr(mon), opt.ambient());
    const auto v = valuation(m);
    ordered_json j = header("valuation");
    j["monomial"] = monomial_string(m);
    j["valuation"] = v.str();
    emit(opt, j, v.str() + "\n");
    return kPass;
}

int cmd_ann_val(const Options& opt, const std::string& expr) {
    const auto M = parse_module(read_expr(expr), opt.ambient());
    check_level(level(M), opt);
    if (M.summands().size() != 1) throw UsageError("ann-val needs a single-summand module");
    if (!has_finite_length(M)) throw UsageError("module has infinite length");
    const auto r = check_annihilator_bound(M);
    ordered_json j = header("ann-val");
    j["module"] = render_module(M);
    j["ann_inf_valuation"] = r.t.str();
    j["lambda"] = r.lambda.str();
    j["simplex_bound"] = r.simplex_bound.str();
    j["simplex_holds"] = r.simplex_holds;
    if (r.box_bound) {
        j["box_bound"] = r.box_bound->str();
        j["box_holds"] = *r.box_holds;
    }
    j["pass"] = r.pass();
    std::string text = "ann_inf_valuation: " + r.t.str() + "\nlambda: " + r.lambda.str() +
                       "\nsimplex_bound: " + r.simplex_bound.str() + (r.simplex_holds ? " (holds)" : " (FAILS)") + "\n";
    if (r.box_bound) text += "box_bound: " + r.box_bound->str() + (*r.box_holds ? " (holds)" : " (fails)") + "\n";
    emit(opt, j, text);
    return r.pass() ? kPass : kCheckFailed;
}

std::string strip_prefix(std::string s, const std::string& prefix) {
    if (s.rfind(prefix, 0) == 0) s.erase(0, prefix.size());
    return s;
}

int cmd_family(const Options& opt, const std::string& base_text, const std::string& sched_text, unsigned n_max) {
    const auto amb = opt.ambient();
    const IdealFamily F{amb, parse_ideal(strip_prefix(base_text, "base="), amb),
                        parse_monomial_list(strip_prefix(sched_text, "sched="), amb)};
    check_level(level(F.member(n_max)), opt);
    const auto rep = family_report(F, n_max);
    ordered_json j = header("family");
    j["base"] = ideal_string(F.base);
    j["rows"] = ordered_json::array();
    std::string text = "n\tlambda\twitness\twitness_valuation\n";
    for (const auto& row : rep.rows) {
        ordered_json r;
        r["n"] = row.n;
        r["lambda"] = row.lambda.str();
        r["witness"] = row.witness ? ordered_json(monomial_string(*row.witness)) : ordered_json(nullptr);
        r["witness_valuation"] =
            row.witness_valuation ? ordered_json(row.witness_valuation->str()) : ordered_json(nullptr);
        j["rows"].push_back(r);
        text += std::to_string(row.n) + "\t" + row.lambda.str() + "\t" +
                (row.witness ? monomial_string(*row.witness) : "-") + "\t" +
                (row.witness_valuation ? row.witness_valuation->str() : "-") + "\n";
    }
    j["almost_zero_evidence"] = rep.almost_zero_evidence;
    text += std::string("almost_zero_evidence: ") + (rep.almost_zero_evidence ? "yes" : "no") + "\n";
    emit(opt, j, text);
    return kPass;
}

int cmd_splinter(const Options& opt, unsigned k, unsigned l, unsigned m) {
    const splinter::WitnessParams w(k, l, m);
    const auto r = splinter::verify_non_splinter(w);
    ordered_json j = header("splinter");
    j["k"] = k;
    j["l"] = l;
    j["m"] = m;
    j["integral_equation"] = r.integral_equation;
    j["member_in_T"] = r.member_in_T;
    j["nonmember_in_S"] = r.nonmember_in_S;
    auto yn = [](bool b) { return b ? "true" : "false"; };
    emit(opt, j,
         std::string("integral_equation: ") + yn(r.integral_equation) + "\nmember_in_T: " + yn(r.member_in_T) +
             "\nnonmember_in_S: " + yn(r.nonmember_in_S) + "\n");
    return r.pass() ? kPass : kCheckFailed;
}

int cmd_verify(const Options& opt, const std::string& suite) {
    verify::SessionConfig cfg;
    if (opt.prime_opt->count()) cfg.prime = opt.prime;
    if (opt.dim_opt->count()) cfg.dim = opt.dim;
    cfg.seed = opt.seed;
    cfg.trials = opt.trials;
    cfg.max_level = opt.max_level_opt->count() ? opt.max_level : 2;
    cfg.threads = opt.threads;
    try {
        cfg.validate();
    } catch (const std::invalid_argument& e) {
        throw UsageError(e.what());
    }
    std::vector<verify::SuiteReport> reports;
    try {
        reports = verify::run_suite(suite, cfg);
    } catch (const std::invalid_argument& e) {
        throw UsageError(e.what());
    }

    bool all_pass = true;
    ordered_json j = header("verify");
    j["suite"] = suite;
    j["seed"] = cfg.seed;
    j["trials"] = cfg.trials;
    j["max_level"] = cfg.max_level;
    j["suites"] = ordered_json::array();
    std::string text;
    for (const auto& r : reports) {
        all_pass = all_pass && r.pass();
        ordered_json s;
        s["name"] = r.name;
        s["trials"] = r.trials;
        s["passed"] = r.passed;
        s["failed"] = r.failures.size();
        s["tight_cases"] = r.tight_cases;
        s["failures"] = ordered_json::array();
        for (const auto& f : r.failures)
            s["failures"].push_back({{"trial", f.trial}, {"seed", f.seed}, {"inputs", f.inputs}, {"detail", f.detail}});
        if (opt.timing) s["wall_seconds"] = r.wall_seconds;
        j["suites"].push_back(s);

        text += r.name + ": " + std::to_string(r.passed) + "/" + std::to_string(r.trials) +
                (r.pass() ? " pass" : " FAIL") + " (tight " + std::to_string(r.tight_cases) + ")";
        if (opt.timing) text += " " + std::to_string(r.wall_seconds) + "s";
        text += "\n";
        for (const auto& f : r.failures)
            text += "  trial " + std::to_string(f.trial) + " seed " + std::to_string(f.seed) + ": " + f.inputs +
                    " -- " + f.detail + "\n";
    }
    j["pass"] = all_pass;
    emit(opt, j, text);
    return all_pass ? kPass : kCheckFailed;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact normalized lengths of monomial torsion modules over the p-power tower"};
    app.require_subcommand(1);
    app.fallthrough();

    Options opt;
    opt.prime_opt = app.add_option("--prime", opt.prime, "Ambient prime p")->capture_default_str();
    opt.dim_opt = app.add_option("--dim", opt.dim, "Ambient dimension d (p counts as one variable)")
                      ->capture_default_str();
    app.add_option("--seed", opt.seed, "Seed for randomized suites")->capture_default_str();
    app.add_option("--trials", opt.trials, "Trials per suite")->capture_default_str();
    opt.max_level_opt = app.add_option("--max-level", opt.max_level,
                                       "Level cap (random instances default to 2, expressions to 4)");
    app.add_option("--threads", opt.threads, "Worker threads for suites")->capture_default_str();
    app.add_flag("--json", opt.json, "Emit JSON");
    app.add_flag("--timing", opt.timing, "Include wall-clock times in suite reports");

    std::string expr, base, sched, suite;
    unsigned level_n = 0, n_max = 4, k = 3, l = 3, m = 3;
    std::function<int()> action;

    auto* lambda = app.add_subcommand("lambda", "Normalized length of a module");
    lambda->add_option("EXPR", expr, "Module expression, '-' for stdin")->required();
    lambda->callback([&] { action = [&] { return cmd_lambda(opt, expr); }; });

    auto* length = app.add_subcommand("length", "Length of the level-N model");
    length->add_option("--level", level_n, "Tower level N")->required();
    length->add_option("EXPR", expr, "Module expression, '-' for stdin")->required();
    length->callback([&] { action = [&] { return cmd_length(opt, expr, level_n); }; });

    auto* tw = app.add_subcommand("twist", "Frobenius twist and pull-back check");
    tw->add_option("EXPR", expr, "Module expression, '-' for stdin")->required();
    tw->callback([&] { action = [&] { return cmd_twist(opt, expr); }; });

    auto* val = app.add_subcommand("valuation", "m-adic valuation of a monomial");
    val->add_option("MON", expr, "Monomial")->required();
    val->callback([&] { action = [&] { return cmd_valuation(opt, expr); }; });

    auto* ann = app.add_subcommand("ann-val", "Least annihilator valuation and the almost-zero bound");
    ann->add_option("EXPR", expr, "Single-summand module expression, '-' for stdin")->required();
    ann->callback([&] { action = [&] { return cmd_ann_val(opt, expr); }; });

    auto* fam = app.add_subcommand("family", "Lengths along base + <g p^{-n}>");
    fam->add_option("BASE", base, "Base ideal, e.g. '<x2>' or 'base=<x2>'")->required();
    fam->add_option("SCHED", sched, "Scheduled monomials, e.g. 'p,x2' or 'sched=<p>'");
    fam->add_option("--n-max", n_max, "Last family index")->capture_default_str();
    fam->callback([&] { action = [&] { return cmd_family(opt, base, sched, n_max); }; });

    auto* spl = app.add_subcommand("splinter", "Check the non-splinter witness for (k, l, m)");
    spl->add_option("--k", k)->capture_default_str();
    spl->add_option("--l", l)->capture_default_str();
    spl->add_option("--m", m)->capture_default_str();
    spl->callback([&] { action = [&] { return cmd_splinter(opt, k, l, m); }; });

    auto* ver = app.add_subcommand("verify", "Run a randomized verification suite");
    ver->add_option("SUITE", suite,
                    "level-independence, additivity, pullback, lemma33, filtration, prop215, cor213, oracle, "
                    "positivity or all")
        ->required();
    ver->callback([&] { action = [&] { return cmd_verify(opt, suite); }; });

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kUsage;
    }

    try {
        return action();
    } catch (const UsageError& e) {
        std::cerr << "error: " << e.what() << "\n";
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
    } catch (const std::domain_error& e) {
        std::cerr << "error: " << e.what() << "\n";
    }
    return kUsage;
}
