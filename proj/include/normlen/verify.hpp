#pragma once

// Seeded randomized verification suites over random monomial instances.
// Trial i draws from its own generator seeded with mix(seed, i), so results
// do not depend on how trials are spread across threads.

#include <chrono>
#include <cstdint>
#include <functional>
#include <optional>
#include <random>
#include <string>
#include <thread>
#include <vector>

#include "normlen/dsl.hpp"
#include "normlen/frobval.hpp"
#include "normlen/length.hpp"

namespace normlen::verify {

inline constexpr unsigned kMaxLevelCap = 4;

struct SessionConfig {
    std::optional<std::uint32_t> prime; // unset: each trial draws p from {2, 3}
    std::optional<std::uint32_t> dim;   // unset: each trial draws d from {2, 3}
    std::uint64_t seed = 0;
    unsigned trials = 100;
    unsigned max_level = 2;
    unsigned threads = 1;

    void validate() const {
        if (prime && !is_prime(*prime)) throw std::invalid_argument(std::to_string(*prime) + " is not prime");
        if (dim && *dim < 1) throw std::invalid_argument("dimension must be at least 1");
        if (trials == 0) throw std::invalid_argument("trials must be positive");
        if (max_level > kMaxLevelCap)
            throw std::invalid_argument("max level " + std::to_string(max_level) + " exceeds the cap of " +
                                        std::to_string(kMaxLevelCap));
    }
};

// splitmix64 finalizer over (seed, index).
inline std::uint64_t trial_seed(std::uint64_t seed, std::uint64_t index) {
    std::uint64_t z = seed + 0x9e3779b97f4a7c15ULL * (index + 1);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

// Random instances: exponents on the level-e grid inside [0, 3]^d.
class InstanceGen {
public:
    InstanceGen(std::uint64_t seed, const SessionConfig& cfg) : rng_(seed), cfg_(cfg) {}

    std::uint64_t uniform(std::uint64_t lo, std::uint64_t hi) {
        return std::uniform_int_distribution<std::uint64_t>(lo, hi)(rng_);
    }
    bool coin(unsigned one_in) { return uniform(0, one_in - 1) == 0; }

    AmbientRing ambient() {
        const std::uint32_t p = cfg_.prime ? *cfg_.prime : static_cast<std::uint32_t>(uniform(0, 1) ? 3 : 2);
        const std::uint32_t d = cfg_.dim ? *cfg_.dim : static_cast<std::uint32_t>(uniform(2, 3));
        return AmbientRing(p, d);
    }

    unsigned level() { return static_cast<unsigned>(uniform(0, cfg_.max_level)); }

    PAdicRational exponent(const AmbientRing& amb, unsigned e, unsigned lo_units, unsigned hi_units) {
        const std::uint64_t q = static_cast<std::uint64_t>(prime_power(amb.prime, e));
        return PAdicRational::normalize(amb.prime, uniform(lo_units * q, hi_units * q), e);
    }

    // Exponents in [0, hi]^d; never the zero vector, so no accidental unit ideals.
    ExpVector monomial(const AmbientRing& amb, unsigned e, unsigned hi = 3) {
        for (;;) {
            ExpVector v = amb.zero();
            for (std::size_t i = 0; i < amb.dim; ++i) v.set(i, exponent(amb, e, 0, hi));
            if (!v.is_zero()) return v;
        }
    }

    // Any monomial in [0, hi]^d including 1.
    ExpVector scalar(const AmbientRing& amb, unsigned e, unsigned hi = 2) {
        ExpVector v = amb.zero();
        for (std::size_t i = 0; i < amb.dim; ++i) v.set(i, exponent(amb, e, 0, hi));
        return v;
    }

    MonomialIdeal ideal(const AmbientRing& amb, unsigned e, bool m_primary) {
        std::vector<ExpVector> gens;
        const auto count = uniform(1, 2 * amb.dim);
        for (std::uint64_t i = 0; i < count; ++i) gens.push_back(monomial(amb, e));
        auto I = make_ideal(amb, gens);
        if (m_primary) {
            for (std::size_t i = 0; i < amb.dim; ++i) {
                if (pure_power_exponent(I, i)) continue;
                const std::uint64_t q = static_cast<std::uint64_t>(prime_power(amb.prime, e));
                gens.push_back(amb.pure(i, PAdicRational::normalize(amb.prime, uniform(1, 3 * q), e)));
            }
            I = make_ideal(amb, gens);
        }
        return I;
    }

    // A single finite-length summand: R/I, J/I with I m-primary, or J/(J ∩ C)
    // with only C m-primary. The last two redraw a few times when they
    // collapse to zero, which would otherwise happen for about half of them.
    TorsionModule single_module(const AmbientRing& amb, unsigned e) {
        const auto kind = uniform(0, 2);
        if (kind == 0) return cyclic(ideal(amb, e, true));
        TorsionModule M;
        for (int attempt = 0; attempt < 4; ++attempt) {
            if (kind == 1) {
                const auto I = ideal(amb, e, true);
                M = subquotient(sum(I, ideal(amb, e, false)), I);
            } else {
                const auto J = ideal(amb, e, false);
                M = subquotient(J, intersect(J, ideal(amb, e, true)));
            }
            if (!M.is_zero()) break;
        }
        return M;
    }

    TorsionModule module(const AmbientRing& amb, unsigned e) {
        auto M = single_module(amb, e);
        if (coin(3)) M = direct_sum({M, single_module(amb, e)});
        return M;
    }

private:
    std::mt19937_64 rng_;
    const SessionConfig& cfg_;
};

struct TrialOutcome {
    bool pass = true;
    bool tight = false; // an inequality held with equality
    std::string inputs;
    std::string detail;
};

struct Failure {
    unsigned trial = 0;
    std::uint64_t seed = 0;
    std::string inputs;
    std::string detail;
};

struct SuiteReport {
    std::string name;
    unsigned trials = 0;
    unsigned passed = 0;
    unsigned tight_cases = 0;
    std::vector<Failure> failures;
    double wall_seconds = 0;

    bool pass() const { return failures.empty(); }
};

using Trial = std::function<TrialOutcome(InstanceGen&)>;

inline std::string ambient_tag(const AmbientRing& amb) {
    return "p=" + std::to_string(amb.prime) + " d=" + std::to_string(amb.dim);
}

inline SuiteReport run_trials(const std::string& name, const SessionConfig& cfg, const Trial& trial) {
    cfg.validate();
    const auto start = std::chrono::steady_clock::now();
    std::vector<TrialOutcome> outcomes(cfg.trials);
    auto work = [&](unsigned first, unsigned stride) {
        for (unsigned i = first; i < cfg.trials; i += stride) {
            InstanceGen gen(trial_seed(cfg.seed, i), cfg);
            try {
                outcomes[i] = trial(gen);
            } catch (const std::exception& e) {
                outcomes[i] = {false, false, outcomes[i].inputs, std::string("exception: ") + e.what()};
            }
        }
    };
    const unsigned threads = std::max(1u, std::min(cfg.threads, cfg.trials));
    if (threads == 1) {
        work(0, 1);
    } else {
        std::vector<std::jthread> pool;
        for (unsigned t = 0; t < threads; ++t) pool.emplace_back(work, t, threads);
    }

    SuiteReport rep;
    rep.name = name;
    rep.trials = cfg.trials;
    for (unsigned i = 0; i < cfg.trials; ++i) {
        const auto& o = outcomes[i];
        if (o.pass)
            ++rep.passed;
        else
            rep.failures.push_back({i, trial_seed(cfg.seed, i), o.inputs, o.detail});
        if (o.tight) ++rep.tight_cases;
    }
    rep.wall_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return rep;
}

// length_at_level(M, n+1) = p^d length_at_level(M, n) for n = level(M), level(M)+1.
inline SuiteReport level_independence(const SessionConfig& cfg) {
    return run_trials("level-independence", cfg, [](InstanceGen& g) {
        const auto amb = g.ambient();
        const auto M = g.module(amb, g.level());
        TrialOutcome o{true, false, ambient_tag(amb) + " M=" + render_module(M), ""};
        const unsigned n = level(M);
        const BigInt factor = prime_power(amb.prime, amb.dim);
        const BigInt c0 = length_at_level(M, n), c1 = length_at_level(M, n + 1), c2 = length_at_level(M, n + 2);
        o.pass = c1 == factor * c0 && c2 == factor * c1;
        o.detail = "counts " + c0.str() + ", " + c1.str() + ", " + c2.str();
        return o;
    });
}

// λ(K/I) = λ(J/I) + λ(K/J) for I ⊆ J ⊆ K.
inline SuiteReport additivity(const SessionConfig& cfg) {
    return run_trials("additivity", cfg, [](InstanceGen& g) {
        const auto amb = g.ambient();
        const unsigned e = g.level();
        const auto K = g.coin(3) ? MonomialIdeal::unit(amb) : g.ideal(amb, e, false);
        const auto I = intersect(K, g.ideal(amb, e, true));
        const auto J = sum(I, intersect(K, g.ideal(amb, e, false)));
        TrialOutcome o{true, false,
                       ambient_tag(amb) + " I=" + ideal_string(I) + " J=" + ideal_string(J) + " K=" + ideal_string(K),
                       ""};
        const auto r = check_additivity(I, J, K);
        o.pass = r.pass;
        o.detail = r.whole.str() + " vs " + r.sub.str() + " + " + r.quotient.str();
        return o;
    });
}

// λ(M^[F]) p^d = λ(M) for M = R/I, I m-primary containing p; plus the level
// shift length_at_level(M^[F], n+1) = length_at_level(M, n).
inline SuiteReport pullback(const SessionConfig& cfg) {
    return run_trials("pullback", cfg, [](InstanceGen& g) {
        const auto amb = g.ambient();
        const auto I = sum(g.ideal(amb, g.level(), true), principal(amb, uniformizer(amb)));
        const auto M = cyclic(I);
        TrialOutcome o{true, false, ambient_tag(amb) + " M=" + render_module(M), ""};
        const auto r = check_pullback(M);
        const unsigned n = level(M);
        const bool shift_ok = length_at_level(twist(M), n + 1) == length_at_level(M, n);
        o.pass = r.pass && shift_ok;
        o.detail = "lambda " + r.lambda.str() + ", twisted " + r.lambda_twist.str() +
                   (shift_ok ? "" : ", level shift mismatch");
        return o;
    });
}

// λ(abN) <= λ(aN') + λ(bN'') for N = R/I, N' = J/I, N'' = R/J.
inline SuiteReport product_bound(const SessionConfig& cfg) {
    return run_trials("lemma33", cfg, [](InstanceGen& g) {
        const auto amb = g.ambient();
        const unsigned e = g.level();
        const auto I = g.ideal(amb, e, true);
        const auto J = g.coin(6) ? I : sum(I, g.ideal(amb, e, false));
        const auto a = g.scalar(amb, g.level());
        const auto b = g.scalar(amb, g.level());
        TrialOutcome o{true, false,
                       ambient_tag(amb) + " I=" + ideal_string(I) + " J=" + ideal_string(J) +
                           " a=" + monomial_string(a) + " b=" + monomial_string(b),
                       ""};
        const auto r = check_product_bound(I, J, a, b);
        o.pass = r.part1 && r.part2;
        o.tight = r.part1_tight;
        o.detail = r.ab_n.str() + " <= " + r.a_sub.str() + " + " + r.b_quotient.str();
        return o;
    });
}

inline SuiteReport filtration(const SessionConfig& cfg) {
    return run_trials("filtration", cfg, [](InstanceGen& g) {
        const auto amb = g.ambient();
        const auto N = g.module(amb, g.level());
        const auto r = g.scalar(amb, g.level(), 1);
        TrialOutcome o{true, false, ambient_tag(amb) + " N=" + render_module(N) + " r=" + monomial_string(r), ""};
        const auto rep = check_filtration_inequalities(N, r);
        o.pass = rep.pass();
        for (const auto& c : rep.checks)
            if (!c.holds()) o.detail += c.label + ": " + c.lhs.str() + " > " + c.rhs.str() + "; ";
        return o;
    });
}

// λ(M) >= t^d/d! with t the least annihilator valuation; λ = 0 forces t = 0.
inline SuiteReport annihilator_bound(const SessionConfig& cfg) {
    return run_trials("prop215", cfg, [](InstanceGen& g) {
        const auto amb = g.ambient();
        const auto M = g.single_module(amb, g.level());
        TrialOutcome o{true, false, ambient_tag(amb) + " M=" + render_module(M), ""};
        const auto r = check_annihilator_bound(M);
        o.pass = r.pass();
        o.tight = r.lambda.to_rational() == r.simplex_bound;
        o.detail = "lambda " + r.lambda.str() + ", t " + r.t.str() + ", bound " + r.simplex_bound.str();
        return o;
    });
}

// Decay along families: base in the x-variables with p^{c/p^n} scheduled
// gives λ_n = λ_0/p^n; the zero base with pure powers scheduled on every
// coordinate gives λ_n = λ_0/p^{dn}.
inline SuiteReport family_decay(const SessionConfig& cfg) {
    return run_trials("cor213", cfg, [](InstanceGen& g) {
        const auto amb = g.ambient();
        const unsigned e = g.level();
        const unsigned n_max = 3;

        std::vector<ExpVector> base_gens;
        for (std::size_t i = 1; i < amb.dim; ++i) base_gens.push_back(amb.pure(i, g.exponent(amb, e, 1, 3)));
        for (std::uint64_t extra = g.uniform(0, amb.dim); extra > 0; --extra) {
            ExpVector v = g.monomial(amb, e);
            v.set(0, PAdicRational(amb.prime));
            if (!v.is_zero()) base_gens.push_back(v);
        }
        const auto p_sched = g.exponent(amb, e, 1, 3);
        const IdealFamily slow{amb, make_ideal(amb, base_gens), {amb.pure(0, p_sched)}};

        std::vector<ExpVector> sched;
        for (std::size_t i = 0; i < amb.dim; ++i) sched.push_back(amb.pure(i, g.exponent(amb, e, 1, 3)));
        const IdealFamily fast{amb, MonomialIdeal::zero(amb), sched};

        TrialOutcome o{true, false,
                       ambient_tag(amb) + " base=" + ideal_string(slow.base) + " sched=" + monomial_string(slow.scheduled[0]) +
                           " | zero base sched=" + ideal_string(make_ideal(amb, sched)),
                       ""};
        const auto rs = family_report(slow, n_max);
        const auto rf = family_report(fast, n_max);
        for (unsigned n = 0; n <= n_max; ++n) {
            const int sn = static_cast<int>(n);
            const bool slow_ok = rs.rows[n].lambda.scaled(sn) == rs.rows[0].lambda &&
                                 *rs.rows[n].witness_valuation == p_sched.scaled(-sn);
            const bool fast_ok = rf.rows[n].lambda.scaled(sn * static_cast<int>(amb.dim)) == rf.rows[0].lambda &&
                                 *rf.rows[n].witness_valuation == rf.rows[0].witness_valuation->scaled(-sn);
            if (!slow_ok) o.detail += "slow family breaks at n=" + std::to_string(n) + "; ";
            if (!fast_ok) o.detail += "zero-base family breaks at n=" + std::to_string(n) + "; ";
            o.pass = o.pass && slow_ok && fast_ok;
        }
        if (!rs.almost_zero_evidence || !rf.almost_zero_evidence) {
            o.pass = false;
            o.detail += "almost-zero evidence not flagged";
        }
        return o;
    });
}

// normalized_length(R/I) equals the inclusion-exclusion volume.
inline SuiteReport oracle(const SessionConfig& cfg) {
    return run_trials("oracle", cfg, [](InstanceGen& g) {
        const auto amb = g.ambient();
        const auto I = g.ideal(amb, g.level(), true);
        TrialOutcome o{true, false, ambient_tag(amb) + " I=" + ideal_string(I), ""};
        const Rational lam = normalized_length(cyclic(I)).to_rational();
        const Rational vol = volume_oracle(I);
        o.pass = lam == vol;
        o.detail = "count " + lam.str() + ", volume " + vol.str();
        return o;
    });
}

// λ(J/I) = 0 iff J = I.
inline SuiteReport positivity(const SessionConfig& cfg) {
    return run_trials("positivity", cfg, [](InstanceGen& g) {
        const auto amb = g.ambient();
        const unsigned e = g.level();
        const auto I = g.ideal(amb, e, true);
        MonomialIdeal J = I;
        switch (g.uniform(0, 3)) {
        case 0:
            break;
        case 1: // generators already inside I
            J = sum(I, shift(I, g.scalar(amb, e)));
            break;
        default:
            J = sum(I, g.ideal(amb, e, false));
        }
        TrialOutcome o{true, false, ambient_tag(amb) + " I=" + ideal_string(I) + " J=" + ideal_string(J), ""};
        const auto lam = normalized_length(subquotient(J, I));
        o.pass = lam.is_zero() == (J == I);
        o.tight = J == I;
        o.detail = "lambda " + lam.str();
        return o;
    });
}

inline const std::vector<std::pair<std::string, SuiteReport (*)(const SessionConfig&)>>& suites() {
    static const std::vector<std::pair<std::string, SuiteReport (*)(const SessionConfig&)>> table{
        {"level-independence", level_independence},
        {"additivity", additivity},
        {"pullback", pullback},
        {"lemma33", product_bound},
        {"filtration", filtration},
        {"prop215", annihilator_bound},
        {"cor213", family_decay},
        {"oracle", oracle},
        {"positivity", positivity},
    };
    return table;
}

// Runs one named suite, or every suite for "all".
inline std::vector<SuiteReport> run_suite(const std::string& name, const SessionConfig& cfg) {
    std::vector<SuiteReport> out;
    for (const auto& [n, fn] : suites())
        if (name == "all" || name == n) out.push_back(fn(cfg));
    if (out.empty()) throw std::invalid_argument("unknown suite '" + name + "'");
    return out;
}

} // namespace normlen::verify
