#include <gtest/gtest.h>

#include <set>

#include "normlen/verify.hpp"

using namespace normlen;
using namespace normlen::verify;

namespace {

SessionConfig small(unsigned trials, std::uint64_t seed = 7) {
    SessionConfig cfg;
    cfg.seed = seed;
    cfg.trials = trials;
    return cfg;
}

} // namespace

TEST(Config, Validation) {
    SessionConfig cfg;
    EXPECT_NO_THROW(cfg.validate());
    cfg.prime = 6;
    EXPECT_THROW(cfg.validate(), std::invalid_argument);
    cfg.prime = 3;
    cfg.max_level = kMaxLevelCap + 1;
    EXPECT_THROW(cfg.validate(), std::invalid_argument);
    cfg.max_level = kMaxLevelCap;
    cfg.trials = 0;
    EXPECT_THROW(cfg.validate(), std::invalid_argument);
    cfg.trials = 1;
    cfg.dim = 0;
    EXPECT_THROW(cfg.validate(), std::invalid_argument);
}

TEST(TrialSeed, DistinctAndStable) {
    std::set<std::uint64_t> seen;
    for (std::uint64_t i = 0; i < 10000; ++i) seen.insert(trial_seed(42, i));
    EXPECT_EQ(seen.size(), 10000u);
    EXPECT_EQ(trial_seed(42, 3), trial_seed(42, 3));
    EXPECT_NE(trial_seed(42, 3), trial_seed(43, 3));
}

TEST(Generator, InstancesSatisfyPreconditions) {
    SessionConfig cfg;
    for (std::uint64_t i = 0; i < 500; ++i) {
        InstanceGen g(trial_seed(1, i), cfg);
        const auto amb = g.ambient();
        EXPECT_TRUE(amb.prime == 2 || amb.prime == 3);
        EXPECT_TRUE(amb.dim == 2 || amb.dim == 3);
        const unsigned e = g.level();
        EXPECT_LE(e, cfg.max_level);

        const auto I = g.ideal(amb, e, true);
        EXPECT_TRUE(is_m_primary(I));
        EXPECT_LE(level(I), e);
        for (const auto& gen : I.gens())
            for (const auto& c : gen.coords()) EXPECT_LE(c.to_rational(), 3);

        const auto M = g.module(amb, e);
        EXPECT_TRUE(has_finite_length(M)) << render_module(M);
        EXPECT_LE(level(M), e);
        EXPECT_FALSE(g.monomial(amb, e).is_zero());
    }
}

TEST(Generator, FixedAmbientIsRespected) {
    SessionConfig cfg;
    cfg.prime = 5;
    cfg.dim = 4;
    InstanceGen g(9, cfg);
    const auto amb = g.ambient();
    EXPECT_EQ(amb.prime, 5u);
    EXPECT_EQ(amb.dim, 4u);
}

TEST(Suites, AllPassOnSmallRuns) {
    for (const auto& [name, fn] : suites()) {
        const auto rep = fn(small(25));
        EXPECT_EQ(rep.name, name);
        EXPECT_EQ(rep.trials, 25u);
        EXPECT_EQ(rep.passed, 25u) << name << ": " << (rep.failures.empty() ? "" : rep.failures.front().detail);
        EXPECT_TRUE(rep.pass());
    }
}

TEST(Suites, ThreadCountDoesNotChangeResults) {
    auto one = small(40, 11);
    auto many = one;
    many.threads = 4;
    for (const char* name : {"lemma33", "filtration", "prop215"}) {
        const auto a = run_suite(name, one).front();
        const auto b = run_suite(name, many).front();
        EXPECT_EQ(a.passed, b.passed);
        EXPECT_EQ(a.tight_cases, b.tight_cases);
        EXPECT_EQ(a.failures.size(), b.failures.size());
    }
}

TEST(Suites, FailuresCarryReproductionData) {
    const auto rep = run_trials("always-fails", small(3, 5), [](InstanceGen& g) {
        TrialOutcome o;
        o.pass = false;
        o.inputs = "draw=" + std::to_string(g.uniform(0, 1000));
        o.detail = "forced";
        return o;
    });
    ASSERT_EQ(rep.failures.size(), 3u);
    for (const auto& f : rep.failures) {
        EXPECT_EQ(f.seed, trial_seed(5, f.trial));
        InstanceGen again(f.seed, small(3, 5));
        EXPECT_EQ(f.inputs, "draw=" + std::to_string(again.uniform(0, 1000)));
    }
}

TEST(Suites, ExceptionsBecomeFailures) {
    const auto rep = run_trials("throws", small(2), [](InstanceGen&) -> TrialOutcome { throw PreconditionError("boom"); });
    EXPECT_EQ(rep.passed, 0u);
    ASSERT_EQ(rep.failures.size(), 2u);
    EXPECT_NE(rep.failures[0].detail.find("boom"), std::string::npos);
}

TEST(Suites, UnknownNameRejected) {
    EXPECT_THROW(run_suite("nonsense", small(1)), std::invalid_argument);
    EXPECT_EQ(run_suite("all", small(2)).size(), suites().size());
}
