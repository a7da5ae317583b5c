#include <gtest/gtest.h>

#include <algorithm>
#include <random>

#include "normlen/splinter.hpp"

using namespace normlen;
using namespace normlen::splinter;

namespace {

const WitnessParams W333{3, 3, 3};

IntPoly random_poly(std::mt19937_64& rng, unsigned max_deg, int terms) {
    std::uniform_int_distribution<unsigned> deg(0, max_deg);
    std::uniform_int_distribution<int> coeff(-5, 5);
    IntPoly f;
    for (int i = 0; i < terms; ++i) f.add_term({deg(rng), deg(rng), deg(rng)}, coeff(rng));
    return f;
}

// Rewrites one randomly chosen reducible term per step, choosing the rule at
// random when both apply, until nothing is reducible.
IntPoly reduce_random_order(const IntPoly& f, const WitnessParams& w, std::mt19937_64& rng) {
    IntPoly cur = f;
    for (;;) {
        std::vector<std::pair<Term, BigInt>> reducible;
        for (const auto& [t, c] : cur.terms())
            if (t[0] >= 2 || t[1] >= w.k) reducible.emplace_back(t, c);
        if (reducible.empty()) return cur;
        const auto& [t, c] = reducible[std::uniform_int_distribution<std::size_t>(0, reducible.size() - 1)(rng)];
        const bool u_ok = t[0] >= 2, x_ok = t[1] >= w.k;
        const bool use_u = u_ok && (!x_ok || rng() % 2 == 0);
        IntPoly next = cur;
        next.add_term(t, -c);
        if (use_u) {
            next.add_term({t[0] - 2, t[1] + w.k - 2, t[2] + w.l - 2}, c);
        } else {
            next.add_term({t[0], t[1] - w.k, t[2] + w.l}, c);
            next.add_term({t[0], t[1] - w.k, t[2]}, c * prime_power(2, w.m));
        }
        cur = std::move(next);
    }
}

} // namespace

TEST(WitnessParams, RejectsDegenerateTriples) {
    EXPECT_THROW(WitnessParams(2, 3, 3), std::invalid_argument);
    EXPECT_THROW(WitnessParams(3, 2, 3), std::invalid_argument);
    EXPECT_THROW(WitnessParams(3, 3, 2), std::invalid_argument);
    EXPECT_NO_THROW(WitnessParams(3, 3, 3));
}

TEST(Reduce, SingleRules) {
    EXPECT_EQ(reduce(IntPoly::u() * IntPoly::u(), W333), IntPoly::x() * IntPoly::y());
    EXPECT_EQ(reduce(IntPoly::x(3), W333), IntPoly::y(3) + IntPoly(8));
    EXPECT_EQ(reduce(IntPoly::u() * IntPoly::u() * IntPoly::y(2), W333), IntPoly::x() * IntPoly::y(3));
}

TEST(Reduce, NormalFormsAreIrreducible) {
    std::mt19937_64 rng(5);
    for (int i = 0; i < 50; ++i) {
        const auto nf = reduce(random_poly(rng, 6, 5), W333);
        EXPECT_LE(nf.degree(0), 1u);
        EXPECT_LT(nf.degree(1), 3u);
    }
}

TEST(IntegralEquation, WorkedTriples) {
    EXPECT_TRUE(verify_integral_equation(W333));
    EXPECT_TRUE(verify_integral_equation({4, 3, 3}));
    EXPECT_TRUE(verify_integral_equation({5, 5, 5}));
}

TEST(IntegralEquation, ExpandedFormForThreeThreeThree) {
    // (x^2 - uy)^2 + 2uy(x^2 - uy) - 8x = x^4 - u^2 y^2 - 8x before the u-rule.
    const IntPoly a = two_v(W333);
    const IntPoly uy = IntPoly::u() * IntPoly::y();
    const IntPoly expanded = a * a + IntPoly(2) * uy * a - IntPoly::monomial(0, 1, 0, 8);
    EXPECT_EQ(expanded, IntPoly::x(4) - IntPoly::u() * IntPoly::u() * IntPoly::y(2) - IntPoly::monomial(0, 1, 0, 8));
    EXPECT_TRUE(reduce(expanded, W333).is_zero());
}

TEST(IntegralEquation, Sweep) {
    for (unsigned k = 3; k <= 8; ++k)
        for (unsigned l = 3; l <= 8; ++l)
            for (unsigned m = 3; m <= 8; ++m) EXPECT_TRUE(verify_integral_equation({k, l, m})) << k << l << m;
}

TEST(IntegralEquation, WrongConstantFails) {
    // Replacing 2^{m-2} by 2^{m-1} breaks the identity.
    const WitnessParams w{3, 3, 3};
    const IntPoly a = two_v(w);
    const IntPoly uy = IntPoly::u() * IntPoly::y();
    const IntPoly bad = a * a + IntPoly(2) * uy * a - IntPoly::monomial(0, w.k - 2, 0, 16);
    EXPECT_FALSE(reduce(bad, w).is_zero());
}

TEST(NonSplinter, WorkedTriples) {
    const auto r = verify_non_splinter(W333);
    EXPECT_TRUE(r.integral_equation);
    EXPECT_TRUE(r.member_in_T);
    EXPECT_TRUE(r.nonmember_in_S);
    EXPECT_EQ(r.image, std::vector<unsigned>{2});
    EXPECT_TRUE(verify_non_splinter({3, 4, 5}).pass());
}

TEST(NonSplinter, ImageModYTwo) {
    EXPECT_TRUE(image_mod_y_two(IntPoly(2) * IntPoly::x(2), W333).empty());
    EXPECT_TRUE(image_mod_y_two(IntPoly::y() * IntPoly::x(), W333).empty());
    // x^3 = y^3 + 8 vanishes modulo (y, 2).
    EXPECT_TRUE(image_mod_y_two(IntPoly::x(3), W333).empty());
    EXPECT_EQ(image_mod_y_two(IntPoly::x(1) + IntPoly(3), W333), (std::vector<unsigned>{0, 1}));
    EXPECT_THROW(image_mod_y_two(IntPoly::u(), W333), std::invalid_argument);
}

TEST(Reduce, ConfluentUnderRandomRuleOrder) {
    std::mt19937_64 rng(99);
    for (const WitnessParams w : {WitnessParams{3, 3, 3}, WitnessParams{4, 5, 3}, WitnessParams{6, 3, 4}}) {
        for (int i = 0; i < 40; ++i) {
            const auto f = random_poly(rng, 7, 6);
            const auto expected = reduce(f, w);
            for (int order = 0; order < 3; ++order) EXPECT_EQ(reduce_random_order(f, w, rng), expected);
        }
    }
}

TEST(Reduce, RingHomomorphism) {
    std::mt19937_64 rng(123);
    for (const WitnessParams w : {WitnessParams{3, 3, 3}, WitnessParams{5, 4, 3}}) {
        for (int i = 0; i < 40; ++i) {
            const auto f = random_poly(rng, 5, 4), g = random_poly(rng, 5, 4);
            EXPECT_EQ(reduce(f * g, w), reduce(reduce(f, w) * reduce(g, w), w));
            EXPECT_EQ(reduce(f + g, w), reduce(f, w) + reduce(g, w));
        }
    }
}
