#pragma once

// Frobenius twist, p-power filtrations, m-adic valuations of monomials and
// level-indexed ideal families.

#include <optional>
#include <string>
#include <vector>

#include "normlen/length.hpp"

namespace normlen {

// p as a monomial of the ambient ring.
inline ExpVector uniformizer(const AmbientRing& ambient) { return ambient.pure(0, 1); }

// p^{t/p}.
inline ExpVector uniformizer_root(const AmbientRing& ambient, unsigned t) {
    return ambient.pure(0, PAdicRational::normalize(ambient.prime, t, 1));
}

inline bool killed_by_p(const TorsionModule& M) {
    return scalar_multiple(uniformizer(M.ambient()), M).is_zero();
}

// M^{[F]}: on J/I with pJ ⊆ I, divide every exponent by p.
inline TorsionModule twist(const TorsionModule& M) {
    if (!killed_by_p(M)) throw PreconditionError("twist needs p * M = 0");
    std::vector<Subquotient> out;
    for (const auto& s : M.summands()) out.push_back({scale(s.top, -1), scale(s.bottom, -1)});
    return TorsionModule(std::move(out));
}

struct PullbackReport {
    LengthValue lambda;
    LengthValue lambda_twist;
    bool pass = false;
};

inline PullbackReport check_pullback(const TorsionModule& M) {
    const auto twisted = twist(M);
    PullbackReport r{normalized_length(M), normalized_length(twisted)};
    r.pass = r.lambda_twist.scaled(static_cast<int>(M.ambient().dim)) == r.lambda;
    return r;
}

// [N_{p^{1/p}}, N_{p^{2/p}}, ..., N_p], each optionally multiplied by r.
inline std::vector<TorsionModule> p_power_filtration(const TorsionModule& N,
                                                     const std::optional<ExpVector>& r = std::nullopt) {
    if (!has_finite_length(N)) throw PreconditionError("filtration needs a finite-length module");
    std::vector<TorsionModule> out;
    for (unsigned t = 1; t <= N.ambient().prime; ++t) {
        auto step = ann_submodule(uniformizer_root(N.ambient(), t), N);
        out.push_back(r ? scalar_multiple(*r, step) : std::move(step));
    }
    return out;
}

struct Inequality {
    std::string label;
    LengthValue lhs;
    LengthValue rhs;

    bool holds() const { return lhs <= rhs; }
    bool tight() const { return lhs == rhs; }
};

struct FiltrationReport {
    std::vector<Inequality> checks;
    bool pass() const {
        return std::all_of(checks.begin(), checks.end(), [](const auto& c) { return c.holds(); });
    }
};

// Inequalities along N_{p^{1/p}} ⊆ ... ⊆ N_p with layers
// Q_t = N_{p^{t/p}} / N_{p^{(t-1)/p}}:
//   layer:   λ(Q_t) <= λ(N_{p^{1/p}})
//   step:    λ(r^t N_{p^{t/p}}) <= λ(r^{t-1} N_{p^{(t-1)/p}}) + λ(r Q_t)
//   sum:     λ(r^p N_p) <= Σ_t λ(r Q_t)
//   scaled:  λ(r^p N_p) <= p λ(r N_{p^{1/p}})
//   count:   λ(N_p) <= p λ(N_{p^{1/p}})
inline FiltrationReport check_filtration_inequalities(const TorsionModule& N, const ExpVector& r) {
    const AmbientRing& amb = N.ambient();
    const unsigned p = amb.prime;
    const auto filt = p_power_filtration(N);
    const auto bottom = ann_submodule(amb.zero(), N);
    auto lam = [](const TorsionModule& M) { return normalized_length(M); };
    auto power = [&](unsigned t) { return r.times(t); };

    std::vector<TorsionModule> layers;
    for (unsigned t = 1; t <= p; ++t) layers.push_back(quotient(filt[t - 1], t == 1 ? bottom : filt[t - 2]));

    FiltrationReport rep;
    const auto lam_first = lam(filt.front());
    for (unsigned t = 1; t <= p; ++t)
        rep.checks.push_back({"layer t=" + std::to_string(t), lam(layers[t - 1]), lam_first});

    LengthValue layer_sum = LengthValue::zero(p);
    for (unsigned t = 1; t <= p; ++t) layer_sum = layer_sum + lam(scalar_multiple(r, layers[t - 1]));
    for (unsigned t = 2; t <= p; ++t)
        rep.checks.push_back({"step t=" + std::to_string(t), lam(scalar_multiple(power(t), filt[t - 1])),
                              lam(scalar_multiple(power(t - 1), filt[t - 2])) +
                                  lam(scalar_multiple(r, layers[t - 1]))});

    const auto top = lam(scalar_multiple(power(p), filt.back()));
    rep.checks.push_back({"sum", top, layer_sum});
    rep.checks.push_back({"scaled", top, lam(scalar_multiple(r, filt.front())).scaled(1)});
    rep.checks.push_back({"count", lam(filt.back()), lam_first.scaled(1)});
    return rep;
}

struct ProductBoundReport {
    LengthValue ab_n;       // λ(ab N)
    LengthValue a_sub;      // λ(a N')
    LengthValue b_quotient; // λ(b N'')
    bool part1 = false;
    bool part1_tight = false;
    // Part (2) only applies when λ(N') = 0 or λ(N'') = 0.
    bool part2_applicable = false;
    bool part2 = true;
};

// N = R/I, N' = J/I, N'' = R/J for I ⊆ J.
inline ProductBoundReport check_product_bound(const MonomialIdeal& I, const MonomialIdeal& J, const ExpVector& a,
                                   const ExpVector& b) {
    const auto N = cyclic(I);
    const auto sub = subquotient(J, I);
    const auto quo = cyclic(J);
    if (!has_finite_length(N)) throw PreconditionError("R/I has infinite length");

    ProductBoundReport r{normalized_length(scalar_multiple(a + b, N)), normalized_length(scalar_multiple(a, sub)),
                    normalized_length(scalar_multiple(b, quo))};
    r.part1 = r.ab_n <= r.a_sub + r.b_quotient;
    r.part1_tight = r.ab_n == r.a_sub + r.b_quotient;

    const auto a_n = normalized_length(scalar_multiple(a, N));
    if (normalized_length(sub).is_zero()) {
        r.part2_applicable = true;
        r.part2 = a_n == normalized_length(scalar_multiple(a, quo));
    }
    if (normalized_length(quo).is_zero()) {
        r.part2_applicable = true;
        r.part2 = r.part2 && a_n == normalized_length(scalar_multiple(a, sub));
    }
    return r;
}

// Extended m-adic valuation of a monomial: the exponent sum.
inline PAdicRational valuation(const ExpVector& m) {
    PAdicRational v(m.prime());
    for (const auto& c : m.coords()) v = v + c;
    return v;
}

// inf v(b) over b in Ann(J/I) = (I : J); attained at a minimal generator.
inline PAdicRational ann_inf_valuation(const TorsionModule& M) {
    if (M.summands().size() != 1) throw PreconditionError("annihilator valuation needs a single summand");
    const auto& s = M.summands().front();
    if (s.top.is_zero()) return PAdicRational(M.ambient().prime);
    const auto ann = colon_ideal(s.bottom, s.top);
    std::optional<PAdicRational> best;
    for (const auto& g : ann.gens()) {
        auto v = valuation(g);
        if (!best || v < *best) best = std::move(v);
    }
    return *best;
}

struct AnnihilatorBoundReport {
    LengthValue lambda;
    PAdicRational t;                 // ann_inf_valuation
    Rational simplex_bound;          // t^d / d!
    bool simplex_holds = false;
    bool zero_implies_zero = false;  // λ = 0 ⟹ t = 0
    std::optional<int> k;            // least k with p^{-k} <= t, when t > 0
    std::optional<Rational> box_bound; // p^{-dk}
    std::optional<bool> box_holds;

    bool pass() const { return simplex_holds && zero_implies_zero; }
};

inline AnnihilatorBoundReport check_annihilator_bound(const TorsionModule& M) {
    if (!has_finite_length(M)) throw PreconditionError("module has infinite length");
    const AmbientRing& amb = M.ambient();
    AnnihilatorBoundReport r{normalized_length(M), ann_inf_valuation(M), 0, false, false, {}, {}, {}};
    const Rational t = r.t.to_rational();
    const Rational lam = r.lambda.to_rational();

    Rational bound = 1;
    for (unsigned i = 1; i <= amb.dim; ++i) bound *= t / i;
    r.simplex_bound = bound;
    r.simplex_holds = lam >= bound;
    r.zero_implies_zero = !r.lambda.is_zero() || r.t.is_zero();

    if (!r.t.is_zero()) {
        const Rational p = amb.prime;
        int k = 0;
        Rational step = 1; // p^{-k}
        if (step <= t) {
            while (step * p <= t) {
                step *= p;
                --k;
            }
        } else {
            while (step > t) {
                step /= p;
                ++k;
            }
        }
        r.k = k;
        Rational box = 1;
        for (unsigned i = 0; i < amb.dim; ++i) box *= step;
        r.box_bound = box;
        r.box_holds = lam >= box;
    }
    return r;
}

// member(n) = base + < g * p^{-n} : g in scheduled >.
struct IdealFamily {
    AmbientRing ambient;
    MonomialIdeal base;
    std::vector<ExpVector> scheduled;

    MonomialIdeal member(unsigned n) const {
        std::vector<ExpVector> gens;
        for (const auto& g : scheduled) gens.push_back(g.scaled(-static_cast<int>(n)));
        return sum(base, make_ideal(ambient, std::move(gens)));
    }
};

struct FamilyRow {
    unsigned n = 0;
    LengthValue lambda;
    std::optional<ExpVector> witness;
    std::optional<PAdicRational> witness_valuation;
};

struct FamilyReport {
    std::vector<FamilyRow> rows;
    // Witness valuations and lengths both strictly decrease along the family.
    bool almost_zero_evidence = false;
};

inline FamilyReport family_report(const IdealFamily& F, unsigned n_max) {
    FamilyReport rep;
    for (unsigned n = 0; n <= n_max; ++n) {
        const auto M = cyclic(F.member(n));
        if (!has_finite_length(M))
            throw PreconditionError("family member " + std::to_string(n) + " has infinite length");
        FamilyRow row{n, normalized_length(M), std::nullopt, std::nullopt};
        for (const auto& g : F.scheduled) {
            const auto w = g.scaled(-static_cast<int>(n));
            auto v = valuation(w);
            if (!row.witness_valuation || v < *row.witness_valuation) {
                row.witness = w;
                row.witness_valuation = std::move(v);
            }
        }
        rep.rows.push_back(std::move(row));
    }
    bool evidence = !F.scheduled.empty() && rep.rows.size() > 1;
    for (std::size_t i = 1; i < rep.rows.size() && evidence; ++i)
        evidence = *rep.rows[i].witness_valuation < *rep.rows[i - 1].witness_valuation &&
                   rep.rows[i].lambda < rep.rows[i - 1].lambda;
    rep.almost_zero_evidence = evidence;
    return rep;
}

} // namespace normlen
