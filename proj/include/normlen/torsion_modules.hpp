#pragma once

// Finitely presented m-torsion R_inf-modules given as direct sums of monomial
// subquotients J/I. Every operation below stays inside this class.

#include <string>
#include <utility>
#include <vector>

#include "normlen/ideals.hpp"

namespace normlen {

struct ContainmentError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// The module top/bottom, with bottom contained in top.
struct Subquotient {
    MonomialIdeal top;
    MonomialIdeal bottom;

    bool is_zero() const { return top == bottom; }
    friend bool operator==(const Subquotient&, const Subquotient&) = default;
};

class TorsionModule {
public:
    TorsionModule() = default;

    explicit TorsionModule(std::vector<Subquotient> summands) : summands_(std::move(summands)) {
        if (summands_.empty()) throw std::invalid_argument("a module needs at least one summand");
        for (const auto& s : summands_) {
            check_same_ambient(s.top, s.bottom);
            if (s.top.ambient() != ambient()) throw DimensionError("summands live in different ambient rings");
            if (!ideal_contains(s.top, s.bottom))
                throw ContainmentError(ideal_string(s.bottom) + " is not contained in " + ideal_string(s.top));
        }
    }

    const AmbientRing& ambient() const { return summands_.front().top.ambient(); }
    const std::vector<Subquotient>& summands() const noexcept { return summands_; }

    bool is_zero() const {
        return std::all_of(summands_.begin(), summands_.end(), [](const auto& s) { return s.is_zero(); });
    }

    friend bool operator==(const TorsionModule&, const TorsionModule&) = default;

private:
    std::vector<Subquotient> summands_;
};

inline TorsionModule subquotient(const MonomialIdeal& J, const MonomialIdeal& I) {
    return TorsionModule({Subquotient{J, I}});
}

// R_inf / I.
inline TorsionModule cyclic(const MonomialIdeal& I) { return subquotient(MonomialIdeal::unit(I.ambient()), I); }

inline TorsionModule zero_module(const AmbientRing& ambient) {
    const auto unit = MonomialIdeal::unit(ambient);
    return subquotient(unit, unit);
}

inline TorsionModule direct_sum(const std::vector<TorsionModule>& ms) {
    if (ms.empty()) throw std::invalid_argument("direct sum of an empty list");
    std::vector<Subquotient> all;
    for (const auto& m : ms) {
        if (m.ambient() != ms.front().ambient()) throw DimensionError("direct sum across different ambient rings");
        all.insert(all.end(), m.summands().begin(), m.summands().end());
    }
    return TorsionModule(std::move(all));
}

// a * (J/I) = (aJ + I)/I on every summand.
inline TorsionModule scalar_multiple(const ExpVector& a, const TorsionModule& M) {
    std::vector<Subquotient> out;
    for (const auto& s : M.summands()) out.push_back({sum(shift(s.top, a), s.bottom), s.bottom});
    return TorsionModule(std::move(out));
}

// {m in M : a m = 0} = ((I : a) ∩ J)/I on every summand.
inline TorsionModule ann_submodule(const ExpVector& a, const TorsionModule& M) {
    std::vector<Subquotient> out;
    for (const auto& s : M.summands()) out.push_back({intersect(colon_monomial(s.bottom, a), s.top), s.bottom});
    return TorsionModule(std::move(out));
}

// Quotient of M by a submodule N given over the same summand bottoms,
// i.e. the summands J_M / J_N.
inline TorsionModule quotient(const TorsionModule& M, const TorsionModule& N) {
    if (M.summands().size() != N.summands().size())
        throw std::invalid_argument("quotient needs matching summand structure");
    std::vector<Subquotient> out;
    for (std::size_t i = 0; i < M.summands().size(); ++i) {
        const auto& m = M.summands()[i];
        const auto& n = N.summands()[i];
        if (m.bottom != n.bottom) throw std::invalid_argument("quotient needs matching summand bottoms");
        out.push_back({m.top, n.top});
    }
    return TorsionModule(std::move(out));
}

// Submodule containment for modules sharing summand bottoms.
inline bool submodule_of(const TorsionModule& N, const TorsionModule& M) {
    if (M.summands().size() != N.summands().size()) return false;
    for (std::size_t i = 0; i < M.summands().size(); ++i) {
        const auto& m = M.summands()[i];
        const auto& n = N.summands()[i];
        if (m.bottom != n.bottom || !ideal_contains(m.top, n.top)) return false;
    }
    return true;
}

// J/I has finite length iff (I : g) is m-primary for every generator g of J.
inline bool has_finite_length(const TorsionModule& M) {
    for (const auto& s : M.summands())
        for (const auto& g : s.top.gens())
            if (!is_m_primary(colon_monomial(s.bottom, g))) return false;
    return true;
}

inline unsigned level(const TorsionModule& M) {
    unsigned l = 0;
    for (const auto& s : M.summands()) l = std::max({l, level(s.top), level(s.bottom)});
    return l;
}

} // namespace normlen
