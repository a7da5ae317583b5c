#pragma once

// Monomial ideals of R_inf defined over a finite tower level R_n.

#include <algorithm>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "normlen/lattice.hpp"

namespace normlen {

// The regular tower over V[[x2, ..., xd]] with uniformizer p; `dim` counts p.
struct AmbientRing {
    std::uint32_t prime = 2;
    std::uint32_t dim = 1;

    AmbientRing() = default;
    AmbientRing(std::uint32_t p, std::uint32_t d) : prime(p), dim(d) {
        if (!is_prime(p)) throw std::invalid_argument(std::to_string(p) + " is not prime");
        if (d < 1) throw std::invalid_argument("ambient dimension must be at least 1");
    }

    ExpVector zero() const { return ExpVector(prime, dim); }

    // The pure power of coordinate i with the given exponent.
    ExpVector pure(std::size_t i, const PAdicRational& e) const {
        ExpVector v = zero();
        v.set(i, e);
        return v;
    }
    ExpVector pure(std::size_t i, long e) const { return pure(i, PAdicRational::integer(prime, e)); }

    PAdicRational exponent(const BigInt& num, unsigned level) const {
        return PAdicRational::normalize(prime, num, level);
    }

    void check(const ExpVector& v) const {
        if (v.dim() != dim)
            throw DimensionError("monomial has " + std::to_string(v.dim()) + " coordinates, ambient dimension is " +
                                 std::to_string(dim));
        if (v.prime() != prime) throw std::invalid_argument("monomial over a different prime");
    }

    friend bool operator==(const AmbientRing&, const AmbientRing&) = default;
};

class MonomialIdeal {
public:
    MonomialIdeal() = default;

    // Removes every generator that is a multiple of another one and sorts the
    // remaining antichain, so equal ideals have equal generator lists.
    static MonomialIdeal make(const AmbientRing& ambient, std::vector<ExpVector> raw) {
        for (const auto& g : raw) ambient.check(g);
        std::sort(raw.begin(), raw.end(), lex_less);
        raw.erase(std::unique(raw.begin(), raw.end()), raw.end());
        std::vector<ExpVector> keep;
        for (std::size_t i = 0; i < raw.size(); ++i) {
            bool redundant = false;
            for (std::size_t j = 0; j < raw.size() && !redundant; ++j)
                redundant = j != i && dominates(raw[i], raw[j]);
            if (!redundant) keep.push_back(raw[i]);
        }
        MonomialIdeal I;
        I.ambient_ = ambient;
        I.gens_ = std::move(keep);
        return I;
    }

    static MonomialIdeal zero(const AmbientRing& ambient) { return make(ambient, {}); }
    static MonomialIdeal unit(const AmbientRing& ambient) { return make(ambient, {ambient.zero()}); }

    const AmbientRing& ambient() const noexcept { return ambient_; }
    const std::vector<ExpVector>& gens() const noexcept { return gens_; }
    bool is_zero() const noexcept { return gens_.empty(); }
    bool is_unit() const { return gens_.size() == 1 && gens_.front().is_zero(); }

    bool contains(const ExpVector& m) const {
        ambient_.check(m);
        return std::any_of(gens_.begin(), gens_.end(), [&](const ExpVector& g) { return dominates(m, g); });
    }

    friend bool operator==(const MonomialIdeal&, const MonomialIdeal&) = default;

private:
    AmbientRing ambient_;
    std::vector<ExpVector> gens_;
};

inline void check_same_ambient(const MonomialIdeal& I, const MonomialIdeal& J) {
    if (I.ambient() != J.ambient())
        throw DimensionError("ideals live in different ambient rings");
}

inline MonomialIdeal make_ideal(const AmbientRing& ambient, std::vector<ExpVector> raw) {
    return MonomialIdeal::make(ambient, std::move(raw));
}

inline bool contains_monomial(const MonomialIdeal& I, const ExpVector& m) { return I.contains(m); }

// I contains J.
inline bool ideal_contains(const MonomialIdeal& I, const MonomialIdeal& J) {
    check_same_ambient(I, J);
    return std::all_of(J.gens().begin(), J.gens().end(), [&](const ExpVector& g) { return I.contains(g); });
}

inline MonomialIdeal sum(const MonomialIdeal& I, const MonomialIdeal& J) {
    check_same_ambient(I, J);
    std::vector<ExpVector> gens = I.gens();
    gens.insert(gens.end(), J.gens().begin(), J.gens().end());
    return make_ideal(I.ambient(), std::move(gens));
}

inline MonomialIdeal intersect(const MonomialIdeal& I, const MonomialIdeal& J) {
    check_same_ambient(I, J);
    std::vector<ExpVector> gens;
    gens.reserve(I.gens().size() * J.gens().size());
    for (const auto& g : I.gens())
        for (const auto& h : J.gens()) gens.push_back(join(g, h));
    return make_ideal(I.ambient(), std::move(gens));
}

// The principal ideal <a>.
inline MonomialIdeal principal(const AmbientRing& ambient, const ExpVector& a) { return make_ideal(ambient, {a}); }

// a * I.
inline MonomialIdeal shift(const MonomialIdeal& I, const ExpVector& a) {
    I.ambient().check(a);
    std::vector<ExpVector> gens;
    for (const auto& g : I.gens()) gens.push_back(g + a);
    return make_ideal(I.ambient(), std::move(gens));
}

inline MonomialIdeal colon_monomial(const MonomialIdeal& I, const ExpVector& a) {
    I.ambient().check(a);
    std::vector<ExpVector> gens;
    for (const auto& g : I.gens()) gens.push_back(subtract_clamped(g, a));
    return make_ideal(I.ambient(), std::move(gens));
}

inline MonomialIdeal colon_ideal(const MonomialIdeal& I, const MonomialIdeal& J) {
    check_same_ambient(I, J);
    if (J.is_zero()) throw PreconditionError("colon by the zero ideal");
    MonomialIdeal acc = colon_monomial(I, J.gens().front());
    for (std::size_t i = 1; i < J.gens().size(); ++i) acc = intersect(acc, colon_monomial(I, J.gens()[i]));
    return acc;
}

// Multiplies every exponent by p^k.
inline MonomialIdeal scale(const MonomialIdeal& I, int k) {
    std::vector<ExpVector> gens;
    for (const auto& g : I.gens()) gens.push_back(g.scaled(k));
    return make_ideal(I.ambient(), std::move(gens));
}

// Least tower level over which the ideal is defined.
inline unsigned level(const MonomialIdeal& I) {
    unsigned l = 0;
    for (const auto& g : I.gens()) l = std::max(l, g.level());
    return l;
}

// Exponent of the pure power of coordinate i among the minimal generators, if any.
inline std::optional<PAdicRational> pure_power_exponent(const MonomialIdeal& I, std::size_t i) {
    for (const auto& g : I.gens()) {
        if (g.is_zero()) return g[i];
        if (g.support_size() == 1 && !g[i].is_zero()) return g[i];
    }
    return std::nullopt;
}

inline bool is_m_primary(const MonomialIdeal& I) {
    for (std::size_t i = 0; i < I.ambient().dim; ++i)
        if (!pure_power_exponent(I, i)) return false;
    return true;
}

// DSL rendering: `p^(1/2)*x2^3`, `1` for the unit monomial.
inline std::string monomial_string(const ExpVector& m) {
    std::string s;
    for (std::size_t i = 0; i < m.dim(); ++i) {
        const auto& e = m[i];
        if (e.is_zero()) continue;
        if (!s.empty()) s += "*";
        s += i == 0 ? std::string("p") : "x" + std::to_string(i + 1);
        if (e.level() > 0)
            s += "^(" + e.str() + ")";
        else if (e.num() != 1)
            s += "^" + e.str();
    }
    return s.empty() ? "1" : s;
}

inline std::string ideal_string(const MonomialIdeal& I) {
    if (I.is_zero()) return "<0>";
    std::string s = "<";
    for (std::size_t i = 0; i < I.gens().size(); ++i) {
        if (i) s += ", ";
        s += monomial_string(I.gens()[i]);
    }
    return s + ">";
}

} // namespace normlen
