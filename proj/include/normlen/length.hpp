#pragma once

// Normalized length: lattice counts of staircases at grid 1/p^n divided by
// p^{dn}, plus an inclusion-exclusion volume oracle that shares no membership
// code with the counter.

#include <compare>
#include <string>
#include <vector>

#include "normlen/torsion_modules.hpp"

namespace normlen {

// A nonnegative element of Z[1/p], or +infinity.
class LengthValue {
public:
    explicit LengthValue(PAdicRational v) : finite_(true), value_(std::move(v)) {}

    static LengthValue infinite(std::uint32_t prime) {
        LengthValue r{PAdicRational(prime)};
        r.finite_ = false;
        return r;
    }
    static LengthValue zero(std::uint32_t prime) { return LengthValue{PAdicRational(prime)}; }

    bool finite() const noexcept { return finite_; }
    bool is_zero() const { return finite_ && value_.is_zero(); }
    const PAdicRational& value() const {
        if (!finite_) throw std::domain_error("infinite length has no finite value");
        return value_;
    }
    Rational to_rational() const { return value().to_rational(); }

    // Multiply by p^k.
    LengthValue scaled(int k) const { return finite_ ? LengthValue(value_.scaled(k)) : *this; }

    friend LengthValue operator+(const LengthValue& a, const LengthValue& b) {
        if (!a.finite_ || !b.finite_) return infinite(a.value_.prime());
        return LengthValue(a.value_ + b.value_);
    }

    friend bool operator==(const LengthValue& a, const LengthValue& b) {
        if (a.finite_ != b.finite_) return false;
        return !a.finite_ || a.value_ == b.value_;
    }

    friend std::strong_ordering operator<=>(const LengthValue& a, const LengthValue& b) {
        if (a.finite_ && b.finite_) return a.value_ <=> b.value_;
        if (a.finite_ == b.finite_) return std::strong_ordering::equal;
        return a.finite_ ? std::strong_ordering::less : std::strong_ordering::greater;
    }

    std::string str() const { return finite_ ? value_.str() : "inf"; }

private:
    bool finite_;
    PAdicRational value_;
};

namespace detail {

using GridPoint = std::vector<BigInt>;

inline GridPoint to_grid(const ExpVector& v, unsigned n) {
    GridPoint g;
    g.reserve(v.dim());
    for (const auto& c : v.coords()) g.push_back(c.at_level(n));
    return g;
}

// Number of grid points m with 0 <= m < box (componentwise) that dominate no
// point of `active`. Sweeps axis by axis; between consecutive generator
// coordinates the slice ideal is constant, so each interval is counted once.
inline BigInt staircase_points(const std::vector<const GridPoint*>& active, const GridPoint& box, std::size_t axis) {
    for (const GridPoint* g : active) {
        bool covers_rest = true;
        for (std::size_t j = axis; j < box.size() && covers_rest; ++j) covers_rest = (*g)[j] == 0;
        if (covers_rest) return 0;
    }
    if (axis == box.size()) return 1;
    if (box[axis] == 0) return 0;

    std::vector<BigInt> breaks{0, box[axis]};
    for (const GridPoint* g : active)
        if ((*g)[axis] < box[axis]) breaks.push_back((*g)[axis]);
    std::sort(breaks.begin(), breaks.end());
    breaks.erase(std::unique(breaks.begin(), breaks.end()), breaks.end());

    BigInt total = 0;
    std::vector<const GridPoint*> slice;
    for (std::size_t k = 0; k + 1 < breaks.size(); ++k) {
        slice.clear();
        for (const GridPoint* g : active)
            if ((*g)[axis] <= breaks[k]) slice.push_back(g);
        total += (breaks[k + 1] - breaks[k]) * staircase_points(slice, box, axis + 1);
    }
    return total;
}

inline BigInt points_outside(const MonomialIdeal& I, const GridPoint& box, unsigned n) {
    std::vector<GridPoint> grid;
    for (const auto& g : I.gens()) grid.push_back(to_grid(g, n));
    std::vector<const GridPoint*> active;
    for (const auto& g : grid) active.push_back(&g);
    return staircase_points(active, box, 0);
}

// Level-n length of top/bottom. Every point of top \ bottom lies below
// g + (pure powers of (bottom : g)) for some generator g of top.
inline BigInt summand_count(const Subquotient& s, unsigned n) {
    const AmbientRing& amb = s.top.ambient();
    std::vector<PAdicRational> bound(amb.dim, PAdicRational(amb.prime));
    bool any = false;
    for (const auto& g : s.top.gens()) {
        const MonomialIdeal colon = colon_monomial(s.bottom, g);
        if (colon.is_unit()) continue;
        any = true;
        for (std::size_t i = 0; i < amb.dim; ++i) {
            const auto e = pure_power_exponent(colon, i);
            if (!e) throw PreconditionError("summand has infinite length");
            const PAdicRational reach = g[i] + *e;
            if (reach > bound[i]) bound[i] = reach;
        }
    }
    if (!any) return 0;
    GridPoint box;
    for (const auto& b : bound) box.push_back(b.at_level(n));
    return points_outside(s.bottom, box, n) - points_outside(s.top, box, n);
}

} // namespace detail

// Length over R_n of the level-n model of M.
inline BigInt length_at_level(const TorsionModule& M, unsigned n) {
    if (!has_finite_length(M)) throw PreconditionError("module has infinite length");
    if (n < level(M))
        throw PreconditionError("level " + std::to_string(n) + " is below the module's level " +
                                std::to_string(level(M)));
    BigInt total = 0;
    for (const auto& s : M.summands()) total += detail::summand_count(s, n);
    return total;
}

struct LengthReport {
    LengthValue lambda;
    unsigned level_used = 0;
    std::vector<BigInt> counts; // per summand, at level_used
};

inline LengthReport length_report(const TorsionModule& M) {
    const std::uint32_t p = M.ambient().prime;
    if (!has_finite_length(M)) return {LengthValue::infinite(p), level(M), {}};
    const unsigned n = level(M);
    LengthReport r{LengthValue::zero(p), n, {}};
    BigInt total = 0;
    for (const auto& s : M.summands()) {
        r.counts.push_back(detail::summand_count(s, n));
        total += r.counts.back();
    }
    r.lambda = LengthValue(PAdicRational::normalize(p, total, M.ambient().dim * n));
    return r;
}

inline LengthValue normalized_length(const TorsionModule& M) { return length_report(M).lambda; }

// Euclidean volume of [0,B]^d minus the union of the orthants g + R_{>=0}^d,
// by inclusion-exclusion over generator subsets. B is the componentwise max
// of the generators. Cost is 2^(#generators).
inline Rational volume_oracle(const MonomialIdeal& I) {
    if (!is_m_primary(I)) throw PreconditionError("volume oracle needs an m-primary ideal");
    const std::size_t d = I.ambient().dim;
    std::vector<std::vector<Rational>> gens;
    for (const auto& g : I.gens()) {
        std::vector<Rational> r;
        for (const auto& c : g.coords()) r.push_back(c.to_rational());
        gens.push_back(std::move(r));
    }
    std::vector<Rational> box(d, Rational(0));
    for (const auto& g : gens)
        for (std::size_t i = 0; i < d; ++i)
            if (g[i] > box[i]) box[i] = g[i];

    Rational covered = 0;
    // Depth-first over subsets, carrying the running lcm corner.
    auto visit = [&](auto&& self, std::size_t next, const std::vector<Rational>& corner, int size) -> void {
        for (std::size_t k = next; k < gens.size(); ++k) {
            std::vector<Rational> c = corner;
            for (std::size_t i = 0; i < d; ++i)
                if (gens[k][i] > c[i]) c[i] = gens[k][i];
            Rational vol = 1;
            for (std::size_t i = 0; i < d; ++i) vol *= box[i] - c[i];
            if (size % 2 == 0)
                covered += vol;
            else
                covered -= vol;
            // A zero-volume corner stays zero for every superset.
            if (vol != 0) self(self, k + 1, c, size + 1);
        }
    };
    visit(visit, 0, std::vector<Rational>(d, Rational(0)), 0);

    Rational total = 1;
    for (const auto& b : box) total *= b;
    return total - covered;
}

struct AdditivityReport {
    LengthValue whole;    // K/I
    LengthValue sub;      // J/I
    LengthValue quotient; // K/J
    bool pass = false;
};

// 0 -> J/I -> K/I -> K/J -> 0 for I ⊆ J ⊆ K.
inline AdditivityReport check_additivity(const MonomialIdeal& I, const MonomialIdeal& J, const MonomialIdeal& K) {
    const auto whole = subquotient(K, I);
    const auto sub = subquotient(J, I);
    const auto quo = subquotient(K, J);
    if (!has_finite_length(whole)) throw PreconditionError("K/I has infinite length");
    AdditivityReport r{normalized_length(whole), normalized_length(sub), normalized_length(quo)};
    r.pass = r.whole == r.sub + r.quotient;
    return r;
}

inline AdditivityReport check_additivity(const MonomialIdeal& I, const MonomialIdeal& J) {
    return check_additivity(I, J, MonomialIdeal::unit(I.ambient()));
}

} // namespace normlen
