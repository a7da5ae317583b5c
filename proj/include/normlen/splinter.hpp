#pragma once

// Singh's normal non-splinter S = Z_2[[x,y]]/(x^k - y^l - 2^m) with the
// module-finite extension T = S[u, v], u^2 = x^{k-2} y^{l-2},
// 2v = x^{k-1} - u y. Everything is checked in Z[u, x, y] modulo the rewrite
// rules u^2 -> x^{k-2} y^{l-2} and x^k -> y^l + 2^m; v never appears as a
// variable, only as 2v.

#include <array>
#include <map>
#include <string>

#include "normlen/lattice.hpp"

namespace normlen::splinter {

struct WitnessParams {
    unsigned k = 3, l = 3, m = 3;

    WitnessParams() = default;
    WitnessParams(unsigned k_, unsigned l_, unsigned m_) : k(k_), l(l_), m(m_) {
        if (k <= 2 || l <= 2 || m <= 2)
            throw std::invalid_argument("witness parameters need k, l, m > 2, got (" + std::to_string(k) + "," +
                                        std::to_string(l) + "," + std::to_string(m) + ")");
    }
};

// Exponents of u, x, y.
using Term = std::array<unsigned, 3>;

class IntPoly {
public:
    IntPoly() = default;
    IntPoly(const BigInt& c) { add_term({0, 0, 0}, c); } // NOLINT(google-explicit-constructor)

    static IntPoly monomial(unsigned u, unsigned x, unsigned y, const BigInt& c = 1) {
        IntPoly f;
        f.add_term({u, x, y}, c);
        return f;
    }
    static IntPoly u() { return monomial(1, 0, 0); }
    static IntPoly x(unsigned e = 1) { return monomial(0, e, 0); }
    static IntPoly y(unsigned e = 1) { return monomial(0, 0, e); }

    const std::map<Term, BigInt>& terms() const noexcept { return terms_; }
    bool is_zero() const noexcept { return terms_.empty(); }

    void add_term(const Term& t, const BigInt& c) {
        if (c == 0) return;
        auto [it, inserted] = terms_.try_emplace(t, c);
        if (!inserted) {
            it->second += c;
            if (it->second == 0) terms_.erase(it);
        }
    }

    unsigned degree(std::size_t var) const {
        unsigned d = 0;
        for (const auto& [t, c] : terms_) d = std::max(d, t[var]);
        return d;
    }

    friend IntPoly operator+(IntPoly a, const IntPoly& b) {
        for (const auto& [t, c] : b.terms_) a.add_term(t, c);
        return a;
    }
    friend IntPoly operator-(IntPoly a, const IntPoly& b) {
        for (const auto& [t, c] : b.terms_) a.add_term(t, -c);
        return a;
    }
    friend IntPoly operator*(const IntPoly& a, const IntPoly& b) {
        IntPoly r;
        for (const auto& [s, c] : a.terms_)
            for (const auto& [t, d] : b.terms_) r.add_term({s[0] + t[0], s[1] + t[1], s[2] + t[2]}, c * d);
        return r;
    }
    friend bool operator==(const IntPoly&, const IntPoly&) = default;

    std::string str() const {
        if (terms_.empty()) return "0";
        static constexpr const char* names[] = {"u", "x", "y"};
        std::string s;
        for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
            const auto& [t, c] = *it;
            BigInt mag = c < 0 ? BigInt(-c) : c;
            s += s.empty() ? (c < 0 ? "-" : "") : (c < 0 ? " - " : " + ");
            std::string mono;
            for (std::size_t v = 0; v < 3; ++v) {
                if (t[v] == 0) continue;
                if (!mono.empty()) mono += "*";
                mono += names[v];
                if (t[v] > 1) mono += "^" + std::to_string(t[v]);
            }
            if (mono.empty())
                s += mag.str();
            else
                s += (mag == 1 ? "" : mag.str() + "*") + mono;
        }
        return s;
    }

private:
    std::map<Term, BigInt> terms_;
};

inline IntPoly pow(const IntPoly& f, unsigned e) {
    IntPoly r(1);
    for (unsigned i = 0; i < e; ++i) r = r * f;
    return r;
}

// One rewrite of a single term, if a rule applies. The u-rule takes priority.
inline bool rewrite_term(const Term& t, const BigInt& c, const WitnessParams& w, IntPoly& out) {
    if (t[0] >= 2) {
        out.add_term({t[0] - 2, t[1] + w.k - 2, t[2] + w.l - 2}, c);
        return true;
    }
    if (t[1] >= w.k) {
        out.add_term({t[0], t[1] - w.k, t[2] + w.l}, c);
        out.add_term({t[0], t[1] - w.k, t[2]}, c * prime_power(2, w.m));
        return true;
    }
    return false;
}

// Normal form: u-degree <= 1 and x-degree < k. Each rewrite lowers the
// (u-degree, x-degree) of a term lexicographically, so this terminates.
inline IntPoly reduce(const IntPoly& f, const WitnessParams& w) {
    IntPoly cur = f;
    for (;;) {
        IntPoly next;
        bool changed = false;
        for (const auto& [t, c] : cur.terms()) {
            if (rewrite_term(t, c, w, next))
                changed = true;
            else
                next.add_term(t, c);
        }
        if (!changed) return next;
        cur = std::move(next);
    }
}

// 2v as an element of Z[u, x, y].
inline IntPoly two_v(const WitnessParams& w) { return IntPoly::x(w.k - 1) - IntPoly::u() * IntPoly::y(); }

// v^2 + u y v - x^{k-2} 2^{m-2} = 0, multiplied through by 4.
inline bool verify_integral_equation(const WitnessParams& w) {
    const IntPoly a = two_v(w);
    const IntPoly uy = IntPoly::u() * IntPoly::y();
    const IntPoly rel = a * a + IntPoly(2) * uy * a - IntPoly::monomial(0, w.k - 2, 0, prime_power(2, w.m));
    return reduce(rel, w).is_zero();
}

// Image of a u-free element of S in S/(y, 2)S = F_2[x]/(x^k): the set of
// x-degrees carrying an odd coefficient.
inline std::vector<unsigned> image_mod_y_two(const IntPoly& f, const WitnessParams& w) {
    const IntPoly nf = reduce(f, w);
    std::vector<unsigned> degrees;
    for (const auto& [t, c] : nf.terms()) {
        if (t[0] != 0) throw std::invalid_argument("element involves u and is not in S");
        if (t[2] == 0 && t[1] < w.k && boost::multiprecision::abs(c) % 2 == 1) degrees.push_back(t[1]);
    }
    return degrees;
}

struct SplinterReport {
    bool integral_equation = false;
    bool member_in_T = false;    // x^{k-1} = u*y + 2*v
    bool nonmember_in_S = false; // x^{k-1} not in (y, 2)S
    std::vector<unsigned> image; // x-degrees of the image in F_2[x]/(x^k)

    bool pass() const { return integral_equation && member_in_T && nonmember_in_S; }
};

inline SplinterReport verify_non_splinter(const WitnessParams& w) {
    SplinterReport r;
    r.integral_equation = verify_integral_equation(w);
    const IntPoly target = IntPoly::x(w.k - 1);
    const IntPoly combo = IntPoly::u() * IntPoly::y() + two_v(w);
    r.member_in_T = r.integral_equation && reduce(target - combo, w).is_zero();
    r.image = image_mod_y_two(target, w);
    r.nonmember_in_S = !r.image.empty();
    return r;
}

} // namespace normlen::splinter
