#pragma once

// Text syntax for monomials, ideals and modules:
//
//   module  := term ('(+)' term)*
//   term    := 'R/' ideal | ideal '/' ideal | mon '*' term | 'ann(' mon ',' module ')'
//   ideal   := '<' mon (',' mon)* '>' | '<0>'
//   mon     := factor ('*' factor)* | '1'
//   factor  := var ('^' rat)?
//   var     := 'p' | 'x' INT          (INT in 2..d)
//   rat     := INT | '(' INT '/' INT ')'   (denominator a power of p)
//
// `mon * term` binds tighter than `(+)`. Whitespace is ignored between tokens.

#include <cctype>
#include <string>
#include <string_view>
#include <vector>

#include "normlen/torsion_modules.hpp"

namespace normlen {

struct ParseError : std::invalid_argument {
    ParseError(const std::string& what, std::size_t pos)
        : std::invalid_argument(what + " at position " + std::to_string(pos)), position(pos) {}
    std::size_t position;
};

namespace detail {

class Parser {
public:
    Parser(std::string_view text, const AmbientRing& ambient) : text_(text), amb_(ambient) {}

    TorsionModule module() {
        std::vector<TorsionModule> parts{term()};
        while (accept("(+)")) parts.push_back(term());
        return parts.size() == 1 ? parts.front() : direct_sum(parts);
    }

    MonomialIdeal ideal() {
        expect("<");
        if (accept("0")) {
            expect(">");
            return MonomialIdeal::zero(amb_);
        }
        std::vector<ExpVector> gens{monomial()};
        while (accept(",")) gens.push_back(monomial());
        expect(">");
        return make_ideal(amb_, std::move(gens));
    }

    ExpVector monomial() {
        skip_ws();
        ExpVector m = amb_.zero();
        if (peek() == '1') {
            ++pos_;
            return m;
        }
        factor_into(m);
        // A '*' continues the monomial only when another factor follows.
        while (true) {
            const std::size_t save = pos_;
            if (!accept("*")) break;
            skip_ws();
            if (!starts_factor()) {
                pos_ = save;
                break;
            }
            factor_into(m);
        }
        return m;
    }

    void finish() {
        skip_ws();
        if (pos_ != text_.size()) fail("unexpected trailing input");
    }

    bool at_end() {
        skip_ws();
        return pos_ == text_.size();
    }

    bool accept(std::string_view tok) {
        skip_ws();
        if (text_.substr(pos_, tok.size()) == tok) {
            pos_ += tok.size();
            return true;
        }
        return false;
    }

private:
    TorsionModule term() {
        skip_ws();
        if (accept("ann(")) {
            const ExpVector a = monomial();
            expect(",");
            const TorsionModule inner = module();
            expect(")");
            return ann_submodule(a, inner);
        }
        if (peek() == 'R') {
            ++pos_;
            expect("/");
            return cyclic(ideal());
        }
        if (peek() == '<') {
            const std::size_t at = pos_;
            const MonomialIdeal top = ideal();
            expect("/");
            const MonomialIdeal bottom = ideal();
            if (!ideal_contains(top, bottom))
                throw ParseError(ideal_string(bottom) + " is not contained in " + ideal_string(top), at);
            return subquotient(top, bottom);
        }
        if (peek() == '1' || starts_factor()) {
            const ExpVector a = monomial();
            expect("*");
            return scalar_multiple(a, term());
        }
        fail("expected a module");
    }

    bool starts_factor() const { return peek() == 'p' || (peek() == 'x' && std::isdigit(peek(1))); }

    void factor_into(ExpVector& m) {
        skip_ws();
        const std::size_t at = pos_;
        std::size_t coord = 0;
        if (peek() == 'p') {
            ++pos_;
        } else if (peek() == 'x') {
            ++pos_;
            const BigInt idx = integer();
            if (idx < 2 || idx > amb_.dim)
                throw ParseError("variable x" + idx.str() + " is outside x2..x" + std::to_string(amb_.dim), at);
            coord = static_cast<std::size_t>(idx) - 1;
        } else {
            fail("expected 'p' or 'x<i>'");
        }
        PAdicRational e = PAdicRational::integer(amb_.prime, 1);
        if (accept("^")) e = rational();
        m.set(coord, m[coord] + e);
    }

    PAdicRational rational() {
        skip_ws();
        if (!accept("(")) return PAdicRational::integer(amb_.prime, integer());
        const BigInt num = integer();
        expect("/");
        const std::size_t at = pos_;
        BigInt den = integer();
        expect(")");
        if (den == 0) throw ParseError("zero denominator", at);
        unsigned level = 0;
        const BigInt p = amb_.prime;
        while (den % p == 0) {
            den /= p;
            ++level;
        }
        if (den != 1) throw ParseError("denominator is not a power of " + std::to_string(amb_.prime), at);
        return PAdicRational::normalize(amb_.prime, num, level);
    }

    BigInt integer() {
        skip_ws();
        const std::size_t start = pos_;
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
        if (start == pos_) fail("expected an integer");
        return BigInt(std::string(text_.substr(start, pos_ - start)));
    }

    void expect(std::string_view tok) {
        if (!accept(tok)) fail("expected '" + std::string(tok) + "'");
    }

    [[noreturn]] void fail(const std::string& what) const { throw ParseError(what, pos_); }

    char peek(std::size_t ahead = 0) const {
        return pos_ + ahead < text_.size() ? text_[pos_ + ahead] : '\0';
    }

    void skip_ws() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    }

    std::string_view text_;
    AmbientRing amb_;
    std::size_t pos_ = 0;
};

} // namespace detail

inline TorsionModule parse_module(std::string_view text, const AmbientRing& ambient) {
    detail::Parser p(text, ambient);
    auto m = p.module();
    p.finish();
    return m;
}

inline MonomialIdeal parse_ideal(std::string_view text, const AmbientRing& ambient) {
    detail::Parser p(text, ambient);
    auto I = p.ideal();
    p.finish();
    return I;
}

inline ExpVector parse_monomial(std::string_view text, const AmbientRing& ambient) {
    detail::Parser p(text, ambient);
    auto m = p.monomial();
    p.finish();
    return m;
}

// Comma-separated monomials, optionally wrapped in '<...>' or '{...}'; empty
// input (or an empty wrapper) gives an empty list.
inline std::vector<ExpVector> parse_monomial_list(std::string_view text, const AmbientRing& ambient) {
    detail::Parser p(text, ambient);
    std::vector<ExpVector> out;
    if (p.at_end()) return out;
    const bool angle = p.accept("<");
    const bool brace = !angle && p.accept("{");
    const char* close = angle ? ">" : "}";
    if ((angle || brace) && p.accept(close)) {
        p.finish();
        return out;
    }
    out.push_back(p.monomial());
    while (p.accept(",")) out.push_back(p.monomial());
    if ((angle || brace) && !p.accept(close)) throw ParseError(std::string("expected '") + close + "'", text.size());
    p.finish();
    return out;
}

inline std::string render_module(const TorsionModule& M) {
    std::string s;
    for (const auto& part : M.summands()) {
        if (!s.empty()) s += " (+) ";
        if (part.top.is_unit())
            s += "R/" + ideal_string(part.bottom);
        else
            s += ideal_string(part.top) + "/" + ideal_string(part.bottom);
    }
    return s;
}

} // namespace normlen
