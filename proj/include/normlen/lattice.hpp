#pragma once

// Exact exponents in Z[1/p]_{>=0} and componentwise order on exponent vectors.

#include <algorithm>
#include <compare>
#include <cstdint>
#include <initializer_list>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace normlen {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

struct DimensionError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

struct PreconditionError : std::domain_error {
    using std::domain_error::domain_error;
};

inline bool is_prime(std::uint32_t n) {
    if (n < 2) return false;
    for (std::uint64_t f = 2; f * f <= n; ++f)
        if (n % f == 0) return false;
    return true;
}

inline BigInt prime_power(std::uint32_t p, unsigned k) {
    return boost::multiprecision::pow(BigInt(p), k);
}

// Value num / p^level, held in canonical form: p does not divide num when
// level > 0, and zero is always (0, 0).
class PAdicRational {
public:
    explicit PAdicRational(std::uint32_t prime = 2) : prime_(prime) {}

    static PAdicRational normalize(std::uint32_t prime, BigInt num, unsigned level) {
        if (num < 0) throw std::domain_error("negative exponents are not representable");
        PAdicRational r(prime);
        if (num == 0) return r;
        const BigInt p = prime;
        while (level > 0 && num % p == 0) {
            num /= p;
            --level;
        }
        r.num_ = std::move(num);
        r.level_ = level;
        return r;
    }

    static PAdicRational integer(std::uint32_t prime, BigInt n) { return normalize(prime, std::move(n), 0); }

    std::uint32_t prime() const noexcept { return prime_; }
    const BigInt& num() const noexcept { return num_; }
    unsigned level() const noexcept { return level_; }
    bool is_zero() const noexcept { return num_ == 0; }

    BigInt denominator() const { return prime_power(prime_, level_); }
    Rational to_rational() const { return Rational(num_, denominator()); }

    // Numerator at a finer grid: the value times p^n, which must be integral.
    BigInt at_level(unsigned n) const {
        if (n < level_) throw std::domain_error("value is not on the level-" + std::to_string(n) + " grid");
        return num_ * prime_power(prime_, n - level_);
    }

    // Multiply by p^k; negative k raises the level.
    PAdicRational scaled(int k) const {
        if (is_zero()) return *this;
        if (k >= 0) {
            const auto uk = static_cast<unsigned>(k);
            if (level_ >= uk) return normalize(prime_, num_, level_ - uk);
            return normalize(prime_, num_ * prime_power(prime_, uk - level_), 0);
        }
        return normalize(prime_, num_, level_ + static_cast<unsigned>(-k));
    }

    PAdicRational times(const BigInt& n) const { return normalize(prime_, num_ * n, level_); }

    friend PAdicRational operator+(const PAdicRational& a, const PAdicRational& b) {
        check_prime(a, b);
        const unsigned top = std::max(a.level_, b.level_);
        return normalize(a.prime_, a.at_level(top) + b.at_level(top), top);
    }

    friend PAdicRational subtract_clamped(const PAdicRational& a, const PAdicRational& b) {
        check_prime(a, b);
        const unsigned top = std::max(a.level_, b.level_);
        BigInt diff = a.at_level(top) - b.at_level(top);
        if (diff <= 0) return PAdicRational(a.prime_);
        return normalize(a.prime_, std::move(diff), top);
    }

    friend bool operator==(const PAdicRational& a, const PAdicRational& b) {
        return a.prime_ == b.prime_ && a.level_ == b.level_ && a.num_ == b.num_;
    }

    friend std::strong_ordering operator<=>(const PAdicRational& a, const PAdicRational& b) {
        check_prime(a, b);
        const unsigned top = std::max(a.level_, b.level_);
        const BigInt lhs = a.at_level(top);
        const BigInt rhs = b.at_level(top);
        if (lhs < rhs) return std::strong_ordering::less;
        if (lhs > rhs) return std::strong_ordering::greater;
        return std::strong_ordering::equal;
    }

    // `a/b` with b = p^level, or a bare integer when level is 0.
    std::string str() const {
        if (level_ == 0) return num_.str();
        return num_.str() + "/" + denominator().str();
    }

private:
    static void check_prime(const PAdicRational& a, const PAdicRational& b) {
        if (a.prime_ != b.prime_) throw std::invalid_argument("exponents over different primes");
    }

    std::uint32_t prime_;
    BigInt num_ = 0;
    unsigned level_ = 0;
};

// Exponent vector of a monomial p^{e1} x2^{e2} ... xd^{ed}; coordinate 0 is
// the p-direction.
class ExpVector {
public:
    ExpVector() = default;
    ExpVector(std::uint32_t prime, std::size_t dim) : prime_(prime), coords_(dim, PAdicRational(prime)) {}
    ExpVector(std::uint32_t prime, std::vector<PAdicRational> coords) : prime_(prime), coords_(std::move(coords)) {
        for (const auto& c : coords_)
            if (c.prime() != prime_) throw std::invalid_argument("coordinate over a different prime");
    }

    // Integer-exponent convenience constructor.
    static ExpVector integral(std::uint32_t prime, std::initializer_list<long> exps) {
        std::vector<PAdicRational> cs;
        for (long e : exps) cs.push_back(PAdicRational::integer(prime, e));
        return ExpVector(prime, std::move(cs));
    }

    std::uint32_t prime() const noexcept { return prime_; }
    std::size_t dim() const noexcept { return coords_.size(); }
    const PAdicRational& operator[](std::size_t i) const { return coords_.at(i); }
    const std::vector<PAdicRational>& coords() const noexcept { return coords_; }

    void set(std::size_t i, PAdicRational v) {
        if (v.prime() != prime_) throw std::invalid_argument("coordinate over a different prime");
        coords_.at(i) = std::move(v);
    }

    bool is_zero() const {
        return std::all_of(coords_.begin(), coords_.end(), [](const auto& c) { return c.is_zero(); });
    }

    unsigned level() const {
        unsigned l = 0;
        for (const auto& c : coords_) l = std::max(l, c.level());
        return l;
    }

    // Number of nonzero coordinates.
    std::size_t support_size() const {
        return static_cast<std::size_t>(
            std::count_if(coords_.begin(), coords_.end(), [](const auto& c) { return !c.is_zero(); }));
    }

    ExpVector scaled(int k) const {
        ExpVector r = *this;
        for (auto& c : r.coords_) c = c.scaled(k);
        return r;
    }

    // Exponents of the monomial raised to the n-th power.
    ExpVector times(const BigInt& n) const {
        ExpVector r = *this;
        for (auto& c : r.coords_) c = c.times(n);
        return r;
    }

    // Monomial product.
    friend ExpVector operator+(const ExpVector& a, const ExpVector& b) {
        check_compatible(a, b);
        ExpVector r = a;
        for (std::size_t i = 0; i < r.dim(); ++i) r.coords_[i] = a.coords_[i] + b.coords_[i];
        return r;
    }

    friend bool operator==(const ExpVector& a, const ExpVector& b) = default;

    std::string str() const {
        std::string s = "(";
        for (std::size_t i = 0; i < coords_.size(); ++i) {
            if (i) s += ", ";
            s += coords_[i].str();
        }
        return s + ")";
    }

    static void check_compatible(const ExpVector& a, const ExpVector& b) {
        if (a.dim() != b.dim())
            throw DimensionError("exponent vectors of dimension " + std::to_string(a.dim()) + " and " +
                                 std::to_string(b.dim()));
        if (a.prime() != b.prime()) throw std::invalid_argument("exponent vectors over different primes");
    }

private:
    std::uint32_t prime_ = 2;
    std::vector<PAdicRational> coords_;
};

inline PAdicRational normalize(std::uint32_t prime, const BigInt& num, unsigned level) {
    return PAdicRational::normalize(prime, num, level);
}

// u >= v componentwise, i.e. the monomial v divides u.
inline bool dominates(const ExpVector& u, const ExpVector& v) {
    ExpVector::check_compatible(u, v);
    for (std::size_t i = 0; i < u.dim(); ++i)
        if (u[i] < v[i]) return false;
    return true;
}

// Componentwise maximum (lcm of monomials).
inline ExpVector join(const ExpVector& u, const ExpVector& v) {
    ExpVector::check_compatible(u, v);
    ExpVector r = u;
    for (std::size_t i = 0; i < u.dim(); ++i)
        if (v[i] > u[i]) r.set(i, v[i]);
    return r;
}

// Componentwise clamped difference: exponents of the monomial colon (u : v).
inline ExpVector subtract_clamped(const ExpVector& u, const ExpVector& v) {
    ExpVector::check_compatible(u, v);
    ExpVector r = u;
    for (std::size_t i = 0; i < u.dim(); ++i) r.set(i, subtract_clamped(u[i], v[i]));
    return r;
}

// Total order used only to keep generator lists canonical: larger powers of p
// first, then of x2, and so on, so <p^2, p*x2, x2^2> reads in that order.
inline bool lex_less(const ExpVector& u, const ExpVector& v) {
    ExpVector::check_compatible(u, v);
    for (std::size_t i = 0; i < u.dim(); ++i) {
        const auto c = u[i] <=> v[i];
        if (c != 0) return c > 0;
    }
    return false;
}

} // namespace normlen
