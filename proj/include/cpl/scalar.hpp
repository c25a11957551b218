// Exact scalar layer: arbitrary-precision integers and reduced rationals.
//
// Integers and rationals are GMP-backed. A Rational is always canonical:
// reduced, denominator > 0. Everything downstream (polynomials, matrices,
// q-scalars) builds on these two types.
#pragma once

#include <gmpxx.h>

#include <optional>
#include <stdexcept>
#include <string>

namespace cpl {

using Integer = mpz_class;
using Rational = mpq_class;

inline Rational rat(long num, long den = 1) {
    if (den == 0) throw std::domain_error("rational with zero denominator");
    Rational r(num, den);
    r.canonicalize();
    return r;
}

inline Rational rat(const Integer& num, const Integer& den) {
    if (den == 0) throw std::domain_error("rational with zero denominator");
    Rational r(num, den);
    r.canonicalize();
    return r;
}

inline bool is_integer(const Rational& r) { return r.get_den() == 1; }

inline Integer rat_num(const Rational& r) { return r.get_num(); }
inline Integer rat_den(const Rational& r) { return r.get_den(); }

/// "p/q" for non-integers, "p" otherwise.
inline std::string rat_str(const Rational& r) {
    if (is_integer(r)) return r.get_num().get_str();
    return r.get_num().get_str() + "/" + r.get_den().get_str();
}

inline std::string int_str(const Integer& z) { return z.get_str(); }

/// Parses "p", "p/q", or "-p/q"; returns nullopt on malformed input.
inline std::optional<Rational> rat_parse(const std::string& s) {
    if (s.empty()) return std::nullopt;
    auto valid_int = [](const std::string& t) {
        if (t.empty()) return false;
        std::size_t i = (t[0] == '-' || t[0] == '+') ? 1 : 0;
        if (i == t.size()) return false;
        for (; i < t.size(); ++i)
            if (t[i] < '0' || t[i] > '9') return false;
        return true;
    };
    auto slash = s.find('/');
    std::string num = s.substr(0, slash);
    std::string den = slash == std::string::npos ? "1" : s.substr(slash + 1);
    if (!valid_int(num) || !valid_int(den)) return std::nullopt;
    Integer d(den);
    if (d == 0) return std::nullopt;
    Rational r{Integer(num), d};
    r.canonicalize();
    return r;
}

inline std::optional<Integer> int_parse(const std::string& s) {
    auto r = rat_parse(s);
    if (!r || !is_integer(*r)) return std::nullopt;
    return r->get_num();
}

inline Integer gcd(const Integer& a, const Integer& b) {
    Integer g;
    mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return g;
}

inline Integer lcm(const Integer& a, const Integer& b) {
    Integer l;
    mpz_lcm(l.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return l;
}

inline Rational rat_pow(const Rational& base, long e) {
    if (e == 0) return Rational(1);
    if (base == 0) {
        if (e < 0) throw std::domain_error("0 to a negative power");
        return Rational(0);
    }
    Rational b = e < 0 ? Rational(base.get_den(), base.get_num()) : base;
    if (e < 0) b.canonicalize();
    unsigned long n = static_cast<unsigned long>(e < 0 ? -e : e);
    Rational acc(1);
    while (n) {
        if (n & 1) acc *= b;
        b *= b;
        n >>= 1;
    }
    return acc;
}

inline int sgn(const Rational& r) { return mpq_sgn(r.get_mpq_t()); }
inline int sgn(const Integer& z) { return mpz_sgn(z.get_mpz_t()); }

}  // namespace cpl
