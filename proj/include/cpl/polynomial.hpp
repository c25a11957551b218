// Sparse multivariate polynomials over the rationals.
//
// Monomials are exponent maps keyed by variable label; terms are ordered by
// lex on labels (earlier label dominates, higher exponent wins), which is a
// proper monomial order, so leading-term division is well defined. The gcd
// is computed by content / primitive-part recursion with a primitive
// pseudo-remainder sequence, main variable = lex-smallest label.
#pragma once

#include <algorithm>
#include <map>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "cpl/scalar.hpp"

namespace cpl {

/// Exponent map; only nonzero exponents are stored.
using Monomial = std::map<std::string, long>;

/// Lex order: first differing variable (in label order) decides, larger
/// exponent means larger monomial. Total degree is not consulted.
struct MonomialLexLess {
    bool operator()(const Monomial& a, const Monomial& b) const {
        auto ia = a.begin(), ib = b.begin();
        while (ia != a.end() || ib != b.end()) {
            if (ia == a.end()) {
                // a has exponent 0 where b has a nonzero one
                return ib->second > 0;
            }
            if (ib == b.end()) return ia->second < 0;
            if (ia->first != ib->first) {
                // the lex-smaller label is present in exactly one of them
                if (ia->first < ib->first) return ia->second < 0;
                return ib->second > 0;
            }
            if (ia->second != ib->second) return ia->second < ib->second;
            ++ia, ++ib;
        }
        return false;
    }
};

inline Monomial mono_mul(const Monomial& a, const Monomial& b) {
    Monomial r = a;
    for (const auto& [v, e] : b) {
        long ne = (r.count(v) ? r[v] : 0) + e;
        if (ne == 0)
            r.erase(v);
        else
            r[v] = ne;
    }
    return r;
}

/// a / b when b divides a (all exponents of the quotient nonnegative).
inline std::optional<Monomial> mono_div(const Monomial& a, const Monomial& b) {
    Monomial r = a;
    for (const auto& [v, e] : b) {
        long ne = (r.count(v) ? r[v] : 0) - e;
        if (ne < 0) return std::nullopt;
        if (ne == 0)
            r.erase(v);
        else
            r[v] = ne;
    }
    return r;
}

class Poly {
  public:
    using TermMap = std::map<Monomial, Rational, MonomialLexLess>;

    Poly() = default;
    explicit Poly(const Rational& c) {
        if (c != 0) terms_[Monomial{}] = c;
    }
    explicit Poly(long c) : Poly(Rational(c)) {}

    static Poly variable(const std::string& name, long exp = 1) {
        if (exp < 0) throw std::domain_error("Poly::variable: negative exponent");
        Poly p;
        if (exp == 0) return Poly(1);
        p.terms_[Monomial{{name, exp}}] = 1;
        return p;
    }

    static Poly term(const Monomial& m, const Rational& c) {
        Poly p;
        if (c != 0) p.terms_[m] = c;
        return p;
    }

    const TermMap& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const {
        return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.empty());
    }
    bool is_one() const {
        return terms_.size() == 1 && terms_.begin()->first.empty() && terms_.begin()->second == 1;
    }
    bool is_monomial() const { return terms_.size() == 1; }

    Rational constant_value() const {
        if (is_zero()) return Rational(0);
        if (!is_constant()) throw std::domain_error("Poly: not a constant");
        return terms_.begin()->second;
    }

    std::set<std::string> symbols() const {
        std::set<std::string> s;
        for (const auto& [m, c] : terms_)
            for (const auto& [v, e] : m) s.insert(v);
        return s;
    }

    long degree(const std::string& v) const {
        long d = 0;
        for (const auto& [m, c] : terms_) {
            auto it = m.find(v);
            if (it != m.end()) d = std::max(d, it->second);
        }
        return d;
    }

    long total_degree() const {
        long d = 0;
        for (const auto& [m, c] : terms_) {
            long t = 0;
            for (const auto& [v, e] : m) t += e;
            d = std::max(d, t);
        }
        return d;
    }

    const Monomial& leading_monomial() const {
        if (is_zero()) throw std::domain_error("Poly: leading term of zero");
        return terms_.rbegin()->first;
    }
    const Rational& leading_coeff() const {
        if (is_zero()) throw std::domain_error("Poly: leading term of zero");
        return terms_.rbegin()->second;
    }

    Poly& operator+=(const Poly& o) {
        for (const auto& [m, c] : o.terms_) add_term(m, c);
        return *this;
    }
    Poly& operator-=(const Poly& o) {
        for (const auto& [m, c] : o.terms_) add_term(m, -c);
        return *this;
    }
    friend Poly operator+(Poly a, const Poly& b) { return a += b; }
    friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
    friend Poly operator-(const Poly& a) {
        Poly r;
        for (const auto& [m, c] : a.terms_) r.terms_[m] = -c;
        return r;
    }

    friend Poly operator*(const Poly& a, const Poly& b) {
        Poly r;
        for (const auto& [ma, ca] : a.terms_)
            for (const auto& [mb, cb] : b.terms_) r.add_term(mono_mul(ma, mb), ca * cb);
        return r;
    }
    Poly& operator*=(const Poly& o) { return *this = *this * o; }

    friend Poly operator*(const Poly& a, const Rational& c) {
        Poly r;
        if (c == 0) return r;
        for (const auto& [m, k] : a.terms_) r.terms_[m] = k * c;
        return r;
    }
    friend Poly operator*(const Rational& c, const Poly& a) { return a * c; }

    friend bool operator==(const Poly& a, const Poly& b) { return a.terms_ == b.terms_; }
    friend bool operator!=(const Poly& a, const Poly& b) { return !(a == b); }

    /// Deterministic ordering so Poly can key ordered containers.
    friend bool operator<(const Poly& a, const Poly& b) {
        MonomialLexLess less;
        auto ia = a.terms_.begin(), ib = b.terms_.begin();
        for (; ia != a.terms_.end() && ib != b.terms_.end(); ++ia, ++ib) {
            if (less(ia->first, ib->first)) return true;
            if (less(ib->first, ia->first)) return false;
            if (ia->second != ib->second) return ia->second < ib->second;
        }
        return ia == a.terms_.end() && ib != b.terms_.end();
    }

    Poly pow(long e) const {
        if (e < 0) throw std::domain_error("Poly::pow: negative exponent");
        Poly acc(1), base = *this;
        while (e) {
            if (e & 1) acc *= base;
            if (e >>= 1) base *= base;
        }
        return acc;
    }

    void add_term(const Monomial& m, const Rational& c) {
        if (c == 0) return;
        auto it = terms_.find(m);
        if (it == terms_.end()) {
            terms_.emplace(m, c);
        } else {
            it->second += c;
            if (it->second == 0) terms_.erase(it);
        }
    }

    std::string str() const {
        if (is_zero()) return "0";
        std::string out;
        bool first = true;
        for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
            const auto& [m, c] = *it;
            Rational a = c;
            if (first) {
                if (a < 0) out += "-";
            } else {
                out += a < 0 ? " - " : " + ";
            }
            if (a < 0) a = -a;
            std::string mono;
            for (const auto& [v, e] : m) {
                if (!mono.empty()) mono += "*";
                mono += v;
                if (e != 1) mono += "^" + std::to_string(e);
            }
            if (mono.empty())
                out += rat_str(a);
            else if (a == 1)
                out += mono;
            else
                out += rat_str(a) + "*" + mono;
            first = false;
        }
        return out;
    }

  private:
    TermMap terms_;
};

/// Exact quotient; throws if b does not divide a.
inline Poly poly_divexact(const Poly& a, const Poly& b) {
    if (b.is_zero()) throw std::domain_error("poly_divexact: division by zero");
    Poly rem = a, quot;
    while (!rem.is_zero()) {
        auto qm = mono_div(rem.leading_monomial(), b.leading_monomial());
        if (!qm) throw std::domain_error("poly_divexact: not divisible");
        Rational qc = rem.leading_coeff() / b.leading_coeff();
        Poly t = Poly::term(*qm, qc);
        quot += t;
        rem -= t * b;
    }
    return quot;
}

namespace detail {

/// View of p as a univariate polynomial in v with Poly coefficients.
inline std::map<long, Poly> coeffs_in(const Poly& p, const std::string& v) {
    std::map<long, Poly> out;
    for (const auto& [m, c] : p.terms()) {
        Monomial rest = m;
        long e = 0;
        auto it = rest.find(v);
        if (it != rest.end()) {
            e = it->second;
            rest.erase(it);
        }
        out[e].add_term(rest, c);
    }
    for (auto it = out.begin(); it != out.end();)
        it = it->second.is_zero() ? out.erase(it) : std::next(it);
    return out;
}

inline Poly from_coeffs(const std::map<long, Poly>& cs, const std::string& v) {
    Poly r;
    for (const auto& [e, c] : cs) {
        Poly ve = e == 0 ? Poly(1) : Poly::variable(v, e);
        r += c * ve;
    }
    return r;
}

inline long deg_in(const Poly& p, const std::string& v) { return p.degree(v); }

inline Poly lead_coeff_in(const Poly& p, const std::string& v) {
    auto cs = coeffs_in(p, v);
    if (cs.empty()) return Poly();
    return cs.rbegin()->second;
}

/// Pseudo-remainder of f by g in the variable v.
inline Poly prem(Poly f, const Poly& g, const std::string& v) {
    long dg = deg_in(g, v);
    Poly lcg = lead_coeff_in(g, v);
    while (!f.is_zero() && deg_in(f, v) >= dg) {
        long df = deg_in(f, v);
        Poly lcf = lead_coeff_in(f, v);
        Poly shift = df - dg == 0 ? Poly(1) : Poly::variable(v, df - dg);
        f = lcg * f - lcf * shift * g;
    }
    return f;
}

}  // namespace detail

Poly poly_gcd(const Poly& a, const Poly& b);

namespace detail {

/// Rescales to integer coefficients with content 1 and positive leading
/// coefficient (lex). The canonical representative of p up to Q-scaling.
inline Poly make_primitive(const Poly& p) {
    if (p.is_zero()) return p;
    Integer den_lcm = 1, num_gcd = 0;
    for (const auto& [m, c] : p.terms()) den_lcm = lcm(den_lcm, rat_den(c));
    for (const auto& [m, c] : p.terms()) num_gcd = gcd(num_gcd, rat_num(c) * (den_lcm / rat_den(c)));
    Rational scale = rat(den_lcm, num_gcd);
    Poly r = p * scale;
    if (r.leading_coeff() < 0) r = -r;
    return r;
}

/// Gcd of the Poly coefficients of p viewed in the variable v.
inline Poly content_in(const Poly& p, const std::string& v) {
    Poly c;
    for (const auto& [e, coeff] : coeffs_in(p, v)) {
        c = poly_gcd(c, coeff);
        if (c.is_one()) break;
    }
    return c;
}

}  // namespace detail

/// Canonical gcd: integer-primitive with positive leading coefficient.
/// gcd(0, p) = primitive(p); gcd of two constants is 1.
inline Poly poly_gcd(const Poly& a, const Poly& b) {
    using namespace detail;
    if (a.is_zero()) return b.is_zero() ? Poly() : make_primitive(b);
    if (b.is_zero()) return make_primitive(a);
    if (a.is_constant() || b.is_constant()) return Poly(1);

    auto sa = a.symbols(), sb = b.symbols();
    std::set<std::string> all = sa;
    all.insert(sb.begin(), sb.end());
    std::string v = *all.begin();

    if (!sa.count(v) || !sb.count(v)) {
        // v appears in only one argument: gcd divides the v-content of that one
        const Poly& with = sa.count(v) ? a : b;
        const Poly& without = sa.count(v) ? b : a;
        return poly_gcd(content_in(with, v), without);
    }

    Poly ca = content_in(a, v), cb = content_in(b, v);
    Poly cont = poly_gcd(ca, cb);
    Poly fp = make_primitive(poly_divexact(a, ca));
    Poly gp = make_primitive(poly_divexact(b, cb));

    // primitive PRS on the primitive parts
    if (deg_in(fp, v) < deg_in(gp, v)) std::swap(fp, gp);
    while (true) {
        Poly r = prem(fp, gp, v);
        if (r.is_zero()) break;
        if (deg_in(r, v) == 0) {
            gp = Poly(1);
            break;
        }
        fp = gp;
        gp = make_primitive(poly_divexact(r, content_in(r, v)));
    }
    return make_primitive(cont * gp);
}

/// Substitutes polynomials for variables; every symbol of p must be mapped.
inline Poly poly_subst(const Poly& p, const std::map<std::string, Poly>& images) {
    Poly r;
    for (const auto& [m, c] : p.terms()) {
        Poly t(c);
        for (const auto& [v, e] : m) {
            auto it = images.find(v);
            if (it == images.end()) throw std::domain_error("poly_subst: unmapped symbol " + v);
            t *= it->second.pow(e);
        }
        r += t;
    }
    return r;
}

inline Poly poly_derivative(const Poly& p, const std::string& v) {
    Poly r;
    for (const auto& [m, c] : p.terms()) {
        auto it = m.find(v);
        if (it == m.end()) continue;
        long e = it->second;
        Monomial dm = m;
        if (e == 1)
            dm.erase(v);
        else
            dm[v] = e - 1;
        r.add_term(dm, c * Rational(e));
    }
    return r;
}

}  // namespace cpl
