// Rational functions num/den over the rationals, kept in canonical form:
// fraction reduced, denominator integer-primitive with positive leading
// coefficient. Equality is therefore structural.
#pragma once

#include <map>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>

#include "cpl/polynomial.hpp"

namespace cpl {

class RatFunc {
  public:
    RatFunc() : num_(), den_(1) {}
    explicit RatFunc(const Rational& c) : num_(c), den_(1) {}
    explicit RatFunc(long c) : num_(c), den_(1) {}
    explicit RatFunc(const Poly& p) : num_(p), den_(1) {}
    RatFunc(const Poly& num, const Poly& den) : num_(num), den_(den) { reduce(); }

    static RatFunc variable(const std::string& name) { return RatFunc(Poly::variable(name)); }

    const Poly& num() const { return num_; }
    const Poly& den() const { return den_; }
    bool is_zero() const { return num_.is_zero(); }
    bool is_constant() const { return num_.is_constant() && den_.is_constant(); }
    bool is_polynomial() const { return den_.is_one(); }

    Rational constant_value() const {
        return num_.constant_value() / den_.constant_value();
    }

    std::set<std::string> symbols() const {
        auto s = num_.symbols();
        auto t = den_.symbols();
        s.insert(t.begin(), t.end());
        return s;
    }

    friend RatFunc operator+(const RatFunc& a, const RatFunc& b) {
        return RatFunc(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
    }
    friend RatFunc operator-(const RatFunc& a, const RatFunc& b) {
        return RatFunc(a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_);
    }
    friend RatFunc operator-(const RatFunc& a) {
        RatFunc r = a;
        r.num_ = -r.num_;
        return r;
    }
    friend RatFunc operator*(const RatFunc& a, const RatFunc& b) {
        return RatFunc(a.num_ * b.num_, a.den_ * b.den_);
    }
    friend RatFunc operator/(const RatFunc& a, const RatFunc& b) {
        if (b.is_zero()) throw std::domain_error("RatFunc: division by zero");
        return RatFunc(a.num_ * b.den_, a.den_ * b.num_);
    }
    RatFunc& operator+=(const RatFunc& o) { return *this = *this + o; }
    RatFunc& operator-=(const RatFunc& o) { return *this = *this - o; }
    RatFunc& operator*=(const RatFunc& o) { return *this = *this * o; }
    RatFunc& operator/=(const RatFunc& o) { return *this = *this / o; }

    friend bool operator==(const RatFunc& a, const RatFunc& b) {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }
    friend bool operator!=(const RatFunc& a, const RatFunc& b) { return !(a == b); }
    friend bool operator<(const RatFunc& a, const RatFunc& b) {
        if (a.num_ != b.num_) return a.num_ < b.num_;
        return a.den_ < b.den_;
    }

    RatFunc pow(long e) const {
        if (e >= 0) return RatFunc(num_.pow(e), den_.pow(e));
        if (is_zero()) throw std::domain_error("RatFunc: 0 to a negative power");
        return RatFunc(den_.pow(-e), num_.pow(-e));
    }

    RatFunc inverse() const { return RatFunc(1) / *this; }

    std::string str() const {
        if (den_.is_one()) return num_.str();
        // a factor is safe unparenthesized only when it prints as one token:
        // a single variable to the first power, or a positive integer
        auto atomic = [](const Poly& p) {
            if (p.terms().size() != 1) return false;
            const auto& [m, c] = *p.terms().begin();
            if (m.empty()) return c > 0 && is_integer(c);
            return c == 1 && m.size() == 1 && m.begin()->second == 1;
        };
        auto wrap = [&](const Poly& p) { return atomic(p) ? p.str() : "(" + p.str() + ")"; };
        std::string n = num_.terms().size() == 1 ? num_.str() : "(" + num_.str() + ")";
        return n + "/" + wrap(den_);
    }

  private:
    Poly num_, den_;

    void reduce() {
        if (den_.is_zero()) throw std::domain_error("RatFunc: zero denominator");
        if (num_.is_zero()) {
            den_ = Poly(1);
            return;
        }
        Poly g = poly_gcd(num_, den_);
        if (!g.is_one()) {
            num_ = poly_divexact(num_, g);
            den_ = poly_divexact(den_, g);
        }
        // canonical scaling: denominator integer-primitive, positive lead
        Poly prim = detail::make_primitive(den_);
        Rational scale = den_.leading_coeff() / prim.leading_coeff();
        den_ = prim;
        num_ = num_ * (Rational(1) / scale);
    }
};

/// Derivative with respect to one variable.
inline RatFunc derivative(const RatFunc& f, const std::string& v) {
    Poly dn = poly_derivative(f.num(), v);
    Poly dd = poly_derivative(f.den(), v);
    return RatFunc(dn * f.den() - f.num() * dd, f.den() * f.den());
}

/// Exact composition. Every symbol of f must have an image; a vanishing
/// denominator after composition signals a degenerate assignment.
inline RatFunc substitute(const RatFunc& f, const std::map<std::string, RatFunc>& images) {
    // common denominator of the images keeps the arithmetic polynomial-sized
    auto eval_poly = [&](const Poly& p) {
        RatFunc acc;
        for (const auto& [m, c] : p.terms()) {
            RatFunc t{Poly(c)};
            for (const auto& [v, e] : m) {
                auto it = images.find(v);
                if (it == images.end())
                    throw std::domain_error("substitute: unmapped symbol " + v);
                t *= it->second.pow(e);
            }
            acc += t;
        }
        return acc;
    };
    RatFunc dn = eval_poly(f.den());
    if (dn.is_zero()) throw std::domain_error("substitute: denominator vanishes");
    return eval_poly(f.num()) / dn;
}

}  // namespace cpl
