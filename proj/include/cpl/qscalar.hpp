// Laurent polynomials in q^(1/d) with integer coefficients.
//
// Exponents are stored fixed-point: the key k stands for q^(k/d). Values are
// kept canonical with the smallest d that still expresses every exponent, so
// equality is structural and elements with different granularity mix freely.
#pragma once

#include <map>
#include <numeric>
#include <optional>
#include <stdexcept>
#include <string>

#include "cpl/scalar.hpp"

namespace cpl {

class QScalar {
  public:
    QScalar() = default;
    explicit QScalar(long c) { set_term(0, Integer(c)); }
    explicit QScalar(const Integer& c) { set_term(0, c); }

    /// c * q^(num/den)
    static QScalar monomial(const Integer& c, long num, long den = 1) {
        if (den <= 0) throw std::domain_error("QScalar: nonpositive exponent denominator");
        QScalar s;
        s.d_ = den;
        if (c != 0) s.terms_[num] = c;
        s.normalize();
        return s;
    }

    static QScalar q_power(long num, long den = 1) { return monomial(Integer(1), num, den); }

    long denominator_degree() const { return d_; }
    const std::map<long, Integer>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    bool is_one() const {
        return terms_.size() == 1 && terms_.begin()->first == 0 && terms_.begin()->second == 1;
    }

    /// True when a single term c * q^e; the unit test for theta peeling.
    bool is_monomial() const { return terms_.size() == 1; }

    friend QScalar operator+(const QScalar& a, const QScalar& b) {
        auto [x, y, d] = aligned(a, b);
        QScalar r;
        r.d_ = d;
        r.terms_ = x;
        for (const auto& [k, c] : y) {
            auto it = r.terms_.find(k);
            if (it == r.terms_.end())
                r.terms_[k] = c;
            else if ((it->second += c) == 0)
                r.terms_.erase(it);
        }
        r.normalize();
        return r;
    }
    friend QScalar operator-(const QScalar& a, const QScalar& b) { return a + (-b); }
    friend QScalar operator-(const QScalar& a) {
        QScalar r = a;
        for (auto& [k, c] : r.terms_) c = -c;
        return r;
    }
    friend QScalar operator*(const QScalar& a, const QScalar& b) {
        auto [x, y, d] = aligned(a, b);
        QScalar r;
        r.d_ = d;
        for (const auto& [ka, ca] : x)
            for (const auto& [kb, cb] : y) {
                auto it = r.terms_.find(ka + kb);
                if (it == r.terms_.end())
                    r.terms_[ka + kb] = ca * cb;
                else if ((it->second += ca * cb) == 0)
                    r.terms_.erase(it);
            }
        r.normalize();
        return r;
    }
    QScalar& operator+=(const QScalar& o) { return *this = *this + o; }
    QScalar& operator-=(const QScalar& o) { return *this = *this - o; }
    QScalar& operator*=(const QScalar& o) { return *this = *this * o; }

    friend bool operator==(const QScalar& a, const QScalar& b) {
        return a.d_ == b.d_ && a.terms_ == b.terms_;
    }
    friend bool operator!=(const QScalar& a, const QScalar& b) { return !(a == b); }
    friend bool operator<(const QScalar& a, const QScalar& b) {
        if (a.d_ != b.d_) return a.d_ < b.d_;
        return a.terms_ < b.terms_;
    }

    /// Evaluation at q^(1/d) = 1: the coefficient sum.
    Rational limit_at_one() const {
        Integer s = 0;
        for (const auto& [k, c] : terms_) s += c;
        return Rational(s);
    }

    /// All exponents integral and all coefficients nonnegative: N[q, q^-1].
    bool in_positive_integer_ring() const {
        for (const auto& [k, c] : terms_) {
            if (k % d_ != 0) return false;
            if (c < 0) return false;
        }
        return true;
    }

    std::string str() const {
        if (is_zero()) return "0";
        std::string out;
        bool first = true;
        for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
            Integer c = it->second;
            if (first) {
                if (c < 0) out += "-";
            } else {
                out += c < 0 ? " - " : " + ";
            }
            if (c < 0) c = -c;
            long k = it->first;
            std::string qpart;
            if (k != 0) {
                qpart = "q";
                if (k != d_) {
                    if (k % d_ == 0)
                        qpart += "^" + std::to_string(k / d_);
                    else
                        qpart += "^(" + std::to_string(k) + "/" + std::to_string(d_) + ")";
                }
            }
            if (qpart.empty())
                out += c.get_str();
            else if (c == 1)
                out += qpart;
            else
                out += c.get_str() + "*" + qpart;
            first = false;
        }
        return out;
    }

  private:
    long d_ = 1;
    std::map<long, Integer> terms_;  // k -> coeff of q^(k/d_)

    void set_term(long k, const Integer& c) {
        if (c != 0) terms_[k] = c;
    }

    void normalize() {
        if (terms_.empty()) {
            d_ = 1;
            return;
        }
        long g = d_;
        for (const auto& [k, c] : terms_) {
            g = std::gcd(g, k < 0 ? -k : k);
            if (g == 1) break;
        }
        if (g > 1) {
            std::map<long, Integer> t;
            for (const auto& [k, c] : terms_) t[k / g] = c;
            terms_ = std::move(t);
            d_ /= g;
        }
    }

    static std::tuple<std::map<long, Integer>, std::map<long, Integer>, long> aligned(
        const QScalar& a, const QScalar& b) {
        long d = std::lcm(a.d_, b.d_);
        auto scale = [d](const QScalar& s) {
            std::map<long, Integer> t;
            long f = d / s.d_;
            for (const auto& [k, c] : s.terms_) t[k * f] = c;
            return t;
        };
        return {scale(a), scale(b), d};
    }
};

/// Exact quotient, or nullopt when `by` does not divide s in Z[q^(±1/d)].
/// Factor out the lowest powers, then ordinary descending long division; a
/// leading-coefficient non-divisibility means no integer-coefficient quotient.
inline std::optional<QScalar> q_divide(const QScalar& s, const QScalar& by) {
    if (by.is_zero()) throw std::domain_error("q_divide: division by zero");
    if (s.is_zero()) return QScalar();
    long d = std::lcm(s.denominator_degree(), by.denominator_degree());
    auto lift = [d](const QScalar& x) {
        std::map<long, Integer> t;
        long f = d / x.denominator_degree();
        for (const auto& [k, c] : x.terms()) t[k * f] = c;
        return t;
    };
    std::map<long, Integer> rem = lift(s), div = lift(by);
    const long dlead = div.rbegin()->first;
    const long dlow = div.begin()->first;
    const Integer dc = div.rbegin()->second;
    QScalar quot;
    // for an exact quotient, lead - dlead >= low - dlow holds at every step
    // and the lead/low gap shrinks, so this always terminates
    while (!rem.empty() && rem.rbegin()->first - dlead >= rem.begin()->first - dlow) {
        long rlead = rem.rbegin()->first;
        Integer rc = rem.rbegin()->second;
        if (rc % dc != 0) return std::nullopt;
        Integer qc = rc / dc;
        long qk = rlead - dlead;
        quot += QScalar::monomial(qc, qk, d);
        for (const auto& [k, c] : div) {
            long key = k + qk;
            auto it = rem.find(key);
            Integer nc = (it == rem.end() ? Integer(0) : it->second) - qc * c;
            if (nc == 0) {
                if (it != rem.end()) rem.erase(it);
            } else {
                rem[key] = nc;
            }
        }
    }
    if (!rem.empty()) return std::nullopt;
    return quot;
}

inline Rational q_limit(const QScalar& s) { return s.limit_at_one(); }

}  // namespace cpl
