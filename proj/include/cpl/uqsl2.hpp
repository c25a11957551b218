// U_q(sl2) in PBW normal form F^a K^b E^c over Z[q^{±1/2}], the Casimir /
// Chebyshev theta family, expansions in that family, and the semiclassical
// limit onto the Poisson algebra in e, f, k^{±1}.
//
// Relations: K E = q^2 E K, K F = q^{-2} F K,
//            E F - F E = (q - q^{-1})(K^{-1} - K).
#pragma once

#include <array>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <tuple>
#include <vector>

#include "cpl/laurent.hpp"
#include "cpl/qscalar.hpp"

namespace cpl {

class UqElement {
  public:
    /// (a, b, c) stands for F^a K^b E^c; a, c >= 0.
    using Pbw = std::array<long, 3>;

    UqElement() = default;

    static UqElement term(const Pbw& m, const QScalar& c) {
        if (m[0] < 0 || m[2] < 0) throw std::domain_error("uq: negative F or E power");
        UqElement e;
        if (!c.is_zero()) e.terms_[m] = c;
        return e;
    }
    static UqElement unit(const QScalar& c = QScalar(1)) { return term({0, 0, 0}, c); }
    static UqElement E() { return term({0, 0, 1}, QScalar(1)); }
    static UqElement F() { return term({1, 0, 0}, QScalar(1)); }
    static UqElement K(long power = 1) { return term({0, power, 0}, QScalar(1)); }

    const std::map<Pbw, QScalar>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    void add_term(const Pbw& m, const QScalar& c) {
        if (c.is_zero()) return;
        auto it = terms_.find(m);
        if (it == terms_.end()) {
            terms_.emplace(m, c);
        } else {
            it->second += c;
            if (it->second.is_zero()) terms_.erase(it);
        }
    }

    friend UqElement operator+(UqElement a, const UqElement& b) {
        for (const auto& [m, c] : b.terms_) a.add_term(m, c);
        return a;
    }
    friend UqElement operator-(UqElement a, const UqElement& b) {
        for (const auto& [m, c] : b.terms_) a.add_term(m, -c);
        return a;
    }
    friend UqElement operator*(const QScalar& c, UqElement a) {
        std::map<Pbw, QScalar> out;
        for (const auto& [m, k] : a.terms_) {
            QScalar v = c * k;
            if (!v.is_zero()) out[m] = v;
        }
        a.terms_ = std::move(out);
        return a;
    }
    friend bool operator==(const UqElement& a, const UqElement& b) { return a.terms_ == b.terms_; }
    friend bool operator!=(const UqElement& a, const UqElement& b) { return !(a == b); }

    std::string str() const {
        if (terms_.empty()) return "0";
        std::string out;
        for (const auto& [m, c] : terms_) {
            if (!out.empty()) out += " + ";
            out += "(" + c.str() + ")";
            if (m[0]) out += "*F^" + std::to_string(m[0]);
            if (m[1]) out += "*K^" + std::to_string(m[1]);
            if (m[2]) out += "*E^" + std::to_string(m[2]);
        }
        return out;
    }

  private:
    std::map<Pbw, QScalar> terms_;
};

namespace detail {

/// sum_{j=0}^{c-1} q^{2js}: the ladder factor from commuting E^c past F.
inline QScalar geometric_q(long c, int s) {
    QScalar acc;
    for (long j = 0; j < c; ++j) acc += QScalar::q_power(2 * j * s);
    return acc;
}

inline UqElement mul_by_F(const UqElement& x) {
    UqElement r;
    const QScalar qmq = QScalar::q_power(1) - QScalar::q_power(-1);
    for (const auto& [m, coeff] : x.terms()) {
        auto [a, b, c] = m;
        // F^a K^b E^c F = q^{-2b} F^{a+1} K^b E^c
        //   + (q - q^{-1}) [ S+ F^a K^{b-1} - S- F^a K^{b+1} ] E^{c-1}
        r.add_term({a + 1, b, c}, coeff * QScalar::q_power(-2 * b));
        if (c > 0) {
            QScalar t = coeff * qmq;
            r.add_term({a, b - 1, c - 1}, t * geometric_q(c, +1));
            r.add_term({a, b + 1, c - 1}, -(t * geometric_q(c, -1)));
        }
    }
    return r;
}

inline UqElement mul_by_K(const UqElement& x, int s) {
    UqElement r;
    for (const auto& [m, coeff] : x.terms()) {
        auto [a, b, c] = m;
        r.add_term({a, b + s, c}, coeff * QScalar::q_power(-2 * c * s));
    }
    return r;
}

inline UqElement mul_by_E(const UqElement& x) {
    UqElement r;
    for (const auto& [m, coeff] : x.terms()) r.add_term({m[0], m[1], m[2] + 1}, coeff);
    return r;
}

}  // namespace detail

/// Product in PBW normal form via confluent rewriting to F-then-K-then-E.
inline UqElement uq_multiply(const UqElement& x, const UqElement& y) {
    UqElement out;
    for (const auto& [m, coeff] : y.terms()) {
        UqElement acc = x;
        for (long i = 0; i < m[0]; ++i) acc = detail::mul_by_F(acc);
        for (long i = 0; i < (m[1] < 0 ? -m[1] : m[1]); ++i)
            acc = detail::mul_by_K(acc, m[1] < 0 ? -1 : +1);
        for (long i = 0; i < m[2]; ++i) acc = detail::mul_by_E(acc);
        out = out + coeff * acc;
    }
    return out;
}

inline UqElement operator*(const UqElement& a, const UqElement& b) { return uq_multiply(a, b); }

/// C = E F - q K^{-1} - q^{-1} K, the center's generator.
inline UqElement casimir() {
    return UqElement::E() * UqElement::F() - QScalar::q_power(1) * UqElement::K(-1) -
           QScalar::q_power(-1) * UqElement::K(1);
}

/// Coefficients of T_n, lowest degree first. T_0 = 1 and, for n > 0,
/// T_n(t + 1/t) = t^n + t^{-n}; the recurrence p_{n+1} = x p_n - p_{n-1}
/// runs on the power sums, whose zeroth member is 2, not T_0.
inline std::vector<Integer> chebyshev(long n) {
    if (n < 0) throw std::domain_error("chebyshev: negative index");
    if (n == 0) return {Integer(1)};
    std::vector<Integer> prev{Integer(2)};              // p_0 = 2
    std::vector<Integer> cur{Integer(0), Integer(1)};   // p_1 = x
    for (long i = 1; i < n; ++i) {
        std::vector<Integer> next(cur.size() + 1, Integer(0));
        for (std::size_t j = 0; j < cur.size(); ++j) next[j + 1] = cur[j];
        for (std::size_t j = 0; j < prev.size(); ++j) next[j] -= prev[j];
        prev = std::move(cur);
        cur = std::move(next);
    }
    return cur;
}

/// p evaluated at x inside the algebra.
inline UqElement evaluate_poly(const std::vector<Integer>& p, const UqElement& x) {
    UqElement acc;  // Horner from the top coefficient
    for (auto it = p.rbegin(); it != p.rend(); ++it) {
        acc = acc * x;
        acc.add_term({0, 0, 0}, QScalar(*it));
    }
    return acc;
}

/// Index into the theta family. E-side: q^{lm} E^l K^m T_n(C) with l, n >= 0,
/// m in Z. F-side: q^{ml} K^l F^m T_n(C) with m > 0, l in Z, n >= 0. The two
/// families are disjoint by construction.
struct ThetaIndex {
    bool e_side = true;
    long l = 0, m = 0, n = 0;

    void validate() const {
        if (n < 0) throw std::domain_error("theta index: n < 0");
        if (e_side && l < 0) throw std::domain_error("theta index: e-side needs l >= 0");
        if (!e_side && m <= 0) throw std::domain_error("theta index: f-side needs m > 0");
    }

    /// l + |m| + n (E-side) or |l| + m + n (F-side).
    long weight() const { return e_side ? l + (m < 0 ? -m : m) + n : (l < 0 ? -l : l) + m + n; }

    friend bool operator<(const ThetaIndex& a, const ThetaIndex& b) {
        return std::tie(a.e_side, a.l, a.m, a.n) < std::tie(b.e_side, b.l, b.m, b.n);
    }
    friend bool operator==(const ThetaIndex& a, const ThetaIndex& b) {
        return a.e_side == b.e_side && a.l == b.l && a.m == b.m && a.n == b.n;
    }

    std::string str() const {
        return std::string(e_side ? "E" : "F") + "(l=" + std::to_string(l) +
               ",m=" + std::to_string(m) + ",n=" + std::to_string(n) + ")";
    }
};

inline UqElement theta_element(const ThetaIndex& idx) {
    idx.validate();
    UqElement tn = evaluate_poly(chebyshev(idx.n), casimir());
    QScalar pre = QScalar::q_power(idx.l * idx.m);
    if (idx.e_side) {
        UqElement e = UqElement::term({0, 0, idx.l}, QScalar(1));
        return pre * (e * UqElement::K(idx.m) * tn);
    }
    UqElement f = UqElement::term({idx.m, 0, 0}, QScalar(1));
    return pre * (UqElement::K(idx.l) * f * tn);
}

namespace detail {

/// Leading PBW term order for the triangular solve: total F+E degree first.
struct PbwDegreeLess {
    bool operator()(const UqElement::Pbw& a, const UqElement::Pbw& b) const {
        long da = a[0] + a[2], db = b[0] + b[2];
        if (da != db) return da < db;
        return a < b;
    }
};

/// The theta index whose element has this leading PBW monomial.
inline ThetaIndex index_of_leading(const UqElement::Pbw& m) {
    ThetaIndex idx;
    if (m[2] >= m[0]) {  // E-side: (n, m, n + l)
        idx.e_side = true;
        idx.n = m[0];
        idx.m = m[1];
        idx.l = m[2] - m[0];
    } else {  // F-side: (m + n, l, n)
        idx.e_side = false;
        idx.n = m[2];
        idx.l = m[1];
        idx.m = m[0] - m[2];
    }
    return idx;
}

}  // namespace detail

/// Theta expansion with cached elements; the change of basis from PBW is
/// unitriangular in (degree, lex) order, which the peeling asserts.
class ThetaBasis {
  public:
    const UqElement& element(const ThetaIndex& idx) {
        auto it = cache_.find(idx);
        if (it == cache_.end()) it = cache_.emplace(idx, theta_element(idx)).first;
        return it->second;
    }

    /// Exact coefficients of x in the theta family. Errors when a needed
    /// index exceeds the weight bound, or on a non-unit leading coefficient
    /// (which would contradict unitriangularity).
    std::map<ThetaIndex, QScalar> expand(const UqElement& x, long weight_bound = 64) {
        std::map<ThetaIndex, QScalar> out;
        UqElement rest = x;
        while (!rest.is_zero()) {
            // largest remaining PBW term
            auto lead = rest.terms().begin();
            for (auto it = rest.terms().begin(); it != rest.terms().end(); ++it)
                if (detail::PbwDegreeLess{}(lead->first, it->first)) lead = it;
            ThetaIndex idx = detail::index_of_leading(lead->first);
            if (idx.weight() > weight_bound)
                throw std::domain_error("theta expansion: weight bound too small for " +
                                        idx.str());
            const UqElement& theta = element(idx);
            auto tl = theta.terms().find(lead->first);
            if (tl == theta.terms().end())
                throw std::logic_error("theta expansion: leading term missing");
            if (!tl->second.is_monomial())
                throw std::logic_error("theta expansion: leading coefficient not a unit");
            auto coeff = q_divide(lead->second, tl->second);
            if (!coeff)
                throw std::domain_error("theta expansion: coefficient outside Z[q^{±1/2}]");
            out[idx] = *coeff;
            rest = rest - (*coeff * theta);
        }
        return out;
    }

  private:
    std::map<ThetaIndex, UqElement> cache_;
};

/// q^{1/2} -> 1 termwise: the commutative image in e, f, k^{±1}.
inline MultiLaurent semiclassical_sl2(const UqElement& x) {
    MultiLaurent out;
    for (const auto& [m, c] : x.terms()) {
        Monomial mono;
        if (m[0]) mono["f"] = m[0];
        if (m[1]) mono["k"] = m[1];
        if (m[2]) mono["e"] = m[2];
        out.add_term(mono, q_limit(c));
    }
    return out;
}

/// {x, y} = commutator / (2 (q^{1/2} - 1)) at q^{1/2} = 1; non-divisibility
/// cannot occur inside U_q(sl2) and is reported as a logic error.
inline MultiLaurent sl2_bracket(const UqElement& x, const UqElement& y) {
    UqElement comm = x * y - y * x;
    QScalar divisor = QScalar::q_power(1, 2) - QScalar(1);
    MultiLaurent out;
    for (const auto& [m, c] : comm.terms()) {
        auto quo = q_divide(c, divisor);
        if (!quo) throw std::logic_error("sl2_bracket: commutator not divisible by q^(1/2)-1");
        Monomial mono;
        if (m[0]) mono["f"] = m[0];
        if (m[1]) mono["k"] = m[1];
        if (m[2]) mono["e"] = m[2];
        out.add_term(mono, q_limit(*quo) / Rational(2));
    }
    return out;
}

}  // namespace cpl
