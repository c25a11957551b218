// Multivariate Laurent polynomials and the Laurent-membership test that
// upper-bound certificates are built from: a reduced rational function is
// Laurent exactly when its denominator is a single monomial.
#pragma once

#include <map>
#include <optional>
#include <string>

#include "cpl/ratfunc.hpp"

namespace cpl {

/// Finite map from (possibly negative) exponent vectors to coefficients.
class MultiLaurent {
  public:
    using TermMap = std::map<Monomial, Rational, MonomialLexLess>;

    MultiLaurent() = default;
    explicit MultiLaurent(const Rational& c) {
        if (c != 0) terms_[Monomial{}] = c;
    }

    const TermMap& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    void add_term(const Monomial& m, const Rational& c) {
        if (c == 0) return;
        auto it = terms_.find(m);
        if (it == terms_.end())
            terms_.emplace(m, c);
        else if ((it->second += c) == 0)
            terms_.erase(it);
    }

    friend MultiLaurent operator+(MultiLaurent a, const MultiLaurent& b) {
        for (const auto& [m, c] : b.terms_) a.add_term(m, c);
        return a;
    }
    friend MultiLaurent operator-(MultiLaurent a, const MultiLaurent& b) {
        for (const auto& [m, c] : b.terms_) a.add_term(m, -c);
        return a;
    }
    friend MultiLaurent operator*(const MultiLaurent& a, const MultiLaurent& b) {
        MultiLaurent r;
        for (const auto& [ma, ca] : a.terms_)
            for (const auto& [mb, cb] : b.terms_) r.add_term(mono_mul(ma, mb), ca * cb);
        return r;
    }
    friend bool operator==(const MultiLaurent& a, const MultiLaurent& b) {
        return a.terms_ == b.terms_;
    }
    friend bool operator!=(const MultiLaurent& a, const MultiLaurent& b) { return !(a == b); }

    RatFunc to_ratfunc() const {
        RatFunc acc;
        for (const auto& [m, c] : terms_) {
            RatFunc t{Poly(c)};
            for (const auto& [v, e] : m) t *= RatFunc::variable(v).pow(e);
            acc += t;
        }
        return acc;
    }

    std::string str() const { return to_ratfunc().str(); }

  private:
    TermMap terms_;
};

/// Laurent form of f, or nullopt when the reduced denominator is not a
/// monomial. Total: never throws on valid RatFunc input.
inline std::optional<MultiLaurent> is_laurent(const RatFunc& f) {
    if (f.is_zero()) return MultiLaurent();
    if (!f.den().is_monomial()) return std::nullopt;
    const auto& [dm, dc] = *f.den().terms().begin();
    MultiLaurent out;
    for (const auto& [m, c] : f.num().terms()) {
        Monomial shifted = m;
        for (const auto& [v, e] : dm) {
            long ne = (shifted.count(v) ? shifted[v] : 0) - e;
            if (ne == 0)
                shifted.erase(v);
            else
                shifted[v] = ne;
        }
        out.add_term(shifted, c / dc);
    }
    return out;
}

}  // namespace cpl
