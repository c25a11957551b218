// Quantum torus algebras over a seed, their semiclassical limits, and the
// quantum mutation consistency checks.
//
// Elements are kept in normal-ordered form: X^a denotes the left-to-right
// product X_1^{a_1} ... X_n^{a_n}, and X^a X^b = q^{2 sum_{i>j} a_i e^_ij b_j}
// X^{a+b}. Quantum mutation images live in a localization at univariate
// denominators in the mutation direction; ShiftFraction carries exactly that,
// with the shift rule X^b f(X_k) = f(q^{2 (b^T e^)_k} X_k) X^b moving
// denominators past monomials.
#pragma once

#include <map>
#include <memory>
#include <numeric>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "cpl/laurent.hpp"
#include "cpl/qscalar.hpp"
#include "cpl/seed.hpp"

namespace cpl {

struct QTorus {
    int n = 0;
    int m = 0;
    long d = 2;  // double of the lcm of the multipliers
    std::vector<long> multipliers;
    std::vector<std::vector<Rational>> eps_hat;
    std::vector<std::string> labels;

    friend bool operator==(const QTorus& a, const QTorus& b) {
        return a.n == b.n && a.m == b.m && a.d == b.d && a.multipliers == b.multipliers &&
               a.eps_hat == b.eps_hat && a.labels == b.labels;
    }
};

inline std::shared_ptr<const QTorus> make_qtorus(const Seed& s) {
    auto t = std::make_shared<QTorus>();
    t->n = s.n;
    t->m = s.m;
    t->multipliers = s.multipliers;
    t->eps_hat = s.eps_hat;
    t->labels = s.labels;
    long l = 1;
    for (long dk : s.multipliers) l = std::lcm(l, dk);
    t->d = 2 * l;
    // q^{2 e^_ij} must lie in Z[q^{±1/d}]
    for (int i = 0; i < t->n; ++i)
        for (int j = 0; j < t->n; ++j)
            if (!is_integer(Rational(2) * t->eps_hat[i][j] * Rational(t->d)))
                throw std::domain_error("qtorus: 2 eps^_ij d is not integral");
    return t;
}

class QTorusElement {
  public:
    using Exponents = std::vector<long>;

    QTorusElement() = default;
    explicit QTorusElement(std::shared_ptr<const QTorus> t) : torus_(std::move(t)) {}

    static QTorusElement monomial(std::shared_ptr<const QTorus> t, const Exponents& a,
                                  const QScalar& c = QScalar(1)) {
        QTorusElement e(std::move(t));
        if ((int)a.size() != e.torus_->n) throw std::domain_error("qtorus: exponent size");
        if (!c.is_zero()) e.terms_[a] = c;
        return e;
    }

    static QTorusElement generator(std::shared_ptr<const QTorus> t, int i, long power = 1) {
        Exponents a(t->n, 0);
        a[i] = power;
        return monomial(std::move(t), a);
    }

    static QTorusElement unit(std::shared_ptr<const QTorus> t, const QScalar& c = QScalar(1)) {
        return monomial(std::move(t), Exponents(t->n, 0), c);
    }

    const std::map<Exponents, QScalar>& terms() const { return terms_; }
    const std::shared_ptr<const QTorus>& torus() const { return torus_; }
    bool is_zero() const { return terms_.empty(); }

    /// q-power picked up when normal-ordering X^a X^b.
    static Rational cocycle_exponent(const QTorus& t, const Exponents& a, const Exponents& b) {
        Rational s(0);
        for (int i = 1; i < t.n; ++i) {
            if (a[i] == 0) continue;
            for (int j = 0; j < i; ++j) {
                if (b[j] == 0) continue;
                s += Rational(a[i]) * t.eps_hat[i][j] * Rational(b[j]);
            }
        }
        return Rational(2) * s;
    }

    friend QTorusElement operator+(QTorusElement a, const QTorusElement& b) {
        a.check_torus(b);
        if (!a.torus_) a.torus_ = b.torus_;
        for (const auto& [m, c] : b.terms_) a.add_term(m, c);
        return a;
    }
    friend QTorusElement operator-(QTorusElement a, const QTorusElement& b) {
        a.check_torus(b);
        if (!a.torus_) a.torus_ = b.torus_;
        for (const auto& [m, c] : b.terms_) a.add_term(m, -c);
        return a;
    }

    friend QTorusElement operator*(const QTorusElement& a, const QTorusElement& b) {
        a.check_torus(b);
        QTorusElement r(a.torus_ ? a.torus_ : b.torus_);
        if (!r.torus_) return r;
        const QTorus& t = *r.torus_;
        for (const auto& [ma, ca] : a.terms_)
            for (const auto& [mb, cb] : b.terms_) {
                Rational e = cocycle_exponent(t, ma, mb);
                Exponents sum(ma.size());
                for (std::size_t i = 0; i < ma.size(); ++i) sum[i] = ma[i] + mb[i];
                r.add_term(sum, ca * cb * q_power_of(t, e));
            }
        return r;
    }

    friend QTorusElement operator*(const QScalar& c, QTorusElement a) {
        std::map<Exponents, QScalar> out;
        for (const auto& [m, k] : a.terms_) {
            QScalar v = c * k;
            if (!v.is_zero()) out[m] = v;
        }
        a.terms_ = std::move(out);
        return a;
    }

    friend bool operator==(const QTorusElement& a, const QTorusElement& b) {
        return a.terms_ == b.terms_;
    }
    friend bool operator!=(const QTorusElement& a, const QTorusElement& b) { return !(a == b); }

    /// Termwise evaluation at q^(1/d) = 1.
    MultiLaurent classical_limit() const {
        MultiLaurent out;
        if (!torus_) return out;
        for (const auto& [m, c] : terms_) {
            Monomial mono;
            for (int i = 0; i < torus_->n; ++i)
                if (m[i] != 0) mono[torus_->labels[i]] = m[i];
            out.add_term(mono, q_limit(c));
        }
        return out;
    }

    void add_term(const Exponents& m, const QScalar& c) {
        if (c.is_zero()) return;
        auto it = terms_.find(m);
        if (it == terms_.end()) {
            terms_.emplace(m, c);
        } else {
            it->second += c;
            if (it->second.is_zero()) terms_.erase(it);
        }
    }

    static QScalar q_power_of(const QTorus& t, const Rational& e) {
        Rational scaled = e * Rational(t.d);
        if (!is_integer(scaled))
            throw std::domain_error("qtorus: q-exponent outside (1/d)Z");
        return QScalar::q_power(scaled.get_num().get_si(), t.d);
    }

    std::string str() const {
        if (terms_.empty()) return "0";
        std::string out;
        for (const auto& [m, c] : terms_) {
            if (!out.empty()) out += " + ";
            out += "(" + c.str() + ")";
            for (std::size_t i = 0; i < m.size(); ++i)
                if (m[i] != 0)
                    out += "*" + (torus_ ? torus_->labels[i] : "X" + std::to_string(i + 1)) +
                           "^" + std::to_string(m[i]);
        }
        return out;
    }

  private:
    std::shared_ptr<const QTorus> torus_;
    std::map<Exponents, QScalar> terms_;

    void check_torus(const QTorusElement& o) const {
        if (torus_ && o.torus_ && !(*torus_ == *o.torus_))
            throw std::domain_error("qtorus: elements of different tori");
    }
};

/// Twisted commutator bracket after the semiclassical limit:
/// [a, b] / (d (q^{1/d} - 1)) evaluated at q^{1/d} = 1. Non-divisibility
/// means the commutation hypothesis fails and is reported as an error.
inline MultiLaurent semiclassical_bracket(const QTorusElement& a, const QTorusElement& b) {
    const auto& t = a.torus() ? a.torus() : b.torus();
    if (!t) return MultiLaurent();
    QTorusElement comm = a * b - b * a;
    // divisibility by (q^{1/d} - 1) is the commutation hypothesis; the
    // remaining factor d is an invertible scalar applied after the limit
    QScalar divisor = QScalar::q_power(1, t->d) - QScalar(1);
    MultiLaurent out;
    for (const auto& [m, c] : comm.terms()) {
        auto quo = q_divide(c, divisor);
        if (!quo)
            throw std::domain_error("semiclassical_bracket: commutator not divisible by (q^(1/d)-1)");
        Monomial mono;
        for (int i = 0; i < t->n; ++i)
            if (m[i] != 0) mono[t->labels[i]] = m[i];
        out.add_term(mono, q_limit(*quo) / Rational(t->d));
    }
    return out;
}

/// Univariate Laurent polynomial in the generator X_k with QScalar
/// coefficients; the denominator carrier for quantum mutation images.
using UniPoly = std::map<long, QScalar>;

namespace detail {

inline UniPoly shift_uni(const UniPoly& u, const QTorus& t, const Rational& qexp) {
    UniPoly out;
    for (const auto& [j, c] : u) {
        QScalar v = c * QTorusElement::q_power_of(t, qexp * Rational(j));
        if (!v.is_zero()) out[j] = v;
    }
    return out;
}

inline QTorusElement uni_to_element(const UniPoly& u, const std::shared_ptr<const QTorus>& t,
                                    int k) {
    QTorusElement e(t);
    for (const auto& [j, c] : u) {
        QTorusElement::Exponents a(t->n, 0);
        a[k] = j;
        e.add_term(a, c);
    }
    return e;
}

}  // namespace detail

/// N * D_1^{-1} * ... * D_t^{-1} with every D univariate in X_k. The
/// denominators commute among themselves; each has unit lowest term.
class ShiftFraction {
  public:
    ShiftFraction(std::shared_ptr<const QTorus> t, int k) : torus_(std::move(t)), k_(k) {}

    static ShiftFraction from_element(std::shared_ptr<const QTorus> t, int k, QTorusElement n) {
        ShiftFraction f(std::move(t), k);
        f.num_ = std::move(n);
        return f;
    }

    const QTorusElement& numerator() const { return num_; }
    const std::vector<UniPoly>& denominators() const { return dens_; }

    void push_denominator(const UniPoly& d) {
        if (d.empty() || d.begin()->second.is_zero())
            throw std::domain_error("shift fraction: denominator without nonzero lowest term");
        dens_.push_back(d);
    }

    /// 2 (b^T e^)_k: the q-shift picked up moving f(X_k) past X^b.
    Rational shift_of(const QTorusElement::Exponents& b) const {
        Rational s(0);
        for (int i = 0; i < torus_->n; ++i)
            if (b[i] != 0) s += Rational(b[i]) * torus_->eps_hat[i][k_];
        return Rational(2) * s;
    }

    friend ShiftFraction operator*(const ShiftFraction& a, const ShiftFraction& b) {
        if (!(*a.torus_ == *b.torus_) || a.k_ != b.k_)
            throw std::domain_error("shift fraction: incompatible factors");
        // split b's numerator into classes of equal shift; X_k powers never
        // affect the shift (eps^_kk = 0), so our images always form one class
        std::map<Rational, QTorusElement> classes;
        for (const auto& [m, c] : b.num_.terms()) {
            auto& slot = classes.try_emplace(a.shift_of(m), QTorusElement(a.torus_)).first->second;
            slot.add_term(m, c);
        }
        ShiftFraction acc(a.torus_, a.k_);
        bool first = true;
        for (const auto& [shift, part] : classes) {
            ShiftFraction piece(a.torus_, a.k_);
            piece.num_ = a.num_ * part;
            for (const auto& d : a.dens_)
                piece.dens_.push_back(detail::shift_uni(d, *a.torus_, -shift));
            for (const auto& d : b.dens_) piece.dens_.push_back(d);
            if (first) {
                acc = piece;
                first = false;
            } else {
                acc = add(acc, piece);
            }
        }
        if (first) acc.num_ = QTorusElement(a.torus_);  // zero numerator
        return acc;
    }

    friend ShiftFraction operator*(const QScalar& c, ShiftFraction f) {
        f.num_ = c * f.num_;
        return f;
    }

    /// Cross-multiplied equality: A D^-1 = B E^-1  iff  A.E = B.D, using that
    /// all denominators commute with each other.
    friend bool operator==(const ShiftFraction& a, const ShiftFraction& b) {
        QTorusElement lhs = a.num_;
        for (const auto& d : b.dens_) lhs = lhs * detail::uni_to_element(d, a.torus_, a.k_);
        QTorusElement rhs = b.num_;
        for (const auto& d : a.dens_) rhs = rhs * detail::uni_to_element(d, a.torus_, a.k_);
        return lhs == rhs;
    }
    friend bool operator!=(const ShiftFraction& a, const ShiftFraction& b) { return !(a == b); }

    /// q -> 1 specialization as an exact rational function of the chart.
    RatFunc classical_limit() const {
        RatFunc n = num_.classical_limit().to_ratfunc();
        RatFunc den(1);
        const std::string& xk = torus_->labels[k_];
        for (const auto& d : dens_) {
            RatFunc f;
            for (const auto& [j, c] : d)
                f += RatFunc{Poly(q_limit(c))} * RatFunc::variable(xk).pow(j);
            den *= f;
        }
        return n / den;
    }

    std::string str() const {
        std::ostringstream os;
        os << "(" << num_.str() << ")";
        for (const auto& d : dens_) {
            os << " * (";
            bool first = true;
            for (const auto& [j, c] : d) {
                if (!first) os << " + ";
                os << "(" << c.str() << ")*" << torus_->labels[k_] << "^" << j;
                first = false;
            }
            os << ")^-1";
        }
        return os.str();
    }

  private:
    std::shared_ptr<const QTorus> torus_;
    int k_;
    QTorusElement num_;
    std::vector<UniPoly> dens_;

    static ShiftFraction add(const ShiftFraction& a, const ShiftFraction& b) {
        // A P^-1 + B Q^-1 = (A.Q + B.P)(PQ)^-1 since P, Q commute
        ShiftFraction r(a.torus_, a.k_);
        QTorusElement an = a.num_;
        for (const auto& d : b.dens_) an = an * detail::uni_to_element(d, a.torus_, a.k_);
        QTorusElement bn = b.num_;
        for (const auto& d : a.dens_) bn = bn * detail::uni_to_element(d, a.torus_, a.k_);
        r.num_ = an + bn;
        r.dens_ = a.dens_;
        r.dens_.insert(r.dens_.end(), b.dens_.begin(), b.dens_.end());
        return r;
    }
};

/// Fock-Goncharov quantum mutation image of X_i in direction k, as a
/// ShiftFraction over the unmutated torus.
inline ShiftFraction quantum_mutation_image(const std::shared_ptr<const QTorus>& t, int k, int i) {
    if (k < 0 || k >= t->m) throw std::domain_error("quantum mutation: direction not mutable");
    const long dk = t->multipliers[k];
    if (i == k)
        return ShiftFraction::from_element(t, k, QTorusElement::generator(t, k, -1));

    Rational eik_r = t->eps_hat[i][k] * Rational(dk);
    if (!is_integer(eik_r)) throw std::domain_error("quantum mutation: eps_ik not integral");
    long eik = eik_r.get_num().get_si();

    auto qk_odd = [&](long a) {  // q_k^{2a-1} with q_k = q^{1/d_k}
        return QScalar::q_power(2 * a - 1, dk);
    };

    ShiftFraction f = ShiftFraction::from_element(t, k, QTorusElement::generator(t, i));
    if (eik >= 0) {
        for (long a = 1; a <= eik; ++a) {
            UniPoly den;
            den[-1] = qk_odd(a);
            den[0] = QScalar(1);
            f.push_denominator(den);
        }
    } else {
        QTorusElement num = QTorusElement::generator(t, i);
        for (long a = 1; a <= -eik; ++a) {
            UniPoly fac;
            fac[0] = QScalar(1);
            fac[1] = qk_odd(a);
            num = num * detail::uni_to_element(fac, t, k);
        }
        f = ShiftFraction::from_element(t, k, num);
    }
    return f;
}

struct QuantumMutationReport {
    bool classical_ok = true;
    bool relations_ok = true;
    std::vector<std::string> checked;   // one line per verified item
    std::vector<std::string> failures;  // counterexamples

    bool passed() const { return classical_ok && relations_ok; }
};

/// Builds all quantum mutation images in direction k and verifies
/// (a) their q -> 1 limits equal the classical mutation formulas, and
/// (b) X'_i X'_j = q^{2 eps^'_ij} X'_j X'_i in the localization, all pairs.
inline QuantumMutationReport quantum_mutate_check(const Seed& s, int k) {
    auto t = make_qtorus(s);
    QuantumMutationReport rep;

    std::vector<ShiftFraction> images;
    for (int i = 0; i < s.n; ++i) images.push_back(quantum_mutation_image(t, k, i));

    Seed classical = mutate(make_seed(s.n, s.m, s.multipliers, s.eps_hat, s.labels), k);
    for (int i = 0; i < s.n; ++i) {
        RatFunc lim = images[i].classical_limit();
        if (lim == classical.vars[i]) {
            rep.checked.push_back("classical limit of X'_" + s.labels[i]);
        } else {
            rep.classical_ok = false;
            rep.failures.push_back("classical limit mismatch at " + s.labels[i] + ": got " +
                                   lim.str() + ", expected " + classical.vars[i].str());
        }
    }

    auto eps_prime = detail::mutate_eps_hat(s.eps_hat, s.multipliers[k], k, s.n);
    for (int i = 0; i < s.n; ++i)
        for (int j = 0; j < s.n; ++j) {
            if (i == j) continue;
            QScalar qp = QTorusElement::q_power_of(*t, Rational(2) * eps_prime[i][j]);
            ShiftFraction lhs = images[i] * images[j];
            ShiftFraction rhs = qp * (images[j] * images[i]);
            if (lhs == rhs) {
                rep.checked.push_back("relation X'_" + s.labels[i] + " X'_" + s.labels[j]);
            } else {
                rep.relations_ok = false;
                rep.failures.push_back("relation failure at pair (" + s.labels[i] + ", " +
                                       s.labels[j] + ")");
            }
        }
    return rep;
}

}  // namespace cpl
