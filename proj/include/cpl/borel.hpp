// Type-A matrix layer: Borel pairs, Gauss decomposition in the order
// unipotent-upper * diagonal * unipotent-lower, pinning characters, the
// outer monodromy map and the dual-group fiber, the braid twist
// sigma_i(b1, b2) = (t1 b1 t2, t1 b2 t2), regularity, and the Manin-triple
// pairing checks.
//
// Scalars are exact: Rational for numeric work, RatFunc in named symbols for
// symbolic work. PGL mode fixes representatives by scaling the last diagonal
// entry to 1, matching the normalization u * diag(..., 1).
#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "cpl/matrix.hpp"
#include "cpl/ratfunc.hpp"
#include "cpl/scalar.hpp"

namespace cpl {

enum class GroupMode { SL, PGL };

template <class S>
struct GroupElem {
    GroupMode mode = GroupMode::SL;
    Matrix<S> a;

    int size() const { return a.rows(); }
};

/// PGL representative with last diagonal entry 1; requires it nonzero.
template <class S>
Matrix<S> pgl_normalize(const Matrix<S>& m) {
    int n = m.rows();
    const S& pivot = m(n - 1, n - 1);
    if (pivot == S(0))
        throw std::domain_error("pgl normalization: last diagonal entry vanishes");
    Matrix<S> r = m;
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) r(i, j) = r(i, j) / pivot;
    return r;
}

template <class S>
GroupElem<S> make_group_elem(GroupMode mode, Matrix<S> m) {
    if (!m.is_square()) throw std::domain_error("group element: not square");
    if (mode == GroupMode::SL) {
        if (!(determinant(m) == S(1)))
            throw std::domain_error("group element: determinant is not 1 in SL mode");
        return {mode, std::move(m)};
    }
    return {mode, pgl_normalize(m)};
}

template <class S>
struct BorelPair {
    GroupElem<S> b1;  // upper triangular
    GroupElem<S> b2;  // lower triangular

    void validate() const {
        if (!b1.a.is_upper_triangular() || !b2.a.is_lower_triangular())
            throw std::domain_error("borel pair: triangularity violated");
    }
};

template <class S>
BorelPair<S> make_borel_pair(GroupMode mode, Matrix<S> upper, Matrix<S> lower) {
    BorelPair<S> p{make_group_elem(mode, std::move(upper)), make_group_elem(mode, std::move(lower))};
    p.validate();
    return p;
}

template <class S>
struct GaussParts {
    Matrix<S> plus;   // unit upper
    Matrix<S> zero;   // diagonal
    Matrix<S> minus;  // unit lower
};

/// g = [g]_+ [g]_0 [g]_-; defined exactly on the open cell U+ H U-, i.e.
/// when no pivot vanishes (equivalently the trailing principal minors are
/// nonzero). nullopt otherwise.
template <class S>
std::optional<GaussParts<S>> gauss_decompose(const Matrix<S>& g) {
    if (!g.is_square()) throw std::domain_error("gauss_decompose: not square");
    int n = g.rows();
    // eliminate from the bottom-right corner upward: working copy w becomes
    // the diagonal, recording the unit-upper and unit-lower factors
    Matrix<S> w = g;
    Matrix<S> u = Matrix<S>::identity(n);
    Matrix<S> l = Matrix<S>::identity(n);
    for (int col = n - 1; col >= 0; --col) {
        if (w(col, col) == S(0)) return std::nullopt;
        for (int r = col - 1; r >= 0; --r) {
            // clear w(r, col) with the row operation recorded into u
            if (w(r, col) == S(0)) continue;
            S factor = w(r, col) / w(col, col);
            for (int j = 0; j <= col; ++j) w(r, j) -= factor * w(col, j);
            u(r, col) = factor;  // since u accumulates inverse row ops applied to I
        }
        for (int c = col - 1; c >= 0; --c) {
            if (w(col, c) == S(0)) continue;
            S factor = w(col, c) / w(col, col);
            for (int i2 = 0; i2 <= col; ++i2) w(i2, c) -= factor * w(i2, col);
            l(col, c) = factor;
        }
    }
    GaussParts<S> parts{std::move(u), std::move(w), std::move(l)};
    return parts;
}

/// Projection of a triangular matrix onto the Cartan: its diagonal.
template <class S>
Matrix<S> pi_borel(const Matrix<S>& b) {
    if (!b.is_upper_triangular() && !b.is_lower_triangular())
        throw std::domain_error("pi_B: input not triangular");
    int n = b.rows();
    Matrix<S> d(n, n);
    for (int i = 0; i < n; ++i) {
        if (b(i, i) == S(0)) throw std::domain_error("pi_B: singular triangular matrix");
        d(i, i) = b(i, i);
    }
    return d;
}

/// chi_i of an upper triangular b1: entry (i, i+1) of the unit-upper factor,
/// 1-based i in [1, n-1].
template <class S>
S chi(int i, const Matrix<S>& b1) {
    if (!b1.is_upper_triangular()) throw std::domain_error("chi: input not upper triangular");
    if (i < 1 || i >= b1.rows()) throw std::domain_error("chi: index out of range");
    return b1(i - 1, i) / b1(i, i);
}

/// chi^-_i of a lower triangular b2 = [b2]_0 [b2]_-: entry (i+1, i) of the
/// unit-lower factor.
template <class S>
S chi_minus(int i, const Matrix<S>& b2) {
    if (!b2.is_lower_triangular())
        throw std::domain_error("chi_minus: input not lower triangular");
    if (i < 1 || i >= b2.rows()) throw std::domain_error("chi_minus: index out of range");
    return b2(i, i - 1) / b2(i, i);
}

/// The SL2 embedding at the simple root i: block at rows/columns (i, i+1).
template <class S>
Matrix<S> gamma_embed(int i, int n, const Matrix<S>& block) {
    if (i < 1 || i >= n) throw std::domain_error("gamma_embed: index out of range");
    if (block.rows() != 2 || block.cols() != 2)
        throw std::domain_error("gamma_embed: block must be 2x2");
    Matrix<S> m = Matrix<S>::identity(n);
    m(i - 1, i - 1) = block(0, 0);
    m(i - 1, i) = block(0, 1);
    m(i, i - 1) = block(1, 0);
    m(i, i) = block(1, 1);
    return m;
}

/// alpha_i(h) = h_i / h_{i+1} for a diagonal h.
template <class S>
S simple_root(int i, const Matrix<S>& h) {
    if (!h.is_diagonal()) throw std::domain_error("simple_root: input not diagonal");
    if (i < 1 || i >= h.rows()) throw std::domain_error("simple_root: index out of range");
    return h(i - 1, i - 1) / h(i, i);
}

/// Outer monodromy tau(b1, b2) = pi_{B+}(b1) pi_{B-}(b2), a diagonal matrix;
/// PGL mode normalizes the representative.
template <class S>
Matrix<S> tau(const BorelPair<S>& p) {
    p.validate();
    Matrix<S> t = pi_borel(p.b1.a) * pi_borel(p.b2.a);
    if (p.b1.mode == GroupMode::PGL) t = pgl_normalize(t);
    return t;
}

/// The dual group is the fiber of tau over the identity.
template <class S>
bool in_dual_group(const BorelPair<S>& p) {
    return tau(p) == Matrix<S>::identity(p.b1.size());
}

/// The braid twist sigma_i. Outputs are asserted triangular; a failure on
/// valid input would mean a convention mismatch and is thrown, not patched.
template <class S>
BorelPair<S> braid_sigma(int i, const BorelPair<S>& p) {
    p.validate();
    int n = p.b1.size();
    if (i < 1 || i >= n) throw std::domain_error("braid_sigma: index out of range");

    S c1 = chi(i, p.b1.a);
    S c2 = chi_minus(i, p.b2.a);

    Matrix<S> t1_block(2, 2), t2_block(2, 2);
    t1_block(0, 0) = S(0);
    t1_block(0, 1) = S(1);
    t1_block(1, 0) = S(0) - S(1);
    t1_block(1, 1) = c1;
    t2_block(0, 0) = S(0);
    t2_block(0, 1) = S(0) - S(1);
    t2_block(1, 0) = S(1);
    t2_block(1, 1) = c2;

    Matrix<S> t1 = gamma_embed(i, n, t1_block);
    Matrix<S> t2 = gamma_embed(i, n, t2_block);

    Matrix<S> nb1 = t1 * p.b1.a * t2;
    Matrix<S> nb2 = t1 * p.b2.a * t2;
    if (!nb1.is_upper_triangular() || !nb2.is_lower_triangular())
        throw std::domain_error("braid_sigma: image left the Borel pair (convention mismatch)");
    if (p.b1.mode == GroupMode::PGL) {
        nb1 = pgl_normalize(nb1);
        nb2 = pgl_normalize(nb2);
    }
    BorelPair<S> out{{p.b1.mode, std::move(nb1)}, {p.b2.mode, std::move(nb2)}};
    return out;
}

/// Left-to-right application of braid generators.
template <class S>
BorelPair<S> braid_word(const std::vector<int>& word, BorelPair<S> p) {
    for (int i : word) p = braid_sigma(i, p);
    return p;
}

/// b1 b2^{-1} conjugated by u stays upper triangular: membership of the
/// flag u B+ u^{-1} in the monodromy's Borel set.
template <class S>
bool flag_membership(const BorelPair<S>& p, const Matrix<S>& u) {
    auto uinv = inverse(u);
    if (!uinv) throw std::domain_error("flag_membership: singular flag representative");
    auto b2inv = inverse(p.b2.a);
    if (!b2inv) throw std::domain_error("flag_membership: singular b2");
    Matrix<S> m = *uinv * (p.b1.a * *b2inv) * u;
    return m.is_upper_triangular();
}

struct RegularityReport {
    bool regular = false;
    long centralizer_dim = 0;
};

/// Centralizer dimension inside traceless matrices by exact linear algebra;
/// regular means it equals n - 1.
inline RegularityReport is_regular(const Matrix<Rational>& g) {
    if (!g.is_square()) throw std::domain_error("is_regular: not square");
    int n = g.rows();
    // unknowns: X with gX - Xg = 0, tr X = 0
    Matrix<Rational> sys(n * n + 1, n * n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            int row = i * n + j;
            // (gX)_{ij} = sum_k g_{ik} X_{kj}; (Xg)_{ij} = sum_k X_{ik} g_{kj}
            for (int k = 0; k < n; ++k) {
                sys(row, k * n + j) += g(i, k);
                sys(row, i * n + k) -= g(k, j);
            }
        }
    for (int i = 0; i < n; ++i) sys(n * n, i * n + i) = Rational(1);
    long dim = n * n - rank(sys);
    return {dim == n - 1, dim};
}

/// Degree of the minimal polynomial: least k with I, g, ..., g^k dependent.
inline long minimal_polynomial_degree(const Matrix<Rational>& g) {
    int n = g.rows();
    std::vector<std::vector<Rational>> rows;
    Matrix<Rational> power = Matrix<Rational>::identity(n);
    for (int k = 0; k <= n; ++k) {
        std::vector<Rational> flat;
        flat.reserve(n * n);
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) flat.push_back(power(i, j));
        rows.push_back(flat);
        Matrix<Rational> m = Matrix<Rational>::from_rows(rows);
        if (rank(m) < (int)rows.size()) return k;
        power = power * g;
    }
    return n;  // unreachable: Cayley-Hamilton bounds the degree by n
}

/// Drinfeld-double pairing <(x,y),(x',y')> = tr(x x') - tr(y y').
inline Rational double_pairing(const Matrix<Rational>& x, const Matrix<Rational>& y,
                               const Matrix<Rational>& x2, const Matrix<Rational>& y2) {
    return (x * x2).trace() - (y * y2).trace();
}

inline bool in_p_plus(const Matrix<Rational>& x, const Matrix<Rational>& y) { return x == y; }

/// p_-: x upper, y lower, and the Cartan component of x + y vanishes.
inline bool in_p_minus(const Matrix<Rational>& x, const Matrix<Rational>& y) {
    if (!x.is_upper_triangular() || !y.is_lower_triangular()) return false;
    for (int i = 0; i < x.rows(); ++i)
        if (!(x(i, i) + y(i, i) == Rational(0))) return false;
    return true;
}

/// Standard basis of sl_n: E_ij (i != j) then H_i = E_ii - E_{i+1,i+1}.
inline std::vector<Matrix<Rational>> sl_basis(int n) {
    std::vector<Matrix<Rational>> basis;
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            if (i == j) continue;
            Matrix<Rational> e(n, n);
            e(i, j) = Rational(1);
            basis.push_back(e);
        }
    for (int i = 0; i + 1 < n; ++i) {
        Matrix<Rational> h(n, n);
        h(i, i) = Rational(1);
        h(i + 1, i + 1) = Rational(-1);
        basis.push_back(h);
    }
    return basis;
}

/// Gram matrix of the double pairing on the basis of sl_n + sl_n.
inline Matrix<Rational> manin_gram(int n) {
    auto basis = sl_basis(n);
    int d = (int)basis.size();
    Matrix<Rational> zero(n, n);
    Matrix<Rational> gram(2 * d, 2 * d);
    auto member = [&](int idx) {
        // first block: (b_i, 0); second block: (0, b_i)
        return idx < d ? std::pair{basis[idx], zero} : std::pair{zero, basis[idx - d]};
    };
    for (int i = 0; i < 2 * d; ++i)
        for (int j = 0; j < 2 * d; ++j) {
            auto [x, y] = member(i);
            auto [x2, y2] = member(j);
            gram(i, j) = double_pairing(x, y, x2, y2);
        }
    return gram;
}

}  // namespace cpl
