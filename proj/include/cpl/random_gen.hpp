// Random generators for verification batches: seeds with valid multiplier
// data, exact matrices, Borel pairs. All driven by the deterministic Rng.
#pragma once

#include <string>
#include <vector>

#include "cpl/borel.hpp"
#include "cpl/matrix.hpp"
#include "cpl/rng.hpp"
#include "cpl/seed.hpp"

namespace cpl {

/// Random seed with n <= n_max, integer exchange entries bounded by
/// eps_bound, multipliers in [1, mult_bound]. Identity chart.
inline Seed random_seed(Rng& rng, int n_max, long eps_bound, long mult_bound) {
    int n = (int)rng.range(2, n_max);
    int m = (int)rng.range(1, n);
    std::vector<long> mult;
    for (int k = 0; k < m; ++k) mult.push_back(rng.range(1, mult_bound));
    std::vector<std::vector<Rational>> eps(n, std::vector<Rational>(n, Rational(0)));
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
            Rational e;
            if (j < m) {  // column j mutable: integer entry eps_ij there
                for (;;) {
                    long u = rng.range(-eps_bound, eps_bound);
                    e = rat(u, mult[j]);
                    if (i >= m || is_integer(e * Rational(mult[i]))) break;
                }
            } else if (i < m) {  // i mutable, j frozen: column i constrains
                e = rat(rng.range(-eps_bound, eps_bound), mult[i]);
            } else {  // frozen-frozen: half-integers
                e = rat(rng.range(-eps_bound, eps_bound), 2);
            }
            eps[i][j] = e;
            eps[j][i] = -e;
        }
    std::vector<std::string> labels;
    for (int i = 0; i < n; ++i) labels.push_back("x" + std::to_string(i + 1));
    return make_seed(n, m, mult, eps, labels);
}

/// Unit upper triangular with random entries above the diagonal.
inline Matrix<Rational> random_unit_upper(Rng& rng, int n, long bound = 4) {
    Matrix<Rational> m = Matrix<Rational>::identity(n);
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) m(i, j) = rng.rational(bound, 2);
    return m;
}

inline Matrix<Rational> random_unit_lower(Rng& rng, int n, long bound = 4) {
    return random_unit_upper(rng, n, bound).transpose();
}

/// Random element of SL_n as a product of elementary shears.
inline Matrix<Rational> random_sl(Rng& rng, int n, int shears = 8, long bound = 3) {
    Matrix<Rational> m = Matrix<Rational>::identity(n);
    for (int s = 0; s < shears; ++s) {
        int i = (int)rng.range(0, n - 1);
        int j = (int)rng.range(0, n - 2);
        if (j >= i) ++j;
        Matrix<Rational> e = Matrix<Rational>::identity(n);
        e(i, j) = rng.nonzero_rational(bound, 2);
        m = m * e;
    }
    return m;
}

/// Diagonal group element: SL mode has determinant 1, PGL mode has last
/// entry 1. All entries nonzero.
inline Matrix<Rational> random_torus_elem(Rng& rng, GroupMode mode, int n, long bound = 3) {
    Matrix<Rational> h(n, n);
    Rational prod(1);
    for (int i = 0; i + 1 < n; ++i) {
        h(i, i) = rng.nonzero_rational(bound, 2);
        prod *= h(i, i);
    }
    h(n - 1, n - 1) = mode == GroupMode::SL ? Rational(1) / prod : Rational(1);
    return h;
}

/// Random pair in B+ x B- with invertible triangular parts.
inline BorelPair<Rational> random_borel_pair(Rng& rng, GroupMode mode, int n) {
    Matrix<Rational> h1 = random_torus_elem(rng, mode, n);
    Matrix<Rational> h2 = random_torus_elem(rng, mode, n);
    return make_borel_pair(mode, random_unit_upper(rng, n) * h1,
                           h2 * random_unit_lower(rng, n));
}

/// Random pair (u1 h, h^{-1} u2) in the dual group: tau = e by construction.
inline BorelPair<Rational> random_dual_pair(Rng& rng, GroupMode mode, int n) {
    Matrix<Rational> h = random_torus_elem(rng, mode, n);
    auto hinv = inverse(h);
    return make_borel_pair(mode, random_unit_upper(rng, n) * h,
                           *hinv * random_unit_lower(rng, n));
}

/// Random traceless matrix.
inline Matrix<Rational> random_traceless(Rng& rng, int n, long bound = 4) {
    Matrix<Rational> m(n, n);
    Rational sum(0);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            if (i == j && i == n - 1) continue;
            m(i, j) = rng.rational(bound, 2);
            if (i == j) sum += m(i, j);
        }
    m(n - 1, n - 1) = -sum;
    return m;
}

}  // namespace cpl
