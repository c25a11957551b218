// Seeds for cluster Poisson charts: exchange data (skew eps^, multipliers,
// frozen split) plus the chart variables as exact rational functions of the
// initial chart. Mutation acts on both; the bracket acts through eps^.
//
// Index convention: vertices 0..n-1, mutable ones first (0..m-1). Public
// mutation directions are 0-based here; the CLI layer speaks 1-based.
#pragma once

#include <map>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "cpl/ratfunc.hpp"

namespace cpl {

using MutationSequence = std::vector<int>;

struct Seed {
    int n = 0;
    int m = 0;
    std::vector<long> multipliers;                 // size m
    std::vector<std::vector<Rational>> eps_hat;    // n x n, skew-symmetric
    std::vector<std::string> labels;               // size n, distinct
    std::vector<RatFunc> vars;                     // size n, in the initial chart

    bool is_frozen(int i) const { return i >= m; }

    /// Integer exchange entry eps_ik = eps^_ik * d_k, k mutable.
    Integer eps_int(int i, int k) const {
        Rational e = eps_hat[i][k] * Rational(multipliers[k]);
        if (!is_integer(e)) throw std::domain_error("seed: eps^_ik d_k not integral");
        return rat_num(e);
    }

    void validate() const {
        if (n < 0 || m < 0 || m > n) throw std::domain_error("seed: bad sizes");
        if ((int)multipliers.size() != m) throw std::domain_error("seed: multiplier count");
        for (long d : multipliers)
            if (d <= 0) throw std::domain_error("seed: multipliers must be positive");
        if ((int)labels.size() != n || (int)vars.size() != n || (int)eps_hat.size() != n)
            throw std::domain_error("seed: field sizes disagree");
        std::set<std::string> seen(labels.begin(), labels.end());
        if ((int)seen.size() != n) throw std::domain_error("seed: duplicate labels");
        for (int i = 0; i < n; ++i) {
            if ((int)eps_hat[i].size() != n) throw std::domain_error("seed: eps^ not square");
            for (int j = 0; j < n; ++j)
                if (eps_hat[i][j] != -eps_hat[j][i])
                    throw std::domain_error("seed: eps^ not skew-symmetric");
        }
        for (int i = 0; i < n; ++i)
            for (int k = 0; k < m; ++k) (void)eps_int(i, k);
    }
};

/// Seed on the identity chart: x_i -> x_i.
inline Seed make_seed(int n, int m, std::vector<long> multipliers,
                      std::vector<std::vector<Rational>> eps_hat,
                      std::vector<std::string> labels) {
    Seed s;
    s.n = n;
    s.m = m;
    s.multipliers = std::move(multipliers);
    s.eps_hat = std::move(eps_hat);
    s.labels = std::move(labels);
    s.vars.reserve(n);
    for (int i = 0; i < n; ++i) s.vars.push_back(RatFunc::variable(s.labels[i]));
    s.validate();
    return s;
}

namespace detail {

/// Matrix half of mutation: applied to the full n x n matrix, frozen rows
/// and columns included, with the d_k-scaled rule.
inline std::vector<std::vector<Rational>> mutate_eps_hat(
    const std::vector<std::vector<Rational>>& e, long dk, int k, int n) {
    std::vector<std::vector<Rational>> r(n, std::vector<Rational>(n, Rational(0)));
    const Rational half(1, 2);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            if (i == k || j == k) {
                r[i][j] = -e[i][j];
            } else {
                Rational eik = e[i][k], ekj = e[k][j];
                Rational aik = sgn(eik) < 0 ? -eik : eik;
                Rational akj = sgn(ekj) < 0 ? -ekj : ekj;
                r[i][j] = e[i][j] + Rational(dk) * half * (aik * ekj + eik * akj);
            }
        }
    return r;
}

}  // namespace detail

/// Seed mutation in direction k (0-based, k < m).
inline Seed mutate(const Seed& s, int k) {
    if (k < 0 || k >= s.m) throw std::domain_error("mutate: direction out of range or frozen");
    Seed r = s;
    r.eps_hat = detail::mutate_eps_hat(s.eps_hat, s.multipliers[k], k, s.n);

    const RatFunc& xk = s.vars[k];
    r.vars[k] = xk.inverse();
    for (int i = 0; i < s.n; ++i) {
        if (i == k) continue;
        Integer e = s.eps_int(i, k);
        if (e == 0) continue;  // sgn(0) = 0: variable unchanged
        int sg = sgn(e);
        long ee = e.get_si();
        RatFunc factor = (RatFunc(1) + xk.pow(-sg)).pow(-ee);
        r.vars[i] = s.vars[i] * factor;
    }
    r.validate();
    return r;
}

inline Seed apply_sequence(const Seed& s, const MutationSequence& seq) {
    Seed cur = s;
    for (int k : seq) cur = mutate(cur, k);
    return cur;
}

/// {f, g} = sum_ij 2 eps^_ij x_i x_j (df/dx_i)(dg/dx_j) in the chart of s.
inline RatFunc poisson_bracket(const RatFunc& f, const RatFunc& g, const Seed& s) {
    std::vector<RatFunc> df(s.n), dg(s.n);
    std::vector<bool> need_i(s.n, false), need_j(s.n, false);
    auto fsym = f.symbols(), gsym = g.symbols();
    for (int i = 0; i < s.n; ++i) {
        need_i[i] = fsym.count(s.labels[i]) > 0;
        need_j[i] = gsym.count(s.labels[i]) > 0;
        if (need_i[i]) df[i] = derivative(f, s.labels[i]);
        if (need_j[i]) dg[i] = derivative(g, s.labels[i]);
    }
    RatFunc acc;
    for (int i = 0; i < s.n; ++i) {
        if (!need_i[i] || df[i].is_zero()) continue;
        for (int j = 0; j < s.n; ++j) {
            if (!need_j[j] || s.eps_hat[i][j] == 0 || dg[j].is_zero()) continue;
            RatFunc coeff{Poly(Rational(2) * s.eps_hat[i][j])};
            acc += coeff * RatFunc::variable(s.labels[i]) * RatFunc::variable(s.labels[j]) *
                   df[i] * dg[j];
        }
    }
    return acc;
}

/// Exact equality of all fields (labels, matrix, multipliers, variables).
inline bool seeds_equal(const Seed& a, const Seed& b) {
    return a.n == b.n && a.m == b.m && a.multipliers == b.multipliers && a.labels == b.labels &&
           a.eps_hat == b.eps_hat && a.vars == b.vars;
}

namespace detail {

inline RatFunc rename_symbols(const RatFunc& f, const std::map<std::string, std::string>& ren) {
    std::map<std::string, RatFunc> img;
    for (const auto& v : f.symbols()) {
        auto it = ren.find(v);
        img[v] = RatFunc::variable(it == ren.end() ? v : it->second);
    }
    return substitute(f, img);
}

struct IsoOptions {
    bool compare_vars = true;
    // permutation must fix these positions pointwise (used by framed seeds)
    std::vector<int> pinned;
};

/// Backtracking permutation search. perm[i] = image in b of vertex i of a.
inline bool iso_extend(const Seed& a, const Seed& b, const IsoOptions& opt, bool rename,
                       std::vector<int>& perm, std::vector<bool>& used, int i) {
    if (i == a.n) {
        if (opt.compare_vars && rename) {
            std::map<std::string, std::string> ren;
            for (int t = 0; t < a.n; ++t) ren[a.labels[t]] = b.labels[perm[t]];
            for (int t = 0; t < a.n; ++t)
                if (rename_symbols(a.vars[t], ren) != b.vars[perm[t]]) return false;
        }
        return true;
    }
    bool pinned = false;
    for (int p : opt.pinned) pinned |= (p == i);
    for (int j = 0; j < b.n; ++j) {
        if (used[j]) continue;
        if (pinned && j != i) continue;
        if (a.is_frozen(i) != b.is_frozen(j)) continue;
        if (!a.is_frozen(i) && a.multipliers[i] != b.multipliers[j]) continue;
        if (opt.compare_vars && !rename && a.vars[i] != b.vars[j]) continue;
        bool ok = true;
        for (int t = 0; t < i && ok; ++t) {
            if (a.eps_hat[i][t] != b.eps_hat[j][perm[t]]) ok = false;
            if (ok && a.eps_hat[t][i] != b.eps_hat[perm[t]][j]) ok = false;
        }
        if (!ok) continue;
        perm[i] = j;
        used[j] = true;
        if (iso_extend(a, b, opt, rename, perm, used, i + 1)) return true;
        used[j] = false;
    }
    return false;
}

inline std::optional<std::vector<int>> seed_isomorphism(const Seed& a, const Seed& b,
                                                        const IsoOptions& opt) {
    if (a.n != b.n || a.m != b.m) return std::nullopt;
    {
        std::multiset<long> da(a.multipliers.begin(), a.multipliers.end());
        std::multiset<long> db(b.multipliers.begin(), b.multipliers.end());
        if (da != db) return std::nullopt;
    }
    // variables compared exactly when both seeds live on one symbol universe,
    // through the label bijection otherwise (independently built seeds)
    bool rename = false;
    if (opt.compare_vars) {
        std::set<std::string> la(a.labels.begin(), a.labels.end());
        std::set<std::string> lb(b.labels.begin(), b.labels.end());
        rename = la != lb;
    }
    std::vector<int> perm(a.n, -1);
    std::vector<bool> used(b.n, false);
    if (iso_extend(a, b, opt, rename, perm, used, 0)) return perm;
    return std::nullopt;
}

}  // namespace detail

/// Frozen- and multiplier-preserving permutation matching eps^ exactly and
/// carrying variables onto variables, or nullopt. perm[i] = position in b.
inline std::optional<std::vector<int>> seed_isomorphic(const Seed& a, const Seed& b) {
    return detail::seed_isomorphism(a, b, detail::IsoOptions{});
}

/// Isomorphism on exchange data only (variables ignored).
inline std::optional<std::vector<int>> seed_isomorphic_matrix(const Seed& a, const Seed& b) {
    detail::IsoOptions opt;
    opt.compare_vars = false;
    return detail::seed_isomorphism(a, b, opt);
}

/// Applies a vertex permutation: vertex i of s becomes vertex perm[i].
inline Seed permute_seed(const Seed& s, const std::vector<int>& perm) {
    Seed r = s;
    for (int i = 0; i < s.n; ++i) {
        int j = perm[i];
        r.labels[j] = s.labels[i];
        r.vars[j] = s.vars[i];
        if (!s.is_frozen(i)) r.multipliers[j] = s.multipliers[i];
        for (int t = 0; t < s.n; ++t) r.eps_hat[j][perm[t]] = s.eps_hat[i][t];
    }
    r.validate();
    return r;
}

}  // namespace cpl
