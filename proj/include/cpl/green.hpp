// Framed seeds, c-vectors, and maximal green sequences.
//
// The frame adds one frozen vertex per mutable direction with initial
// integer exchange block equal to the identity; c-vectors are read off the
// frame rows scaled back to integers, so the one mutation engine drives the
// whole search. Sign coherence is asserted, not assumed: a mixed-sign
// c-vector is an internal-consistency failure, never a search outcome.
#pragma once

#include <cstdint>
#include <deque>
#include <functional>
#include <map>
#include <optional>
#include <set>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "cpl/seed.hpp"

namespace cpl {

struct SignCoherenceError : std::logic_error {
    using std::logic_error::logic_error;
};

enum class VertexColor { Green, Red };

/// Matrix-only state of a framed seed: base vertices 0..n-1 (mutable first),
/// frame vertices n..n+m-1. Variables are irrelevant to green search.
struct FramedSeed {
    int n = 0;  // base size
    int m = 0;  // mutable count
    std::vector<long> multipliers;
    std::vector<std::vector<Rational>> eps;  // (n+m) x (n+m)

    int total() const { return n + m; }

    /// Integer c-vector of mutable j: frame rows scaled by d_j.
    std::vector<Integer> c_vector(int j) const {
        std::vector<Integer> c;
        c.reserve(m);
        for (int i = 0; i < m; ++i) {
            Rational e = eps[n + i][j] * Rational(multipliers[j]);
            if (!is_integer(e)) throw std::logic_error("framed seed: non-integral c-vector");
            c.push_back(rat_num(e));
        }
        return c;
    }

    friend bool operator==(const FramedSeed& a, const FramedSeed& b) {
        return a.n == b.n && a.m == b.m && a.multipliers == b.multipliers && a.eps == b.eps;
    }
};

inline FramedSeed make_framed(const Seed& s) {
    FramedSeed f;
    f.n = s.n;
    f.m = s.m;
    f.multipliers = s.multipliers;
    int t = s.n + s.m;
    f.eps.assign(t, std::vector<Rational>(t, Rational(0)));
    for (int i = 0; i < s.n; ++i)
        for (int j = 0; j < s.n; ++j) f.eps[i][j] = s.eps_hat[i][j];
    for (int i = 0; i < s.m; ++i) {
        Rational v = rat(1, s.multipliers[i]);
        f.eps[s.n + i][i] = v;   // eps^_{i'j} = delta_ij / d_j
        f.eps[i][s.n + i] = -v;
    }
    return f;
}

/// Green iff the c-vector is entrywise >= 0 (and nonzero); mixed signs
/// raise SignCoherenceError.
inline VertexColor classify(const FramedSeed& f, int j) {
    if (j < 0 || j >= f.m) throw std::domain_error("classify: not a mutable vertex");
    auto c = f.c_vector(j);
    bool has_pos = false, has_neg = false, has_nonzero = false;
    for (const auto& e : c) {
        if (e > 0) has_pos = true;
        if (e < 0) has_neg = true;
        if (e != 0) has_nonzero = true;
    }
    if (has_pos && has_neg) throw SignCoherenceError("mixed-sign c-vector at vertex " +
                                                     std::to_string(j + 1));
    if (!has_nonzero) throw SignCoherenceError("zero c-vector at vertex " + std::to_string(j + 1));
    return has_neg ? VertexColor::Red : VertexColor::Green;
}

inline FramedSeed mutate_framed(const FramedSeed& f, int k) {
    if (k < 0 || k >= f.m) throw std::domain_error("mutate_framed: direction out of range");
    FramedSeed r = f;
    r.eps = detail::mutate_eps_hat(f.eps, f.multipliers[k], k, f.total());
    return r;
}

inline bool all_red(const FramedSeed& f) {
    for (int j = 0; j < f.m; ++j)
        if (classify(f, j) == VertexColor::Green) return false;
    return true;
}

/// Final framed matrix of a maximal green sequence: the integer frame block
/// must be a signed permutation with all signs negative.
inline bool frame_is_negative_permutation(const FramedSeed& f) {
    std::vector<int> row_used(f.m, 0);
    for (int j = 0; j < f.m; ++j) {
        auto c = f.c_vector(j);
        int nonzero = -1;
        for (int i = 0; i < f.m; ++i)
            if (c[i] != 0) {
                if (nonzero >= 0) return false;
                nonzero = i;
            }
        if (nonzero < 0 || c[nonzero] != -1) return false;
        if (row_used[nonzero]++) return false;
    }
    return true;
}

struct MgsTranscript {
    bool valid = false;
    std::vector<std::string> steps;
};

/// True iff every step mutates a currently-green vertex and the final state
/// is all red.
inline MgsTranscript verify_mgs(const Seed& s, const MutationSequence& seq) {
    MgsTranscript t;
    FramedSeed f = make_framed(s);
    for (std::size_t step = 0; step < seq.size(); ++step) {
        int k = seq[step];
        if (k < 0 || k >= f.m) throw std::domain_error("verify_mgs: bad direction");
        VertexColor col = classify(f, k);
        std::ostringstream line;
        line << "step " << step + 1 << ": mutate " << s.labels[k] << " ("
             << (col == VertexColor::Green ? "green" : "red") << ")";
        t.steps.push_back(line.str());
        if (col != VertexColor::Green) {
            t.steps.push_back("rejected: step mutates a red vertex");
            return t;
        }
        f = mutate_framed(f, k);
    }
    if (!all_red(f)) {
        t.steps.push_back("rejected: final state is not all red");
        return t;
    }
    if (!frame_is_negative_permutation(f))
        throw SignCoherenceError("all-red state without negative-permutation frame");
    t.steps.push_back("accepted: all vertices red");
    t.valid = true;
    return t;
}

namespace detail {

/// Permutation-invariant bucket key; frame rows keep their pinned order.
inline std::string framed_key(const FramedSeed& f) {
    auto row_sig = [&](int i) {
        std::vector<std::string> es;
        es.reserve(f.total());
        for (int j = 0; j < f.total(); ++j) es.push_back(rat_str(f.eps[i][j]));
        std::sort(es.begin(), es.end());
        std::string s;
        for (auto& e : es) s += e + ",";
        return s;
    };
    std::vector<std::string> mut, froz;
    for (int i = 0; i < f.n; ++i) {
        std::string sig =
            (i < f.m ? "m" + std::to_string(f.multipliers[i]) : "f") + ":" + row_sig(i);
        (i < f.m ? mut : froz).push_back(sig);
    }
    std::sort(mut.begin(), mut.end());
    std::sort(froz.begin(), froz.end());
    std::string key;
    for (auto& s : mut) key += s + "|";
    key += "#";
    for (auto& s : froz) key += s + "|";
    key += "#";
    for (int i = f.n; i < f.total(); ++i) key += row_sig(i) + "|";
    return key;
}

/// Isomorphism of framed seeds fixing the frame pointwise: a permutation of
/// the base vertices (mutable to mutable, multiplier-preserving) matching
/// the full framed matrix exactly.
inline bool framed_isomorphic(const FramedSeed& a, const FramedSeed& b) {
    if (a.n != b.n || a.m != b.m || a.multipliers != b.multipliers) return false;
    int t = a.total();
    std::vector<int> perm(t, -1);
    std::vector<bool> used(t, false);
    for (int i = a.n; i < t; ++i) {  // frame pinned
        perm[i] = i;
        used[i] = true;
    }
    // backtracking over base vertices with partial row/column checks
    std::vector<int> order;
    for (int i = 0; i < a.n; ++i) order.push_back(i);
    std::function<bool(std::size_t)> extend = [&](std::size_t pos) -> bool {
        if (pos == order.size()) return true;
        int i = order[pos];
        bool i_mut = i < a.m;
        for (int j = i_mut ? 0 : a.m; j < (i_mut ? a.m : a.n); ++j) {
            if (used[j]) continue;
            if (i_mut && a.multipliers[i] != b.multipliers[j]) continue;
            bool ok = true;
            // frame rows are assigned up front, so c-vector data is checked here
            for (int p = 0; p < t && ok; ++p) {
                if (perm[p] < 0) continue;
                if (a.eps[i][p] != b.eps[j][perm[p]]) ok = false;
                if (ok && a.eps[p][i] != b.eps[perm[p]][j]) ok = false;
            }
            if (!ok) continue;
            perm[i] = j;
            used[j] = true;
            if (extend(pos + 1)) return true;
            perm[i] = -1;
            used[j] = false;
        }
        return false;
    };
    return extend(0);
}

}  // namespace detail

struct MgsSearchResult {
    bool found = false;
    MutationSequence sequence;  // a shortest MGS when found
    std::size_t explored = 0;   // dedup-distinct states expanded by the BFS
    bool bfs_truncated = false;
    std::uint64_t mgs_count = 0;  // green sequences reaching all-red, tree-counted
    bool count_truncated = false;
};

/// Breadth-first search over green mutations with deduplication by framed
/// isomorphism fixing the frame; returns a shortest MGS within budget. The
/// MGS count comes from a separate tree enumeration (no dedup) capped by the
/// same node budget, since distinct sequences may share states.
inline MgsSearchResult search_mgs(const Seed& s, std::size_t budget = 10000) {
    if (budget == 0) throw std::domain_error("search_mgs: budget must be positive");
    MgsSearchResult res;

    struct Node {
        FramedSeed state;
        MutationSequence path;
    };
    std::vector<Node> nodes;
    std::map<std::string, std::vector<std::size_t>> buckets;
    std::deque<std::size_t> queue;

    FramedSeed root = make_framed(s);
    if (all_red(root)) {  // vacuously true only when nothing is mutable
        res.found = true;
        res.mgs_count = 1;
        res.explored = 1;
        return res;
    }
    nodes.push_back({root, {}});
    buckets[detail::framed_key(root)].push_back(0);
    queue.push_back(0);

    while (!queue.empty()) {
        std::size_t at = queue.front();
        queue.pop_front();
        ++res.explored;
        Node cur = nodes[at];

        for (int k = 0; k < s.m; ++k) {
            if (classify(cur.state, k) != VertexColor::Green) continue;
            FramedSeed next = mutate_framed(cur.state, k);
            std::string key = detail::framed_key(next);
            bool known = false;
            for (std::size_t idx : buckets[key])
                if (nodes[idx].state == next || detail::framed_isomorphic(next, nodes[idx].state)) {
                    known = true;
                    break;
                }
            if (known) continue;
            if (nodes.size() >= budget) {
                res.bfs_truncated = true;
                continue;
            }
            Node nn;
            nn.state = std::move(next);
            nn.path = cur.path;
            nn.path.push_back(k);
            if (all_red(nn.state)) {
                // BFS order: the first all-red state reached is at minimal depth
                res.found = true;
                res.sequence = nn.path;
                if (!frame_is_negative_permutation(nn.state))
                    throw SignCoherenceError("MGS endpoint frame is not a negative permutation");
                queue.clear();
                break;
            }
            nodes.push_back(nn);
            buckets[key].push_back(nodes.size() - 1);
            queue.push_back(nodes.size() - 1);
        }
    }

    // sequence count: breadth-first tree enumeration, no dedup
    std::deque<FramedSeed> tree;
    tree.push_back(root);
    std::size_t expanded = 0;
    while (!tree.empty()) {
        if (expanded >= budget) {
            res.count_truncated = true;
            break;
        }
        FramedSeed cur = tree.front();
        tree.pop_front();
        ++expanded;
        if (all_red(cur)) {
            ++res.mgs_count;
            continue;
        }
        for (int k = 0; k < s.m; ++k)
            if (classify(cur, k) == VertexColor::Green) tree.push_back(mutate_framed(cur, k));
    }
    return res;
}

}  // namespace cpl
