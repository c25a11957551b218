// Quivers as weighted digraphs with frozen flags, the triangle quiver for
// PGL_{r+1}, amalgamation along frozen vertices, and the once-punctured-disk
// quiver built from two glued triangles.
//
// Arrow weights live in (1/2)Z with the antisymmetric convention
// weight(i,j) = -weight(j,i); only one orientation is stored.
#pragma once

#include <algorithm>
#include <array>
#include <map>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include "cpl/ratfunc.hpp"
#include "cpl/seed.hpp"

namespace cpl {

struct QuiverVertex {
    std::string label;
    bool frozen = false;
};

class Quiver {
  public:
    const std::vector<QuiverVertex>& vertices() const { return verts_; }

    int add_vertex(const std::string& label, bool frozen) {
        if (index_.count(label)) throw std::domain_error("quiver: duplicate label " + label);
        index_[label] = (int)verts_.size();
        verts_.push_back({label, frozen});
        return (int)verts_.size() - 1;
    }

    int index_of(const std::string& label) const {
        auto it = index_.find(label);
        if (it == index_.end()) throw std::domain_error("quiver: no vertex " + label);
        return it->second;
    }
    bool has_vertex(const std::string& label) const { return index_.count(label) > 0; }

    Rational weight(int i, int j) const {
        if (i == j) return Rational(0);
        auto it = arrows_.find(ordered(i, j));
        if (it == arrows_.end()) return Rational(0);
        return i < j ? it->second : -it->second;
    }
    Rational weight(const std::string& a, const std::string& b) const {
        return weight(index_of(a), index_of(b));
    }

    void add_weight(int i, int j, const Rational& w) {
        if (i == j) throw std::domain_error("quiver: self-arrow");
        if (w == 0) return;
        auto key = ordered(i, j);
        Rational& slot = arrows_[key];
        slot += i < j ? w : -w;
        if (slot == 0) arrows_.erase(key);
    }
    void add_weight(const std::string& a, const std::string& b, const Rational& w) {
        add_weight(index_of(a), index_of(b), w);
    }

    void set_frozen(const std::string& label, bool frozen) { verts_[index_of(label)].frozen = frozen; }

    int size() const { return (int)verts_.size(); }
    int mutable_count() const {
        int c = 0;
        for (const auto& v : verts_) c += v.frozen ? 0 : 1;
        return c;
    }

    /// Directed arrows with positive weight, sorted by (from, to) label.
    std::vector<std::tuple<std::string, std::string, Rational>> arrow_list() const {
        std::vector<std::tuple<std::string, std::string, Rational>> out;
        for (const auto& [key, w] : arrows_) {
            auto [i, j] = key;
            if (w > 0)
                out.emplace_back(verts_[i].label, verts_[j].label, w);
            else
                out.emplace_back(verts_[j].label, verts_[i].label, -w);
        }
        std::sort(out.begin(), out.end());
        return out;
    }

    /// Integrality: half-integer weights only between two frozen vertices.
    void validate() const {
        for (const auto& [key, w] : arrows_) {
            auto [i, j] = key;
            Rational two_w = w * Rational(2);
            if (!is_integer(two_w))
                throw std::domain_error("quiver: weight not in (1/2)Z");
            if (!is_integer(w) && !(verts_[i].frozen && verts_[j].frozen))
                throw std::domain_error("quiver: half-integer weight at a mutable vertex");
        }
    }

  private:
    static std::pair<int, int> ordered(int i, int j) { return i < j ? std::pair{i, j} : std::pair{j, i}; }

    std::vector<QuiverVertex> verts_;
    std::map<std::string, int> index_;
    std::map<std::pair<int, int>, Rational> arrows_;  // key i<j, weight(i,j)
};

/// Seed with eps^_ij = weight(i, j); type-A multipliers (all 1). Vertices
/// are reordered mutable-first, preserving relative order.
inline Seed quiver_to_seed(const Quiver& q) {
    q.validate();
    std::vector<int> order;
    for (int i = 0; i < q.size(); ++i)
        if (!q.vertices()[i].frozen) order.push_back(i);
    int m = (int)order.size();
    for (int i = 0; i < q.size(); ++i)
        if (q.vertices()[i].frozen) order.push_back(i);
    int n = q.size();
    std::vector<std::vector<Rational>> eps(n, std::vector<Rational>(n, Rational(0)));
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) eps[a][b] = q.weight(order[a], order[b]);
    std::vector<std::string> labels;
    for (int a = 0; a < n; ++a) labels.push_back(q.vertices()[order[a]].label);
    return make_seed(n, m, std::vector<long>(m, 1), eps, labels);
}

inline Quiver seed_to_quiver(const Seed& s) {
    for (long d : s.multipliers)
        if (d != 1) throw std::domain_error("seed_to_quiver: non-unit multiplier");
    Quiver q;
    for (int i = 0; i < s.n; ++i) q.add_vertex(s.labels[i], s.is_frozen(i));
    for (int i = 0; i < s.n; ++i)
        for (int j = i + 1; j < s.n; ++j) q.add_weight(i, j, s.eps_hat[i][j]);
    q.validate();
    return q;
}

namespace detail {

/// Spreadsheet-style names for mutable vertices: A..Z, AA, AB, ...
inline std::string letter_name(int idx) {
    std::string s;
    ++idx;
    while (idx > 0) {
        --idx;
        s.insert(s.begin(), char('A' + idx % 26));
        idx /= 26;
    }
    return s;
}

}  // namespace detail

/// Triangle quiver on the side-(r+1) triangular lattice with the three
/// corners removed. Interior vertices mutable (A, B, C, ... by row), edge
/// vertices frozen: L1..Lr up the left side, B1..Br along the bottom,
/// R1..Rr up the right side. Each small triangle contributes an oriented
/// weight-1/2 3-cycle: upward triangles clockwise, downward ones
/// counterclockwise; arrows through the deleted corners are dropped.
inline Quiver triangle_quiver(long r) {
    if (r < 1) throw std::domain_error("triangle_quiver: rank must be >= 1");
    const long N = r + 1;  // side length of the subdivision

    auto is_corner = [&](long i, long j) {
        return (i == 0 && j == 0) || (i == N && j == 0) || (i == 0 && j == N);
    };

    Quiver q;
    std::map<std::pair<long, long>, std::string> at;
    int interior = 0;
    for (long i = 0; i <= N; ++i)
        for (long j = 0; j + i <= N; ++j) {
            if (is_corner(i, j)) continue;
            std::string lbl;
            bool frozen = true;
            if (j == 0)
                lbl = "B" + std::to_string(i);      // bottom, left to right
            else if (i == 0)
                lbl = "L" + std::to_string(j);      // left side, bottom to top
            else if (i + j == N)
                lbl = "R" + std::to_string(j);      // right side, bottom to top
            else {
                lbl = detail::letter_name(interior++);
                frozen = false;
            }
            at[{i, j}] = lbl;
            q.add_vertex(lbl, frozen);
        }

    const Rational half(1, 2);
    auto add_cycle = [&](std::array<std::pair<long, long>, 3> cyc) {
        for (int t = 0; t < 3; ++t) {
            auto [a, b] = std::pair{cyc[t], cyc[(t + 1) % 3]};
            if (is_corner(a.first, a.second) || is_corner(b.first, b.second)) continue;
            q.add_weight(at.at(a), at.at(b), half);
        }
    };

    for (long i = 0; i + 1 <= N; ++i)
        for (long j = 0; i + j + 1 <= N; ++j) {
            // upward triangle (i,j), (i+1,j), (i,j+1): clockwise
            add_cycle({std::pair{i, j}, {i, j + 1}, {i + 1, j}});
            // downward triangle (i+1,j), (i,j+1), (i+1,j+1): counterclockwise
            if (i + j + 2 <= N) add_cycle({std::pair{i + 1, j}, {i + 1, j + 1}, {i, j + 1}});
        }

    q.validate();
    return q;
}

struct GluingSpec {
    /// (label in a, label in b) of frozen vertices to identify
    std::vector<std::pair<std::string, std::string>> pairs;
    /// labels (of the merged quiver) to mark mutable afterwards
    std::set<std::string> defrost;
};

struct Amalgamation {
    Quiver quiver;
    /// merged label -> (preimage label in a, preimage label in b);
    /// the variable map is x -> x' x'' on these and the identity elsewhere
    std::map<std::string, std::pair<std::string, std::string>> glued;

    /// Variable images over the disjoint-union symbol set.
    std::map<std::string, RatFunc> variable_map() const {
        std::map<std::string, RatFunc> out;
        for (const auto& v : quiver.vertices()) {
            auto it = glued.find(v.label);
            if (it == glued.end())
                out[v.label] = RatFunc::variable(v.label);
            else
                out[v.label] =
                    RatFunc::variable(it->second.first) * RatFunc::variable(it->second.second);
        }
        return out;
    }
};

/// Glues b onto a along the given frozen-vertex pairs: vertex sets merge,
/// arrow weights add on identified pairs, glued vertices stay frozen unless
/// defrosted. Labels must be globally unique outside the identified pairs;
/// the merged vertex keeps the a-side label.
inline Amalgamation amalgamate(const Quiver& a, const Quiver& b, const GluingSpec& g) {
    std::map<std::string, std::string> b_to_merged;
    std::set<std::string> used_a, used_b;
    for (const auto& [la, lb] : g.pairs) {
        if (!a.vertices()[a.index_of(la)].frozen || !b.vertices()[b.index_of(lb)].frozen)
            throw std::domain_error("amalgamate: can only glue frozen vertices");
        if (!used_a.insert(la).second || !used_b.insert(lb).second)
            throw std::domain_error("amalgamate: gluing pairs not disjoint");
        b_to_merged[lb] = la;
    }

    Amalgamation out;
    Quiver& q = out.quiver;
    for (const auto& v : a.vertices()) q.add_vertex(v.label, v.frozen);
    for (const auto& v : b.vertices())
        if (!b_to_merged.count(v.label)) q.add_vertex(v.label, v.frozen);

    for (int i = 0; i < a.size(); ++i)
        for (int j = i + 1; j < a.size(); ++j)
            q.add_weight(a.vertices()[i].label, a.vertices()[j].label, a.weight(i, j));
    auto merged_label = [&](const std::string& lb) {
        auto it = b_to_merged.find(lb);
        return it == b_to_merged.end() ? lb : it->second;
    };
    for (int i = 0; i < b.size(); ++i)
        for (int j = i + 1; j < b.size(); ++j) {
            Rational w = b.weight(i, j);
            if (w == 0) continue;
            q.add_weight(merged_label(b.vertices()[i].label),
                         merged_label(b.vertices()[j].label), w);
        }

    for (const auto& [la, lb] : g.pairs) out.glued[la] = {la, lb};
    for (const auto& lbl : g.defrost) {
        if (!out.glued.count(lbl))
            throw std::domain_error("amalgamate: defrost target is not a glued vertex");
        q.set_frozen(lbl, false);
    }
    q.validate();
    return out;
}

/// Quiver of the once-punctured disk with two marked points: two rank-r
/// triangles glued along both triangulation diagonals (left and right sides,
/// matched bottom-to-top), glued vertices mutable, everything else frozen.
inline Quiver punctured_disk_quiver(long r) {
    if (r < 1) throw std::domain_error("punctured_disk_quiver: rank must be >= 1");
    Quiver t1 = triangle_quiver(r), t2 = triangle_quiver(r);

    auto prefixed = [&](const Quiver& src, const std::string& pre) {
        Quiver q;
        for (const auto& v : src.vertices()) q.add_vertex(pre + v.label, v.frozen);
        for (int i = 0; i < src.size(); ++i)
            for (int j = i + 1; j < src.size(); ++j)
                q.add_weight(i, j, src.weight(i, j));
        return q;
    };
    Quiver a = prefixed(t1, "t1.");
    Quiver b = prefixed(t2, "t2.");

    GluingSpec g;
    for (long i = 1; i <= r; ++i) {
        g.pairs.emplace_back("t1.L" + std::to_string(i), "t2.L" + std::to_string(i));
        g.pairs.emplace_back("t1.R" + std::to_string(i), "t2.R" + std::to_string(i));
        g.defrost.insert("t1.L" + std::to_string(i));
        g.defrost.insert("t1.R" + std::to_string(i));
    }
    Quiver q = amalgamate(a, b, g).quiver;
    // only the identified diagonal vertices are mutable in this chart
    for (const auto& v : q.vertices())
        if (!v.frozen && !g.defrost.count(v.label)) q.set_frozen(v.label, true);
    q.validate();
    return q;
}

}  // namespace cpl
