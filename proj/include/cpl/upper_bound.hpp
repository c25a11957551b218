// Upper-bound membership certificates and exchange-graph enumeration.
//
// An element of the ambient field belongs to the upper bound of a seed when
// it is Laurent in the base chart and in each of the m adjacent charts. The
// rewrite into an adjacent chart substitutes the inverse mutation images,
// which come from the mutation formula applied to the mutated matrix (the
// involution), never from solving equations.
#pragma once

#include <deque>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "cpl/laurent.hpp"
#include "cpl/seed.hpp"

namespace cpl {

/// Images of the current chart variables in the chart adjacent along k:
/// x_i as a rational function of the mutated chart.
inline std::map<std::string, RatFunc> inverse_mutation_images(const Seed& s, int k) {
    Seed t = mutate(s, k);
    // mutation formula on (eps^', identity chart) expresses x in terms of x'
    Seed fresh = make_seed(t.n, t.m, t.multipliers, t.eps_hat, t.labels);
    Seed back = mutate(fresh, k);
    std::map<std::string, RatFunc> img;
    for (int i = 0; i < s.n; ++i) img[s.labels[i]] = back.vars[i];
    return img;
}

struct LaurentCertificate {
    bool member = false;
    /// chart id -> Laurent form; "base" plus "mu_<label>" per adjacent chart
    std::map<std::string, MultiLaurent> charts;
    std::string witness;  // failing chart id when not a member

    static std::string base_chart_id() { return "base"; }
    static std::string adjacent_chart_id(const Seed& s, int k) { return "mu_" + s.labels[k]; }
};

/// Decides membership in the upper bound of s; total on valid input.
inline LaurentCertificate upper_bound_member(const RatFunc& f, const Seed& s) {
    LaurentCertificate cert;
    if (auto l = is_laurent(f)) {
        cert.charts[LaurentCertificate::base_chart_id()] = *l;
    } else {
        cert.witness = LaurentCertificate::base_chart_id();
        return cert;
    }
    for (int k = 0; k < s.m; ++k) {
        RatFunc g = substitute(f, inverse_mutation_images(s, k));
        std::string id = LaurentCertificate::adjacent_chart_id(s, k);
        if (auto l = is_laurent(g)) {
            cert.charts[id] = *l;
        } else {
            cert.witness = id;
            cert.charts.clear();
            return cert;
        }
    }
    cert.member = true;
    return cert;
}

/// A chart of the exchange graph: the seed plus the expressions of the
/// root chart's variables in this chart's coordinates.
struct Chart {
    Seed seed;
    std::map<std::string, RatFunc> root_in_chart;
    MutationSequence path;  // from the root, 0-based directions
};

struct ExchangeGraph {
    std::vector<Chart> charts;
    bool complete = false;  // closed within budget
};

/// BFS over mutations from s, deduplicating by seed_isomorphic (variables
/// included). Returns the full exchange graph when it closes within budget.
/// track_root fills root_in_chart, the inverse expressions membership tests
/// need; skip it when only the chart count matters.
inline ExchangeGraph enumerate_charts(const Seed& s, std::size_t budget = 10000,
                                      bool track_root = true) {
    ExchangeGraph g;
    std::map<std::string, RatFunc> identity;
    for (const auto& l : s.labels) identity[l] = RatFunc::variable(l);
    g.charts.push_back(Chart{s, identity, {}});
    std::deque<std::size_t> frontier{0};
    while (!frontier.empty()) {
        std::size_t at = frontier.front();
        frontier.pop_front();
        for (int k = 0; k < s.m; ++k) {
            Chart cur = g.charts[at];  // copy: push_back below may reallocate
            Seed next = mutate(cur.seed, k);
            bool known = false;
            for (const auto& c : g.charts)
                if (seed_isomorphic(next, c.seed)) {
                    known = true;
                    break;
                }
            if (known) continue;
            if (g.charts.size() >= budget) return g;  // truncated
            Chart nc;
            nc.seed = next;
            nc.path = cur.path;
            nc.path.push_back(k);
            if (track_root) {
                auto inv = inverse_mutation_images(cur.seed, k);
                for (const auto& [root_label, expr] : cur.root_in_chart)
                    nc.root_in_chart[root_label] = substitute(expr, inv);
            }
            g.charts.push_back(std::move(nc));
            frontier.push_back(g.charts.size() - 1);
        }
    }
    g.complete = true;
    return g;
}

/// Laurent test across every chart of an enumerated exchange graph; f is
/// given in the root chart. Returns the first failing chart's path, if any.
inline std::optional<MutationSequence> laurent_everywhere_witness(const RatFunc& f,
                                                                  const ExchangeGraph& g) {
    for (const auto& c : g.charts) {
        RatFunc in_chart = substitute(f, c.root_in_chart);
        if (!is_laurent(in_chart)) return c.path;
    }
    return std::nullopt;
}

}  // namespace cpl
