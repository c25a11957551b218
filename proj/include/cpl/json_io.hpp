// JSON schemas for the CLI: seeds, quivers, Borel pairs, certificates.
// Arbitrary-precision values are serialized as strings throughout; output
// uses ordered keys so runs are byte-for-byte reproducible.
#pragma once

#include <json.hpp>

#include <optional>
#include <set>
#include <string>
#include <vector>

#include "cpl/borel.hpp"
#include "cpl/expr_parse.hpp"
#include "cpl/laurent.hpp"
#include "cpl/qscalar.hpp"
#include "cpl/quiver.hpp"
#include "cpl/seed.hpp"
#include "cpl/upper_bound.hpp"

namespace cpl {

using Json = nlohmann::ordered_json;

struct SchemaError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

namespace detail {

inline Rational rat_field(const Json& j, const std::string& where) {
    std::optional<Rational> r;
    if (j.is_string()) r = rat_parse(j.get<std::string>());
    if (j.is_number_integer()) r = Rational(j.get<long>());
    if (!r) throw SchemaError("expected a rational at " + where);
    return *r;
}

}  // namespace detail

// ---- seeds -----------------------------------------------------------

inline Json seed_to_json(const Seed& s, bool with_variables = true) {
    Json j;
    j["n"] = s.n;
    j["m"] = s.m;
    j["multipliers"] = s.multipliers;
    Json eps = Json::array();
    for (int i = 0; i < s.n; ++i) {
        Json row = Json::array();
        for (int k = 0; k < s.n; ++k) row.push_back(rat_str(s.eps_hat[i][k]));
        eps.push_back(row);
    }
    j["epsilon_hat"] = eps;
    j["labels"] = s.labels;
    Json frozen = Json::array();
    for (int i = s.m; i < s.n; ++i) frozen.push_back(s.labels[i]);
    j["frozen"] = frozen;
    if (with_variables) {
        Json vars = Json::object();
        for (int i = 0; i < s.n; ++i) vars[s.labels[i]] = s.vars[i].str();
        j["variables"] = vars;
    }
    return j;
}

/// Labels must be ordered mutable-first; "frozen" must equal the trailing
/// n - m labels. Variables are ignored on input (identity chart).
inline Seed seed_from_json(const Json& j) {
    try {
        int n = j.at("n").get<int>();
        int m = j.at("m").get<int>();
        std::vector<long> mult = j.at("multipliers").get<std::vector<long>>();
        std::vector<std::string> labels = j.at("labels").get<std::vector<std::string>>();
        if ((int)labels.size() != n) throw SchemaError("labels must have n entries");
        const Json& eps_j = j.at("epsilon_hat");
        if ((int)eps_j.size() != n) throw SchemaError("epsilon_hat must be n x n");
        std::vector<std::vector<Rational>> eps(n, std::vector<Rational>(n));
        for (int i = 0; i < n; ++i) {
            if ((int)eps_j[i].size() != n) throw SchemaError("epsilon_hat must be n x n");
            for (int k = 0; k < n; ++k) eps[i][k] = detail::rat_field(eps_j[i][k], "epsilon_hat");
        }
        std::set<std::string> frozen;
        if (j.contains("frozen"))
            frozen = j.at("frozen").get<std::set<std::string>>();
        for (int i = 0; i < n; ++i) {
            bool should_be_frozen = i >= m;
            if (frozen.count(labels[i]) != (should_be_frozen ? 1u : 0u))
                throw SchemaError(
                    "labels must be ordered mutable-first and frozen must list the rest");
        }
        return make_seed(n, m, std::move(mult), std::move(eps), std::move(labels));
    } catch (const Json::exception& e) {
        throw SchemaError(std::string("seed schema: ") + e.what());
    } catch (const std::domain_error& e) {
        throw SchemaError(std::string("seed schema: ") + e.what());
    }
}

// ---- quivers ---------------------------------------------------------

inline Json quiver_to_json(const Quiver& q) {
    Json j;
    Json verts = Json::array();
    for (const auto& v : q.vertices()) verts.push_back({{"label", v.label}, {"frozen", v.frozen}});
    j["vertices"] = verts;
    Json arrows = Json::array();
    for (const auto& [from, to, w] : q.arrow_list())
        arrows.push_back({{"from", from}, {"to", to}, {"weight", rat_str(w)}});
    j["arrows"] = arrows;
    return j;
}

inline Quiver quiver_from_json(const Json& j) {
    try {
        Quiver q;
        for (const auto& v : j.at("vertices"))
            q.add_vertex(v.at("label").get<std::string>(), v.at("frozen").get<bool>());
        for (const auto& a : j.at("arrows")) {
            Rational w = detail::rat_field(a.at("weight"), "arrow weight");
            q.add_weight(a.at("from").get<std::string>(), a.at("to").get<std::string>(), w);
        }
        q.validate();
        return q;
    } catch (const Json::exception& e) {
        throw SchemaError(std::string("quiver schema: ") + e.what());
    } catch (const std::domain_error& e) {
        throw SchemaError(std::string("quiver schema: ") + e.what());
    }
}

// ---- Laurent certificates ---------------------------------------------

inline Json certificate_to_json(const LaurentCertificate& cert) {
    Json j;
    j["member"] = cert.member;
    Json charts = Json::object();
    for (const auto& [id, laurent] : cert.charts) charts[id] = laurent.str();
    j["charts"] = charts;
    if (!cert.member) j["witness"] = cert.witness;
    return j;
}

// ---- q-scalars --------------------------------------------------------

inline Json qscalar_to_json(const QScalar& s) {
    Json terms = Json::object();
    for (const auto& [k, c] : s.terms()) terms[std::to_string(k)] = int_str(c);
    return Json{{"d", s.denominator_degree()}, {"terms", terms}};
}

// ---- Borel pairs -------------------------------------------------------

struct PairInput {
    GroupMode mode = GroupMode::SL;
    int n = 0;
    std::set<std::string> symbols;
    BorelPair<RatFunc> pair{GroupElem<RatFunc>{}, GroupElem<RatFunc>{}};
};

inline Json matrix_to_json(const Matrix<RatFunc>& m) {
    Json rows = Json::array();
    for (int i = 0; i < m.rows(); ++i) {
        Json row = Json::array();
        for (int j = 0; j < m.cols(); ++j) row.push_back(m(i, j).str());
        rows.push_back(row);
    }
    return rows;
}

inline Matrix<RatFunc> matrix_from_json(const Json& j, int n,
                                        const std::set<std::string>* symbols) {
    if ((int)j.size() != n) throw SchemaError("matrix must be n x n");
    std::vector<std::vector<RatFunc>> rows;
    for (const auto& row : j) {
        if ((int)row.size() != n) throw SchemaError("matrix must be n x n");
        std::vector<RatFunc> r;
        for (const auto& cell : row) {
            if (cell.is_number_integer())
                r.push_back(RatFunc(cell.get<long>()));
            else if (cell.is_string())
                r.push_back(parse_ratfunc(cell.get<std::string>(), symbols));
            else
                throw SchemaError("matrix entries must be strings or integers");
        }
        rows.push_back(std::move(r));
    }
    return Matrix<RatFunc>::from_rows(std::move(rows));
}

inline PairInput pair_from_json(const Json& j) {
    try {
        PairInput in;
        std::string mode = j.at("mode").get<std::string>();
        if (mode == "sl")
            in.mode = GroupMode::SL;
        else if (mode == "pgl")
            in.mode = GroupMode::PGL;
        else
            throw SchemaError("mode must be \"sl\" or \"pgl\"");
        in.n = j.at("n").get<int>();
        if (in.n < 2) throw SchemaError("n must be at least 2");
        if (j.contains("symbols"))
            in.symbols = j.at("symbols").get<std::set<std::string>>();
        Matrix<RatFunc> b1 = matrix_from_json(j.at("b1"), in.n, &in.symbols);
        Matrix<RatFunc> b2 = matrix_from_json(j.at("b2"), in.n, &in.symbols);
        in.pair = make_borel_pair(in.mode, std::move(b1), std::move(b2));
        return in;
    } catch (const Json::exception& e) {
        throw SchemaError(std::string("pair schema: ") + e.what());
    } catch (const ParseError& e) {
        throw SchemaError(std::string("pair schema: ") + e.what());
    } catch (const std::domain_error& e) {
        throw SchemaError(std::string("pair schema: ") + e.what());
    }
}

inline Json pair_to_json(const BorelPair<RatFunc>& p, const std::set<std::string>& symbols) {
    Json j;
    j["mode"] = p.b1.mode == GroupMode::SL ? "sl" : "pgl";
    j["n"] = p.b1.size();
    j["symbols"] = symbols;
    j["b1"] = matrix_to_json(p.b1.a);
    j["b2"] = matrix_to_json(p.b2.a);
    return j;
}

}  // namespace cpl
