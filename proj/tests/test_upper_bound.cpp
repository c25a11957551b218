#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "cpl/upper_bound.hpp"

using namespace cpl;

namespace {

RatFunc X(const std::string& s) { return RatFunc::variable(s); }

Seed a1_seed() { return make_seed(1, 1, {1}, {{Rational(0)}}, {"x1"}); }

Seed a1_frozen_seed() {
    return make_seed(2, 1, {1},
                     {{Rational(0), Rational(1)}, {Rational(-1), Rational(0)}}, {"x1", "x2"});
}

Seed a2_seed() {
    return make_seed(2, 2, {1, 1},
                     {{Rational(0), Rational(1)}, {Rational(-1), Rational(0)}}, {"x1", "x2"});
}

}  // namespace

TEST_CASE("membership certificates on the worked examples") {
    RatFunc x1 = X("x1"), x2 = X("x2");

    // A1 + frozen vertex: x2(1+x1) is the adjacent chart's own variable
    Seed s = a1_frozen_seed();
    auto cert = upper_bound_member(x2 * (RatFunc(1) + x1), s);
    CHECK(cert.member);
    auto adj = cert.charts.at("mu_x1");
    CHECK(adj.to_ratfunc() == x2);  // f = x2' in the adjacent chart

    // A1: 1/(1+x1) fails already in the base chart
    auto cert2 = upper_bound_member(RatFunc(1) / (RatFunc(1) + x1), a1_seed());
    CHECK(!cert2.member);
    CHECK(cert2.witness == "base");

    // A2: (1+x2)/x1 is Laurent in the base chart but not after mu_1
    auto cert3 = upper_bound_member((RatFunc(1) + x2) / x1, a2_seed());
    CHECK(!cert3.member);
    CHECK(cert3.witness == "mu_x1");
}

TEST_CASE("certificates substitute back to the original element") {
    Seed s = a2_seed();
    RatFunc f = X("x2") * (RatFunc(1) + X("x1"));
    auto cert = upper_bound_member(f, s);
    REQUIRE(cert.member);
    for (int k = 0; k < s.m; ++k) {
        // forward images of the adjacent chart's variables in the base chart
        Seed t = mutate(s, k);
        std::map<std::string, RatFunc> fwd;
        for (int i = 0; i < s.n; ++i) fwd[s.labels[i]] = t.vars[i];
        RatFunc back = substitute(cert.charts.at("mu_" + s.labels[k]).to_ratfunc(), fwd);
        CHECK(back == f);
    }
    CHECK(cert.charts.at("base").to_ratfunc() == f);
}

TEST_CASE("exchange graph sizes: A1, A1+frozen, A2, frozen-only") {
    CHECK(enumerate_charts(a1_seed()).charts.size() == 2);
    CHECK(enumerate_charts(a1_seed()).complete);

    CHECK(enumerate_charts(a1_frozen_seed()).charts.size() == 2);

    auto g = enumerate_charts(a2_seed());
    CHECK(g.charts.size() == 5);  // the pentagon
    CHECK(g.complete);

    Seed frozen_only = make_seed(1, 0, {}, {{Rational(0)}}, {"x1"});
    CHECK(enumerate_charts(frozen_only).charts.size() == 1);
}

TEST_CASE("budget truncates an infinite exchange graph") {
    // Kronecker-type seed: infinitely many charts; chart expressions grow
    // fast, so the count-only mode skips the inverse-expression tracking
    Seed s = make_seed(2, 2, {1, 1},
                       {{Rational(0), Rational(2)}, {Rational(-2), Rational(0)}}, {"x1", "x2"});
    auto g = enumerate_charts(s, 12, false);
    CHECK(g.charts.size() == 12);
    CHECK(!g.complete);
}

TEST_CASE("upper bound equals Laurent-everywhere on closed graphs") {
    // the desk-scale instance of O(Sigma) = U(Sigma)
    RatFunc x1 = X("x1"), x2 = X("x2");
    RatFunc one(1);

    std::vector<Seed> seeds{a1_seed(), a1_frozen_seed(), a2_seed()};
    for (const auto& s : seeds) {
        auto graph = enumerate_charts(s);
        REQUIRE(graph.complete);

        std::vector<RatFunc> battery;
        // monomials and simple Laurent members
        battery.push_back(one);
        battery.push_back(x1);
        battery.push_back(x1.pow(-1));
        battery.push_back(x1 + x1.pow(-1));
        battery.push_back(x1.pow(3));
        // denominators that are not monomials
        battery.push_back(one / (one + x1));
        battery.push_back(x1 / (one + x1));
        battery.push_back((one - x1) / (one + x1));
        battery.push_back(one / (one + x1 + x1 * x1));
        if (s.n >= 2) {
            battery.push_back(x2);
            battery.push_back(x1 * x2.pow(-2));
            battery.push_back(x2 * (one + x1));
            battery.push_back(x2 * (one + x1) * (one + x1));
            battery.push_back((one + x2) / x1);
            battery.push_back((one + x1) / x2);
            battery.push_back(x2.pow(-1) * (one + x1).pow(2));
            battery.push_back((one + x1 + x2) / (x1 * x2));
            battery.push_back((one + x2 + x1 * x2) / x1);
            battery.push_back(x1 * x2 + x2.pow(2));
            battery.push_back((one + x2) / (x1 + x2));
        }
        REQUIRE(battery.size() >= (s.n >= 2 ? 20u : 9u));

        for (const auto& f : battery) {
            bool in_upper = upper_bound_member(f, s).member;
            bool everywhere = !laurent_everywhere_witness(f, graph).has_value();
            CHECK(in_upper == everywhere);
        }
    }
}
