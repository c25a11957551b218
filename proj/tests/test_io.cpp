#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "cpl/json_io.hpp"
#include "cpl/random_gen.hpp"

using namespace cpl;

TEST_CASE("ratfunc expression parsing") {
    RatFunc x = RatFunc::variable("x1"), y = RatFunc::variable("x2");
    CHECK(parse_ratfunc("x1^2 - 1") == x * x - RatFunc(1));
    CHECK(parse_ratfunc("(x1^2-1)/x1") == (x * x - RatFunc(1)) / x);
    CHECK(parse_ratfunc("x2*(1+x1)") == y * (RatFunc(1) + x));
    CHECK(parse_ratfunc("x1^-2") == x.pow(-2));
    CHECK(parse_ratfunc("x1^(-2)") == x.pow(-2));
    CHECK(parse_ratfunc("-x1 + 2") == RatFunc(2) - x);
    CHECK(parse_ratfunc("3/4*x1") == RatFunc{Poly(rat(3, 4))} * x);
    CHECK(parse_ratfunc("2^3") == RatFunc(8));

    std::set<std::string> allowed{"x1"};
    CHECK_NOTHROW(parse_ratfunc("x1 + 1", &allowed));
    CHECK_THROWS_AS(parse_ratfunc("x2", &allowed), ParseError);
    CHECK_THROWS_AS(parse_ratfunc("x1 +", nullptr), ParseError);
    CHECK_THROWS_AS(parse_ratfunc("x1 x2", nullptr), ParseError);
    CHECK_THROWS_AS(parse_ratfunc("1/(x1 - x1)", nullptr), ParseError);
}

TEST_CASE("uq expression parsing") {
    CHECK(parse_uq("E*F") == UqElement::E() * UqElement::F());
    CHECK(parse_uq("E*F*K^-1") ==
          UqElement::E() * UqElement::F() * UqElement::K(-1));
    CHECK(parse_uq("q^2 + q^-1") ==
          UqElement::unit(QScalar::q_power(2) + QScalar::q_power(-1)));
    CHECK(parse_uq("q^(1/2)") == UqElement::unit(QScalar::q_power(1, 2)));
    CHECK(parse_uq("2*E^2 - q*K") ==
          QScalar(2) * (UqElement::E() * UqElement::E()) -
              QScalar::q_power(1) * UqElement::K());
    CHECK(parse_uq("(K^-1)^2") == UqElement::K(-2));
    CHECK_THROWS_AS(parse_uq("E^-1"), ParseError);
    CHECK_THROWS_AS(parse_uq("q^(1/3)"), ParseError);
    CHECK_THROWS_AS(parse_uq("X"), ParseError);
}

TEST_CASE("seed json round trip and validation") {
    Json j = Json::parse(R"({
        "n": 2, "m": 1, "multipliers": [1],
        "epsilon_hat": [["0", "1"], ["-1", "0"]],
        "labels": ["x1", "x2"], "frozen": ["x2"]
    })");
    Seed s = seed_from_json(j);
    CHECK(s.n == 2);
    CHECK(s.m == 1);
    CHECK(s.eps_hat[0][1] == rat(1));
    CHECK(s.vars[0] == RatFunc::variable("x1"));

    Json back = seed_to_json(s);
    Seed s2 = seed_from_json(back);
    CHECK(seeds_equal(s, s2));

    // mutable labels must come first
    Json bad = j;
    bad["frozen"] = Json::array({"x1"});
    CHECK_THROWS_AS(seed_from_json(bad), SchemaError);

    // skew-symmetry violations are schema errors
    Json bad2 = j;
    bad2["epsilon_hat"][0][1] = "2";
    CHECK_THROWS_AS(seed_from_json(bad2), SchemaError);

    // integer entries are accepted alongside strings
    Json mixed = j;
    mixed["epsilon_hat"] = Json::array({Json::array({0, 1}), Json::array({-1, 0})});
    CHECK(seed_from_json(mixed).eps_hat[0][1] == rat(1));
}

TEST_CASE("seed json round trips on random seeds") {
    Rng rng(73);
    for (int t = 0; t < 50; ++t) {
        Seed s = random_seed(rng, 5, 3, 3);
        Seed back = seed_from_json(seed_to_json(s));
        CHECK(seeds_equal(s, back));
    }
}

TEST_CASE("quiver json round trip") {
    Quiver q = triangle_quiver(2);
    Json j = quiver_to_json(q);
    Quiver q2 = quiver_from_json(j);
    CHECK(q2.size() == q.size());
    CHECK(q2.arrow_list() == q.arrow_list());
    for (const auto& v : q.vertices())
        CHECK(q2.vertices()[q2.index_of(v.label)].frozen == v.frozen);

    Json bad = j;
    bad["arrows"][0]["weight"] = "1/3";
    CHECK_THROWS_AS(quiver_from_json(bad), SchemaError);
}

TEST_CASE("pair json round trip, symbolic entries") {
    Json j = Json::parse(R"({
        "mode": "sl", "n": 2, "symbols": ["a", "b", "c", "d"],
        "b1": [["a", "b"], ["0", "1/a"]],
        "b2": [["d", "0"], ["c", "1/d"]]
    })");
    PairInput in = pair_from_json(j);
    CHECK(in.pair.b1.a(0, 1) == RatFunc::variable("b"));
    CHECK(in.pair.b2.a(1, 1) == RatFunc::variable("d").inverse());

    Json back = pair_to_json(in.pair, in.symbols);
    PairInput in2 = pair_from_json(back);
    CHECK(in2.pair.b1.a == in.pair.b1.a);
    CHECK(in2.pair.b2.a == in.pair.b2.a);

    // undeclared symbol
    Json bad = j;
    bad["b1"][0][0] = "z";
    CHECK_THROWS_AS(pair_from_json(bad), SchemaError);

    // non-triangular input
    Json bad2 = j;
    bad2["b1"][1][0] = "1";
    CHECK_THROWS_AS(pair_from_json(bad2), SchemaError);

    // SL determinant check: b1 upper triangular with det != 1
    Json bad3 = j;
    bad3["b1"][1][1] = "1";
    CHECK_THROWS_AS(pair_from_json(bad3), SchemaError);
}

TEST_CASE("laurent certificate json") {
    Seed s = seed_from_json(Json::parse(R"({
        "n": 2, "m": 1, "multipliers": [1],
        "epsilon_hat": [["0", "1"], ["-1", "0"]],
        "labels": ["x1", "x2"], "frozen": ["x2"]
    })"));
    auto cert = upper_bound_member(parse_ratfunc("x2*(1+x1)"), s);
    Json j = certificate_to_json(cert);
    CHECK(j["member"] == true);
    CHECK(j["charts"].contains("base"));
    CHECK(j["charts"].contains("mu_x1"));
    CHECK(j["charts"]["mu_x1"] == "x2");

    auto bad = upper_bound_member(parse_ratfunc("1/(1+x1)"), s);
    Json jb = certificate_to_json(bad);
    CHECK(jb["member"] == false);
    CHECK(jb["witness"] == "base");
}

TEST_CASE("qscalar json") {
    QScalar s = QScalar::q_power(1, 2) - QScalar(3);
    Json j = qscalar_to_json(s);
    CHECK(j["d"] == 2);
    CHECK(j["terms"]["1"] == "1");
    CHECK(j["terms"]["0"] == "-3");
}
