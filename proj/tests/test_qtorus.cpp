#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "cpl/qtorus.hpp"
#include "cpl/quiver.hpp"
#include "cpl/random_gen.hpp"

using namespace cpl;

namespace {

// two frozen vertices with eps^_12 = 1/2: the d = 2 torus with X1 X2 = q X2 X1
std::shared_ptr<const QTorus> half_torus() {
    Seed s = make_seed(2, 0, {},
                       {{Rational(0), Rational(1, 2)}, {Rational(-1, 2), Rational(0)}},
                       {"x1", "x2"});
    return make_qtorus(s);
}

Seed rank2_seed(long e12) {
    return make_seed(2, 2, {1, 1},
                     {{Rational(0), Rational(e12)}, {Rational(-e12), Rational(0)}}, {"x1", "x2"});
}

}  // namespace

TEST_CASE("normal ordering picks up the cocycle q-power") {
    auto t = half_torus();
    CHECK(t->d == 2);
    auto X1 = QTorusElement::generator(t, 0);
    auto X2 = QTorusElement::generator(t, 1);

    QTorusElement x1x2 = X1 * X2;
    CHECK(x1x2 == QTorusElement::monomial(t, {1, 1}));
    QTorusElement x2x1 = X2 * X1;
    CHECK(x2x1 == QTorusElement::monomial(t, {1, 1}, QScalar::q_power(-1)));
    // hence X1 X2 = q X2 X1
    CHECK(x1x2 == QScalar::q_power(1) * x2x1);

    // identity element
    CHECK(QTorusElement::unit(t) * x1x2 == x1x2);
    CHECK(x1x2 * QTorusElement::unit(t) == x1x2);

    // X^(1,1) * X^(-1,-1) = q^c with c given by the cocycle
    QTorusElement inv = QTorusElement::monomial(t, {-1, -1});
    Rational c = QTorusElement::cocycle_exponent(*t, {1, 1}, {-1, -1});
    CHECK(c == Rational(1));
    CHECK(x1x2 * inv == QTorusElement::unit(t, QScalar::q_power(1)));
}

TEST_CASE("associativity on random triples") {
    Rng rng(31);
    for (int trial = 0; trial < 30; ++trial) {
        Seed s = random_seed(rng, 4, 2, 2);
        auto t = make_qtorus(s);
        auto random_elem = [&] {
            QTorusElement e(t);
            for (int terms = (int)rng.range(1, 3); terms > 0; --terms) {
                QTorusElement::Exponents a(s.n, 0);
                for (int i = 0; i < s.n; ++i) a[i] = rng.range(-2, 2);
                e.add_term(a, QScalar::monomial(Integer(rng.range(-3, 3)), rng.range(-2, 2),
                                                rng.range(1, 2)));
            }
            return e;
        };
        QTorusElement a = random_elem(), b = random_elem(), c = random_elem();
        CHECK((a * b) * c == a * (b * c));
    }
}

TEST_CASE("semiclassical bracket of generators") {
    auto t = half_torus();
    auto X1 = QTorusElement::generator(t, 0);
    auto X2 = QTorusElement::generator(t, 1);

    MultiLaurent br = semiclassical_bracket(X1, X2);
    // 2 eps^_12 x1 x2 = x1 x2
    CHECK(br.to_ratfunc() == RatFunc::variable("x1") * RatFunc::variable("x2"));
    CHECK(semiclassical_bracket(X1, X1).is_zero());
}

TEST_CASE("semiclassical bracket closed form on random monomials") {
    Rng rng(37);
    for (int trial = 0; trial < 100; ++trial) {
        Seed s = random_seed(rng, 4, 2, 2);
        auto t = make_qtorus(s);
        QTorusElement::Exponents a(s.n, 0), b(s.n, 0);
        for (int i = 0; i < s.n; ++i) {
            a[i] = rng.range(-2, 2);
            b[i] = rng.range(-2, 2);
        }
        auto A = QTorusElement::monomial(t, a), B = QTorusElement::monomial(t, b);
        MultiLaurent br = semiclassical_bracket(A, B);

        // oracle: 2 (a^T eps^ b) x^(a+b)
        Rational coeff(0);
        for (int i = 0; i < s.n; ++i)
            for (int j = 0; j < s.n; ++j)
                coeff += Rational(a[i]) * s.eps_hat[i][j] * Rational(b[j]);
        coeff *= 2;
        RatFunc expected{Poly(coeff)};
        for (int i = 0; i < s.n; ++i)
            expected *= RatFunc::variable(s.labels[i]).pow(a[i] + b[i]);
        CHECK(br.to_ratfunc() == expected);

        // and it agrees with the seed's Poisson bracket of the same monomials
        RatFunc fa(1), fb(1);
        for (int i = 0; i < s.n; ++i) {
            fa *= RatFunc::variable(s.labels[i]).pow(a[i]);
            fb *= RatFunc::variable(s.labels[i]).pow(b[i]);
        }
        CHECK(br.to_ratfunc() == poisson_bracket(fa, fb, s));
    }
}

TEST_CASE("quantum mutation image in rank 2") {
    Seed s = rank2_seed(1);
    auto t = make_qtorus(s);
    // eps_21 = -1 < 0: X'_2 = X_2 (1 + q X_1), with q_k = q for d_1 = 1
    ShiftFraction x2p = quantum_mutation_image(t, 0, 1);
    QTorusElement expected = QTorusElement::generator(t, 1) *
                             (QTorusElement::unit(t) +
                              QScalar::q_power(1) * QTorusElement::generator(t, 0));
    CHECK(x2p.numerator() == expected);
    CHECK(x2p.denominators().empty());
    CHECK(x2p.classical_limit() ==
          RatFunc::variable("x2") * (RatFunc(1) + RatFunc::variable("x1")));

    // X'_1 = X_1^{-1}
    ShiftFraction x1p = quantum_mutation_image(t, 0, 0);
    CHECK(x1p.classical_limit() == RatFunc::variable("x1").pow(-1));

    // the eps_ik > 0 side produces denominators
    ShiftFraction y = quantum_mutation_image(t, 1, 0);  // mutate at 2: eps_12 = 1 >= 0
    CHECK(y.denominators().size() == 1);
    CHECK(y.classical_limit() ==
          RatFunc::variable("x1") / (RatFunc(1) + RatFunc::variable("x2").pow(-1)));
}

TEST_CASE("quantum mutation checks pass in rank 2") {
    for (long e : {1L, 2L}) {
        Seed s = rank2_seed(e);
        for (int k = 0; k < 2; ++k) {
            auto rep = quantum_mutate_check(s, k);
            CHECK(rep.passed());
            CHECK(rep.failures.empty());
        }
    }
}

TEST_CASE("shift fraction equality via cross multiplication") {
    Seed s = rank2_seed(1);
    auto t = make_qtorus(s);
    // X'_1 X'_2 = q^{2 eps^'_12} X'_2 X'_1 with eps^'_12 = -1
    ShiftFraction a = quantum_mutation_image(t, 0, 0);
    ShiftFraction b = quantum_mutation_image(t, 0, 1);
    ShiftFraction lhs = a * b;
    ShiftFraction rhs = QScalar::q_power(-2) * (b * a);
    CHECK(lhs == rhs);
    CHECK(lhs != (b * a));
}

TEST_CASE("quantum mutation checks on the rank-1 disk seed") {
    // four generators, weight-2 arrow between the mutable pair: the images
    // carry two denominator factors and the relation checks cross all pairs
    Quiver d1 = punctured_disk_quiver(1);
    Seed s = quiver_to_seed(d1);
    REQUIRE(s.n == 4);
    for (int k = 0; k < s.m; ++k) {
        auto rep = quantum_mutate_check(s, k);
        CHECK(rep.passed());
        CHECK(rep.checked.size() == 4 + 12);  // limits + ordered pairs
    }
}

TEST_CASE("commutators in the torus are divisible by q^(1/d) - 1") {
    Rng rng(41);
    for (int trial = 0; trial < 40; ++trial) {
        Seed s = random_seed(rng, 3, 2, 2);
        auto t = make_qtorus(s);
        QTorusElement::Exponents a(s.n, 0), b(s.n, 0);
        for (int i = 0; i < s.n; ++i) {
            a[i] = rng.range(-2, 2);
            b[i] = rng.range(-2, 2);
        }
        auto A = QTorusElement::monomial(t, a), B = QTorusElement::monomial(t, b);
        CHECK_NOTHROW(semiclassical_bracket(A, B));
    }
}
