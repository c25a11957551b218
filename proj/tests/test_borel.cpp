#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "cpl/borel.hpp"
#include "cpl/random_gen.hpp"

using namespace cpl;

namespace {

using RF = RatFunc;
using MR = Matrix<Rational>;
using MF = Matrix<RF>;

RF sym(const std::string& s) { return RF::variable(s); }
RF c(long v) { return RF(v); }

MF mat3(std::initializer_list<std::initializer_list<RF>> rows) {
    std::vector<std::vector<RF>> r;
    for (auto& row : rows) r.emplace_back(row);
    return MF::from_rows(r);
}

/// The symbolic PGL3 pair (u1 h, h^{-1} u2) on the eight symbols.
BorelPair<RF> pgl3_symbolic_pair() {
    RF e1 = sym("e1"), e2 = sym("e2"), e3 = sym("e3");
    RF f1 = sym("f1"), f2 = sym("f2"), f3 = sym("f3");
    RF k1 = sym("k1"), k2 = sym("k2");
    MF u1 = mat3({{c(1), e1, e3}, {c(0), c(1), e2}, {c(0), c(0), c(1)}});
    MF h = mat3({{k1 * k2, c(0), c(0)}, {c(0), k2, c(0)}, {c(0), c(0), c(1)}});
    MF hinv = mat3({{(k1 * k2).inverse(), c(0), c(0)},
                    {c(0), k2.inverse(), c(0)},
                    {c(0), c(0), c(1)}});
    MF u2 = mat3({{c(1), c(0), c(0)}, {f1, c(1), c(0)}, {f3, f2, c(1)}});
    return make_borel_pair(GroupMode::PGL, u1 * h, hinv * u2);
}

}  // namespace

TEST_CASE("gauss decomposition: examples and the open-cell boundary") {
    MR g = MR::from_rows({{rat(2), rat(1)}, {rat(1), rat(1)}});
    auto parts = gauss_decompose(g);
    REQUIRE(parts.has_value());
    CHECK(parts->plus == MR::from_rows({{rat(1), rat(1)}, {rat(0), rat(1)}}));
    CHECK(parts->zero == MR::from_rows({{rat(1), rat(0)}, {rat(0), rat(1)}}));
    CHECK(parts->minus == MR::from_rows({{rat(1), rat(0)}, {rat(1), rat(1)}}));

    CHECK(gauss_decompose(MR::identity(3)).has_value());

    MR rot = MR::from_rows({{rat(0), rat(1)}, {rat(-1), rat(0)}});
    CHECK(!gauss_decompose(rot).has_value());
}

TEST_CASE("gauss decomposition round trips on random open-cell matrices") {
    Rng rng(51);
    int done = 0;
    while (done < 200) {
        MR g = random_sl(rng, 3);
        auto parts = gauss_decompose(g);
        if (!parts) continue;  // not in the open cell
        CHECK(parts->plus * parts->zero * parts->minus == g);
        CHECK(parts->plus.is_upper_triangular());
        CHECK(parts->zero.is_diagonal());
        CHECK(parts->minus.is_lower_triangular());
        for (int i = 0; i < 3; ++i) {
            CHECK(parts->plus(i, i) == rat(1));
            CHECK(parts->minus(i, i) == rat(1));
        }
        ++done;
    }
}

TEST_CASE("pinning characters and simple roots") {
    // chi(1, [[a,b],[0,1/a]]) = ab
    MF b1 = MF::from_rows(
        {{sym("a"), sym("b")}, {c(0), sym("a").inverse()}});
    CHECK(chi(1, b1) == sym("a") * sym("b"));

    // chi^-_i (y_j(v)) = delta_ij v on unipotent one-parameter subgroups
    for (int j = 1; j <= 2; ++j) {
        MR y = MR::identity(3);
        y(j, j - 1) = rat(5);
        for (int i = 1; i <= 2; ++i)
            CHECK(chi_minus(i, y) == (i == j ? rat(5) : rat(0)));
    }

    MR h = MR::from_rows({{rat(2), rat(0)}, {rat(0), rat(1, 2)}});
    CHECK(simple_root(1, h) == rat(4));

    // gamma_i is a homomorphism
    Rng rng(53);
    for (int t = 0; t < 20; ++t) {
        MR A(2, 2), B(2, 2);
        for (int i = 0; i < 2; ++i)
            for (int j = 0; j < 2; ++j) {
                A(i, j) = rng.rational(3, 2);
                B(i, j) = rng.rational(3, 2);
            }
        int i = (int)rng.range(1, 2);
        CHECK(gamma_embed(i, 3, A * B) == gamma_embed(i, 3, A) * gamma_embed(i, 3, B));
    }
}

TEST_CASE("outer monodromy and the dual group fiber") {
    // the symbolic pair is in the dual group by construction
    auto p = pgl3_symbolic_pair();
    CHECK(tau(p) == Matrix<RF>::identity(3));
    CHECK(in_dual_group(p));

    // (b, b) with diagonal b != e: tau = (diag b)^2 != e in SL mode
    MR b = MR::from_rows({{rat(2), rat(0)}, {rat(0), rat(1, 2)}});
    auto q = make_borel_pair(GroupMode::SL, b, b);
    CHECK(tau(q) == MR::from_rows({{rat(4), rat(0)}, {rat(0), rat(1, 4)}}));
    CHECK(!in_dual_group(q));

    // SL2 symbolic pair: tau = diag(ad, 1/(ad))
    MF b1 = MF::from_rows({{sym("a"), sym("b")}, {c(0), sym("a").inverse()}});
    MF b2 = MF::from_rows({{sym("d"), c(0)}, {sym("c"), sym("d").inverse()}});
    BorelPair<RF> r{{GroupMode::SL, b1}, {GroupMode::SL, b2}};
    MF t = tau(r);
    CHECK(t(0, 0) == sym("a") * sym("d"));
    CHECK(t(1, 1) == (sym("a") * sym("d")).inverse());
}

TEST_CASE("sigma_1 and sigma_2 reproduce the printed PGL3 matrices") {
    RF e1 = sym("e1"), e2 = sym("e2"), e3 = sym("e3");
    RF f1 = sym("f1"), f2 = sym("f2"), f3 = sym("f3");
    RF k1 = sym("k1"), k2 = sym("k2");
    auto p = pgl3_symbolic_pair();

    // sigma_1
    {
        auto r = braid_sigma(1, p);
        MF u1p = mat3({{c(1), f1 / k1, e2},
                       {c(0), c(1), e1 * e2 - e3},
                       {c(0), c(0), c(1)}});
        MF hp = mat3({{k2, c(0), c(0)}, {c(0), k1 * k2, c(0)}, {c(0), c(0), c(1)}});
        MF hpinv = mat3({{k2.inverse(), c(0), c(0)},
                         {c(0), (k1 * k2).inverse(), c(0)},
                         {c(0), c(0), c(1)}});
        MF u2p = mat3({{c(1), c(0), c(0)},
                       {e1 * k1, c(1), c(0)},
                       {f2, f1 * f2 - f3, c(1)}});
        CHECK(r.b1.a == u1p * hp);
        CHECK(r.b2.a == hpinv * u2p);
    }

    // sigma_2
    {
        auto r = braid_sigma(2, p);
        MF u1pp = mat3({{c(1), e3, e3 * f2 / k2 - e1},
                        {c(0), c(1), f2 / k2},
                        {c(0), c(0), c(1)}});
        MF hpp = mat3({{k1, c(0), c(0)}, {c(0), k2.inverse(), c(0)}, {c(0), c(0), c(1)}});
        MF hppinv = mat3({{k1.inverse(), c(0), c(0)}, {c(0), k2, c(0)}, {c(0), c(0), c(1)}});
        MF u2pp = mat3({{c(1), c(0), c(0)},
                        {f3, c(1), c(0)},
                        {e2 * k2 * f3 - f1, e2 * k2, c(1)}});
        CHECK(r.b1.a == u1pp * hpp);
        CHECK(r.b2.a == hppinv * u2pp);
    }
}

TEST_CASE("SL2 braid twist: derived closed forms") {
    RF a = sym("a"), b = sym("b"), cc = sym("c"), d = sym("d");
    MF b1 = MF::from_rows({{a, b}, {c(0), a.inverse()}});
    MF b2 = MF::from_rows({{d, c(0)}, {cc, d.inverse()}});
    BorelPair<RF> p{{GroupMode::SL, b1}, {GroupMode::SL, b2}};

    auto r = braid_sigma(1, p);
    CHECK(r.b1.a == MF::from_rows({{a.inverse(), a.inverse() * cc * d}, {c(0), a}}));
    CHECK(r.b2.a == MF::from_rows({{d.inverse(), c(0)}, {a * b * d.inverse(), d}}));

    // twice: frozen symbolic composition
    auto r2 = braid_sigma(1, r);
    CHECK(r2.b1.a ==
          MF::from_rows({{a, a * a * b / (d * d)}, {c(0), a.inverse()}}));
    CHECK(r2.b2.a ==
          MF::from_rows({{d, c(0)}, {cc * d * d / (a * a), d.inverse()}}));

    // empty word is the identity
    auto same = braid_word({}, p);
    CHECK(same.b1.a == p.b1.a);
    CHECK(same.b2.a == p.b2.a);
}

TEST_CASE("braid relation sigma1 sigma2 sigma1 = sigma2 sigma1 sigma2") {
    // symbolically on the printed pair
    auto p = pgl3_symbolic_pair();
    auto lhs = braid_word({1, 2, 1}, p);
    auto rhs = braid_word({2, 1, 2}, p);
    CHECK(lhs.b1.a == rhs.b1.a);
    CHECK(lhs.b2.a == rhs.b2.a);

    // and on random exact rational PGL3 pairs
    Rng rng(57);
    for (int t = 0; t < 25; ++t) {
        auto q = random_borel_pair(rng, GroupMode::PGL, 3);
        auto l = braid_word({1, 2, 1}, q);
        auto r = braid_word({2, 1, 2}, q);
        CHECK(l.b1.a == r.b1.a);
        CHECK(l.b2.a == r.b2.a);
    }
}

TEST_CASE("tau intertwines sigma_i with the simple transposition") {
    Rng rng(59);
    auto swapped = [](MR t, int i) {
        std::swap(t(i - 1, i - 1), t(i, i));
        return t;
    };
    for (int trial = 0; trial < 40; ++trial) {
        for (auto [mode, n] : {std::pair{GroupMode::SL, 2}, {GroupMode::SL, 3},
                               {GroupMode::PGL, 3}}) {
            auto p = random_borel_pair(rng, mode, n);
            int i = (int)rng.range(1, n - 1);
            MR lhs = tau(braid_sigma(i, p));
            MR rhs = swapped(tau(p), i);
            if (mode == GroupMode::PGL) rhs = pgl_normalize(rhs);
            CHECK(lhs == rhs);
        }
    }
}

TEST_CASE("sigma_i preserves the dual group") {
    Rng rng(61);
    for (int trial = 0; trial < 40; ++trial) {
        for (auto [mode, n] : {std::pair{GroupMode::SL, 2}, {GroupMode::PGL, 3}}) {
            auto p = random_dual_pair(rng, mode, n);
            REQUIRE(in_dual_group(p));
            int i = (int)rng.range(1, n - 1);
            CHECK(in_dual_group(braid_sigma(i, p)));
        }
    }
}

TEST_CASE("regularity classifier") {
    CHECK(!is_regular(MR::identity(2)).regular);
    CHECK(is_regular(MR::identity(2)).centralizer_dim == 3);

    MR jordan = MR::from_rows({{rat(1), rat(1)}, {rat(0), rat(1)}});
    CHECK(is_regular(jordan).regular);
    CHECK(is_regular(jordan).centralizer_dim == 1);

    MR split = MR::from_rows({{rat(2), rat(0)}, {rat(0), rat(1, 2)}});
    CHECK(is_regular(split).regular);
    CHECK(is_regular(split).centralizer_dim == 1);

    // agreement with the minimal-polynomial criterion on random 4x4 matrices
    Rng rng(63);
    for (int t = 0; t < 40; ++t) {
        MR g(4, 4);
        for (int i = 0; i < 4; ++i)
            for (int j = 0; j < 4; ++j) g(i, j) = rng.rational(3);
        CHECK(is_regular(g).regular == (minimal_polynomial_degree(g) == 4));
    }
}

TEST_CASE("flag membership") {
    // u = e: direct triangularity of b1 b2^{-1}
    MR b1 = MR::from_rows({{rat(2), rat(1)}, {rat(0), rat(1, 2)}});
    MR id2 = MR::identity(2);
    auto upper_pair = make_borel_pair(GroupMode::SL, b1, id2);
    CHECK(flag_membership(upper_pair, id2));

    MR b2 = MR::from_rows({{rat(1), rat(0)}, {rat(3), rat(1)}});
    auto p = make_borel_pair(GroupMode::SL, MR::from_rows({{rat(2), rat(0)}, {rat(0), rat(1, 2)}}),
                             b2);
    CHECK(!flag_membership(p, id2));
    // the monodromy diag(2,1/2) * y(-3) is lower triangular with distinct
    // eigenvalues; conjugating by its eigenvector flag makes it upper
    MR u = MR::from_rows({{rat(1), rat(0)}, {rat(-1), rat(1)}});
    CHECK(flag_membership(p, u));

    CHECK_THROWS(flag_membership(p, MR(2, 2)));  // singular flag

    // the symbolic dual-group pair has unipotent lower parts: with u = e the
    // monodromy b1 b2^{-1} is genuinely non-triangular
    auto sp = pgl3_symbolic_pair();
    CHECK(!flag_membership(sp, Matrix<RF>::identity(3)));
}

TEST_CASE("manin pairing: isotropy and nondegeneracy") {
    Rng rng(65);
    // p_+ is isotropic identically
    for (int t = 0; t < 30; ++t) {
        MR x = random_traceless(rng, 2), x2 = random_traceless(rng, 2);
        CHECK(in_p_plus(x, x));
        CHECK(double_pairing(x, x, x2, x2) == rat(0));
    }
    // random p_- pairs in sl_3 pair to zero
    for (int t = 0; t < 100; ++t) {
        auto member = [&] {
            MR x(3, 3), y(3, 3);
            for (int i = 0; i < 3; ++i)
                for (int j = 0; j < 3; ++j) {
                    if (i < j) x(i, j) = rng.rational(4, 2);
                    if (i > j) y(i, j) = rng.rational(4, 2);
                }
            Rational d0 = rng.rational(3, 2), d1 = rng.rational(3, 2);
            x(0, 0) = d0;
            x(1, 1) = d1;
            x(2, 2) = -d0 - d1;
            for (int i = 0; i < 3; ++i) y(i, i) = -x(i, i);
            return std::pair{x, y};
        };
        auto [x, y] = member();
        auto [x2, y2] = member();
        REQUIRE(in_p_minus(x, y));
        CHECK(double_pairing(x, y, x2, y2) == rat(0));
    }
    // Gram nonsingularity on sl_2 + sl_2 and sl_3 + sl_3
    CHECK(determinant(manin_gram(2)) != rat(0));
    CHECK(determinant(manin_gram(3)) != rat(0));
}

TEST_CASE("group element validation") {
    CHECK_THROWS(make_group_elem(GroupMode::SL,
                                 MR::from_rows({{rat(2), rat(0)}, {rat(0), rat(2)}})));
    auto g = make_group_elem(GroupMode::PGL,
                             MR::from_rows({{rat(2), rat(0)}, {rat(0), rat(2)}}));
    CHECK(g.a == MR::identity(2));  // normalized representative
    CHECK_THROWS(braid_sigma(3, pgl3_symbolic_pair()));  // index out of range
}
