// Acceptance suite: runs every verification criterion at its stated
// tolerance (all exact) and prints one pass/fail line per criterion.
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdio>

#include "cpl/verify.hpp"

using namespace cpl;

namespace {

CheckResult run_and_report(CheckResult r, double time_limit = 0.0) {
    std::printf("[%s] %-20s (sec %s) %s %.2fs  %s\n", r.passed ? "PASS" : "FAIL", r.id.c_str(),
                r.section.c_str(), time_limit > 0 ? "limit" : "     ", r.seconds,
                r.detail.c_str());
    std::fflush(stdout);
    CHECK(r.passed);
    if (time_limit > 0) CHECK(r.seconds < time_limit);
    return r;
}

}  // namespace

TEST_CASE("criterion 1: printed braid images, exact, under 1s") {
    run_and_report(check_braid_example({}), 1.0);
}

TEST_CASE("criterion 2: braid relation, symbolic + 100 random pairs, under 30s") {
    run_and_report(check_braid_relation({}), 30.0);
}

TEST_CASE("criterion 3: tau equivariance and dual-group closure") {
    run_and_report(check_tau_equivariance({}));
}

TEST_CASE("criterion 4: involutivity and integrality") {
    run_and_report(check_involutivity({}));
}

TEST_CASE("criterion 5: bracket compatibility") {
    run_and_report(check_bracket_compatibility({}));
}

TEST_CASE("criterion 6: pentagon periodicity, under 1s") {
    run_and_report(check_pentagon({}), 1.0);
}

TEST_CASE("criterion 7: upper bound desk check") {
    run_and_report(check_upper_bound_lemma({}));
}

TEST_CASE("criterion 8: triangle quiver golden test") {
    run_and_report(check_triangle_quiver({}));
}

TEST_CASE("criterion 9: punctured disk and green search") {
    run_and_report(check_punctured_disk({}));
}

TEST_CASE("criterion 10: quantum torus checks, under 60s") {
    run_and_report(check_quantum_torus({}), 60.0);
}

TEST_CASE("criterion 11: theta family positivity") {
    run_and_report(check_uqsl2({}));
}

TEST_CASE("criterion 12: gauss round trip and regularity") {
    run_and_report(check_gauss_regularity({}));
}

TEST_CASE("criterion 13: manin pairing checks") {
    run_and_report(check_manin({}));
}
