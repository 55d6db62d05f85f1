#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "property_checks.hpp"

namespace {

// Adapter: every property verdict becomes one doctest assertion.
int run(int (*suite)(const proptest::Check&)) {
    return suite([](bool ok, const std::string& what) {
        INFO(what);
        CHECK(ok);
    });
}

}  // namespace

TEST_CASE("field axioms hold on random elements") {
    CHECK(run(proptest::field_axiom_suite) >= 200);
}

TEST_CASE("lifting commutes with products of random unimodular matrices") {
    CHECK(run(proptest::lift_homomorphism_suite) >= 200);
}

TEST_CASE("the killing form is invariant under the adjoint action") {
    CHECK(run(proptest::killing_invariance_suite) >= 200);
}

TEST_CASE("coboundaries of random module elements are cocycles") {
    CHECK(run(proptest::coboundary_cocycle_suite) >= 200);
}

TEST_CASE("pairings against invariants vanish on coboundaries") {
    CHECK(run(proptest::coboundary_pairing_suite) >= 200);
}

TEST_CASE("cup classes ignore the choice of cocycle representative") {
    CHECK(run(proptest::cup_representative_suite) >= 200);
}

TEST_CASE("exact ranks agree with an independent floating-point elimination") {
    CHECK(run(proptest::rank_crosscheck_suite) >= 200);
}
