#include <doctest.h>

#include <cmath>
#include <complex>
#include <numbers>
#include <random>
#include <stdexcept>
#include <vector>

#include "bohrlab/blaschke.hpp"
#include "bohrlab/extremal.hpp"
#include "oracles.hpp"

using namespace bohrlab;
using cd = std::complex<double>;

TEST_CASE("single factor taylor coefficients") {
    BlaschkeSpec spec;
    spec.zeros = {cd(0.5)};
    CoefficientSeries s = blaschke_taylor(spec, 2);
    CHECK(s.gamma() == 0.0);
    CHECK(s.order() == 2);
    CHECK(std::abs(s.coeff(0) - cd(0.5)) <= 1e-15);
    CHECK(std::abs(s.coeff(1) - cd(-0.75)) <= 1e-15);
    CHECK(std::abs(s.coeff(2) - cd(-0.375)) <= 1e-15);
    CHECK(s.bounded_by_one());
}

TEST_CASE("empty product is the constant one") {
    BlaschkeSpec spec;
    CoefficientSeries s = blaschke_taylor(spec, 3);
    CHECK(s.coeff(0) == cd(1.0));
    for (int n = 1; n <= 3; ++n) CHECK(s.coeff(n) == cd(0.0));
    CHECK(s.tail_cap() == 0.0);
}

TEST_CASE("zero at the origin gives minus z") {
    BlaschkeSpec spec;
    spec.zeros = {cd(0.0)};
    CoefficientSeries s = blaschke_taylor(spec, 3);
    CHECK(std::abs(s.coeff(0)) == 0.0);
    CHECK(std::abs(s.coeff(1) - cd(-1.0)) <= 1e-15);
    CHECK(std::abs(s.coeff(2)) == 0.0);
    CHECK(std::abs(s.coeff(3)) == 0.0);
}

TEST_CASE("spec validation") {
    BlaschkeSpec far;
    far.zeros = {cd(1.0)};
    CHECK_THROWS_AS(blaschke_taylor(far, 2), std::domain_error);

    BlaschkeSpec near_edge;
    near_edge.zeros = {cd(1.0 - 1e-7)};
    CHECK_THROWS_AS(blaschke_taylor(near_edge, 2), std::domain_error);

    BlaschkeSpec twist;
    twist.zeros = {cd(0.3)};
    twist.rotation = cd(1.1);
    CHECK_THROWS_AS(blaschke_taylor(twist, 2), std::domain_error);

    BlaschkeSpec ok;
    ok.zeros = {cd(0.3)};
    CHECK_THROWS_AS(blaschke_taylor(ok, -1), std::invalid_argument);
}

TEST_CASE("taylor series matches direct evaluation inside the disk") {
    std::mt19937_64 rng(2024);
    for (int trial = 0; trial < 25; ++trial) {
        BlaschkeSpec spec = random_blaschke_spec(rng);
        CoefficientSeries s = blaschke_taylor(spec, 80);
        for (int k = 0; k < 8; ++k) {
            double theta = 2.0 * std::numbers::pi * k / 8.0;
            cd z = 0.3 * cd(std::cos(theta), std::sin(theta));
            cd direct = oracle::eval_blaschke(spec.zeros, spec.rotation, z);
            cd series = oracle::eval_poly(s.coeffs(), z);
            CHECK(std::abs(direct - series) <= 1e-12);
        }
    }
}

TEST_CASE("series stays bounded near the boundary") {
    std::mt19937_64 rng(7);
    for (int trial = 0; trial < 10; ++trial) {
        CoefficientSeries s = blaschke_taylor(random_blaschke_spec(rng), 200);
        for (int k = 0; k < 64; ++k) {
            double theta = 2.0 * std::numbers::pi * k / 64.0;
            cd z = 0.9 * cd(std::cos(theta), std::sin(theta));
            CHECK(std::abs(oracle::eval_poly(s.coeffs(), z)) <= 1.0 + 1e-9);
        }
    }
}

TEST_CASE("coefficient bounds hold for random pullbacks") {
    std::mt19937_64 rng(42);
    for (int trial = 0; trial < 100; ++trial) {
        CoefficientSeries unit = blaschke_taylor(random_blaschke_spec(rng), 64);
        // derivative-style bound at the origin: |a_n| <= 1 - |a_0|^2 for n >= 1
        double cap = 1.0 - std::norm(unit.coeff(0));
        for (int n = 1; n <= unit.order(); ++n) {
            CHECK(std::abs(unit.coeff(n)) <= cap + 1e-9);
        }
        for (double g : {0.0, 0.25, 0.5, 0.75}) {
            CoefficientSeries pulled = compose_affine_pullback(unit, g);
            CoefficientCheck rep = check_coefficient_bounds(pulled);
            CHECK(rep.max_violation <= 1e-9);
            CHECK(rep.worst_index >= 0);
            CHECK(rep.worst_index <= pulled.order());
        }
    }
}

TEST_CASE("order zero series reports a zero check") {
    CoefficientSeries constant(0.2, {cd(0.7)}, 0.0, true);
    CoefficientCheck rep = check_coefficient_bounds(constant);
    CHECK(rep.max_violation == 0.0);
    CHECK(rep.worst_index == 0);
}

TEST_CASE("affine pullback scales coefficients geometrically") {
    CoefficientSeries unit(0.0, {cd(0.0), cd(1.0)}, 0.0, true);
    CoefficientSeries pulled = compose_affine_pullback(unit, 0.5);
    CHECK(pulled.gamma() == 0.5);
    CHECK(pulled.coeff(0) == cd(0.0));
    CHECK(pulled.coeff(1) == cd(0.5));

    CoefficientSeries same = compose_affine_pullback(unit, 0.0);
    CHECK(same.coeff(1) == cd(1.0));
    CHECK(same.gamma() == 0.0);

    CHECK_THROWS_AS(compose_affine_pullback(pulled, 0.3), std::invalid_argument);
    CHECK_THROWS_AS(compose_affine_pullback(unit, 1.0), std::domain_error);
    CHECK_THROWS_AS(compose_affine_pullback(unit, -0.1), std::domain_error);
}

TEST_CASE("single factor pullback reproduces the extremal moduli") {
    BlaschkeSpec spec;
    spec.zeros = {cd(0.5)};
    CoefficientSeries pulled = compose_affine_pullback(blaschke_taylor(spec, 40), 0.3);
    CoefficientSeries ext = extremal_coeffs({0.5, 0.3}, 40);
    for (int n = 0; n <= 40; ++n) {
        double got = std::abs(pulled.coeff(n));
        double want = std::abs(ext.coeff(n));
        CHECK(std::abs(got - want) <= 1e-12 * (1.0 + want));
    }
    // the first coefficient modulus attains the bound
    CHECK(std::abs(std::abs(pulled.coeff(1)) - schwarz_pick_bound(0.5, 0.3, 1)) <= 1e-13);
}

TEST_CASE("seeded generator is deterministic and in range") {
    std::mt19937_64 a(9), b(9);
    for (int i = 0; i < 50; ++i) {
        BlaschkeSpec sa = random_blaschke_spec(a);
        BlaschkeSpec sb = random_blaschke_spec(b);
        REQUIRE(sa.degree() == sb.degree());
        CHECK(sa.degree() >= 1);
        CHECK(sa.degree() <= 6);
        CHECK(std::abs(std::abs(sa.rotation) - 1.0) <= 1e-12);
        CHECK(sa.rotation == sb.rotation);
        for (int j = 0; j < sa.degree(); ++j) {
            CHECK(sa.zeros[j] == sb.zeros[j]);
            CHECK(std::abs(sa.zeros[j]) <= 0.9);
        }
    }
}
