#include <doctest.h>

#include <cmath>
#include <complex>
#include <random>
#include <stdexcept>
#include <vector>

#include "bohrlab/blaschke.hpp"
#include "bohrlab/extremal.hpp"
#include "bohrlab/majorants.hpp"
#include "oracles.hpp"

using namespace bohrlab;
using cd = std::complex<double>;

namespace {

// Worst admissible series for a given order: every normalized modulus equal to 1
// and a unit tail cap. Exercises the truncation bounds at their extreme.
CoefficientSeries worst_series(double gamma, int order) {
    std::vector<cd> c(order + 1);
    double pow = 1.0;
    for (int n = 0; n <= order; ++n) {
        c[n] = pow;
        pow *= 1.0 - gamma;
    }
    return CoefficientSeries(gamma, std::move(c), 1.0, true);
}

}  // namespace

TEST_CASE("unimodular constant attains every target bound") {
    struct Probe {
        BoundKind op;
        double rho;
    };
    const Probe probes[] = {
        {BoundKind::cesaro(), 0.5},   {BoundKind::cesaro(), 0.9},
        {BoundKind::bernardi(2.0), 0.3}, {BoundKind::bernardi(0.5), 0.8},
        {BoundKind::dft(), 0.5},      {BoundKind::plain_bohr(), 0.7},
    };
    for (const Probe& p : probes) {
        int order = suggested_order(p.op, 0.0, p.rho, 1e-13);
        MajorantValue v = majorant(p.op, unimodular_constant_series(0.0, order), p.rho, 1e-13);
        CHECK(std::abs(v.value - target_bound(p.op, p.rho)) <= 1e-12);
        CHECK(v.tail_bound <= 1e-13);
    }
    // spot values of the attained bounds
    int order = suggested_order(BoundKind::cesaro(), 0.0, 0.5, 1e-13);
    MajorantValue c = cesaro_majorant(unimodular_constant_series(0.0, order), 0.5, 1e-13);
    CHECK(std::abs(c.value - 2.0 * std::log(2.0)) <= 1e-12);
    MajorantValue b = bernardi_majorant(unimodular_constant_series(0.0, 4), 2.0, 0.6, 1e-12);
    CHECK(b.value == 0.5);
    int dorder = suggested_order(BoundKind::dft(), 0.0, 0.5, 1e-13);
    MajorantValue d = dft_majorant(unimodular_constant_series(0.0, dorder), 0.5, 1e-13);
    CHECK(std::abs(d.value - 2.0) <= 1e-12);
}

TEST_CASE("zero series evaluates to zero") {
    CoefficientSeries zero(0.3, {cd(0.0), cd(0.0)}, 0.0, true);
    CHECK(bohr_majorant(zero, 0.6, 1e-12).value == 0.0);
    CHECK(cesaro_majorant(zero, 0.6, 1e-12).value == 0.0);
    CHECK(bernardi_majorant(zero, 1.0, 0.6, 1e-12).value == 0.0);
    CHECK(dft_majorant(zero, 0.3, 1e-12).value == 0.0);
}

TEST_CASE("evaluators agree with naive summation") {
    {
        CoefficientSeries s = extremal_coeffs({0.6, 0.4}, 200);
        double naive = oracle::naive_bohr(s.coeffs(), 0.4, 0.2);
        CHECK(std::abs(bohr_majorant(s, 0.2, 1e-12).value - naive) <= 1e-12);
    }
    {
        CoefficientSeries s = extremal_coeffs({0.5, 0.0}, 200);
        double naive = oracle::naive_cesaro(s.coeffs(), 0.0, 0.4);
        CHECK(std::abs(cesaro_majorant(s, 0.4, 1e-12).value - naive) <= 1e-12);
    }
    {
        CoefficientSeries s = extremal_coeffs({0.9, 0.2}, 500);
        double naive = oracle::naive_bernardi(s.coeffs(), 0.2, 1.0, 0.5);
        CHECK(std::abs(bernardi_majorant(s, 1.0, 0.5, 1e-12).value - naive) <= 1e-10);
    }
    {
        CoefficientSeries s = extremal_coeffs({0.7, 0.3}, 300);
        double naive = oracle::naive_dft(s.coeffs(), 0.3, 0.3);
        CHECK(std::abs(dft_majorant(s, 0.3, 1e-12).value - naive) <= 1e-10);
    }
    // cesaro against naive at a large shift, where the normalization powers span
    // many orders of magnitude
    {
        CoefficientSeries s = extremal_coeffs({0.8, 0.75}, 150);
        double naive = oracle::naive_cesaro(s.coeffs(), 0.75, 0.3);
        CHECK(std::abs(cesaro_majorant(s, 0.3, 1e-12).value - naive) <= 1e-10);
    }
}

TEST_CASE("majorants are nondecreasing in the radius") {
    std::mt19937_64 rng(11);
    CoefficientSeries unit = blaschke_taylor(random_blaschke_spec(rng), 120);
    CoefficientSeries s = compose_affine_pullback(unit, 0.25);
    const BoundKind ops[] = {BoundKind::plain_bohr(), BoundKind::cesaro(),
                             BoundKind::bernardi(1.0), BoundKind::dft()};
    for (const BoundKind& op : ops) {
        double prev = -1.0;
        for (int i = 0; i <= 10; ++i) {
            double rho = 0.05 * i;
            double v = majorant(op, s, rho, 1e-6).value;
            CHECK(v >= prev);
            prev = v;
        }
    }
}

TEST_CASE("doubling the order moves the value by less than the tail bound") {
    ExtremalParams p{0.9, 0.2};
    const BoundKind ops[] = {BoundKind::plain_bohr(), BoundKind::cesaro(),
                             BoundKind::bernardi(0.7), BoundKind::dft()};
    for (const BoundKind& op : ops) {
        for (double rho : {0.3, 0.55}) {
            MajorantValue small = majorant(op, extremal_coeffs(p, 64), rho, 1.0);
            MajorantValue big = majorant(op, extremal_coeffs(p, 128), rho, 1.0);
            CHECK(big.value >= small.value);
            CHECK(big.value - small.value <= small.tail_bound);
            CHECK(small.truncation_order == 64);
            CHECK(big.truncation_order == 128);
        }
    }
}

TEST_CASE("evaluator domain errors") {
    CoefficientSeries s = unimodular_constant_series(0.0, 4);
    CHECK_THROWS_AS(bohr_majorant(s, 1.0, 1e-12), std::domain_error);
    CHECK_THROWS_AS(cesaro_majorant(s, -0.1, 1e-12), std::domain_error);
    CHECK_THROWS_AS(dft_majorant(s, 1.2, 1e-12), std::domain_error);
    CHECK_THROWS_AS(bernardi_majorant(s, 0.0, 0.5, 1e-12), std::domain_error);
    CHECK_THROWS_AS(bernardi_majorant(s, -2.0, 0.5, 1e-12), std::domain_error);
    CHECK_THROWS_AS(bohr_majorant(s, 0.5, 0.0), std::invalid_argument);
    CHECK_THROWS_AS(bohr_majorant(s, 0.5, -1.0), std::invalid_argument);

    // the outer normalization diverges once rho reaches 1 - gamma
    CoefficientSeries shifted = extremal_coeffs({0.5, 0.4}, 10);
    CHECK_THROWS_AS(dft_majorant(shifted, 0.7, 1e-6), std::domain_error);
    CHECK_NOTHROW(dft_majorant(shifted, 0.55, 10.0));

    // a tail cap the tolerance cannot absorb is a reported failure, not a wrong value
    CoefficientSeries loose(0.0, {cd(1.0)}, 1.0, true);
    CHECK_THROWS_AS(bohr_majorant(loose, 0.9, 1e-30), std::runtime_error);
}

TEST_CASE("discrete fourier coefficient transform") {
    {
        auto b = dft_coefficient_transform(std::vector<cd>{cd(1.0), cd(0.0), cd(0.0)});
        REQUIRE(b.size() == 3);
        for (const cd& v : b) CHECK(std::abs(v - cd(1.0)) <= 1e-15);
    }
    {
        auto b = dft_coefficient_transform(std::vector<cd>{cd(1.0), cd(1.0)});
        REQUIRE(b.size() == 2);
        CHECK(std::abs(b[0] - cd(1.0)) <= 1e-15);
        CHECK(std::abs(b[1]) <= 1e-15);
    }
    {
        auto b = dft_coefficient_transform(std::vector<cd>{cd(0.0), cd(0.0), cd(0.0)});
        for (const cd& v : b) CHECK(std::abs(v) == 0.0);
    }
    CHECK(dft_coefficient_transform(std::vector<cd>{}).empty());

    // triangle inequality against the prefix sums of moduli
    std::mt19937_64 rng(5);
    std::uniform_real_distribution<double> u(-1.0, 1.0);
    std::vector<cd> coeffs;
    for (int n = 0; n < 40; ++n) coeffs.emplace_back(u(rng), u(rng));
    auto b = dft_coefficient_transform(coeffs);
    double prefix = 0.0;
    for (std::size_t n = 0; n < coeffs.size(); ++n) {
        prefix += std::abs(coeffs[n]);
        CHECK(std::abs(b[n]) <= prefix + 1e-12);
    }
}

TEST_CASE("single factor family crosses one exactly at its threshold radius") {
    for (double r : {0.3, 0.5, 0.9}) {
        CoefficientSeries s = extremal_coeffs({r, 0.0}, 400);
        double threshold = 1.0 / (1.0 + 2.0 * r);
        CHECK(std::abs(bohr_majorant(s, threshold, 1e-13).value - 1.0) <= 1e-12);
        CHECK(bohr_majorant(s, threshold + 0.01, 1e-13).value > 1.0 + 1e-4);
        CHECK(bohr_majorant(s, threshold - 0.01, 1e-13).value < 1.0 - 1e-4);
    }
}

TEST_CASE("target bound values") {
    CHECK(target_bound(BoundKind::cesaro(), 0.0) == 1.0);
    CHECK(std::abs(target_bound(BoundKind::cesaro(), 1e-8) - 1.0) <= 1e-7);
    CHECK(std::abs(target_bound(BoundKind::cesaro(), 0.5) - 2.0 * std::log(2.0)) <= 1e-15);
    CHECK(std::abs(target_bound(BoundKind::dft(), 1.0 / 3.0) - 1.5) <= 1e-15);
    CHECK(target_bound(BoundKind::bernardi(2.0), 0.7) == 0.5);
    CHECK(target_bound(BoundKind::plain_bohr(), 0.99) == 1.0);
    CHECK_THROWS_AS(target_bound(BoundKind::cesaro(), 1.0), std::domain_error);
    CHECK_THROWS_AS(target_bound(BoundKind::dft(), 1.0), std::domain_error);
    CHECK_THROWS_AS(target_bound(BoundKind::bernardi(0.0), 0.5), std::domain_error);
}

TEST_CASE("suggested order certifies the worst admissible tail") {
    struct Probe {
        BoundKind op;
        double gamma;
        double rho;
    };
    const Probe probes[] = {
        {BoundKind::plain_bohr(), 0.0, 0.9}, {BoundKind::cesaro(), 0.0, 0.5},
        {BoundKind::cesaro(), 0.3, 0.4},     {BoundKind::bernardi(1.0), 0.25, 0.58},
        {BoundKind::dft(), 0.0, 0.9},        {BoundKind::dft(), 0.3, 0.4},
    };
    for (const Probe& p : probes) {
        for (double tol : {1e-6, 1e-10, 1e-13}) {
            int order = suggested_order(p.op, p.gamma, p.rho, tol);
            CHECK(order >= 0);
            MajorantValue v = majorant(p.op, worst_series(p.gamma, order), p.rho, tol);
            CHECK(v.tail_bound <= tol);
        }
    }
    CHECK_THROWS_AS(suggested_order(BoundKind::cesaro(), 1.0, 0.5, 1e-10),
                    std::domain_error);
    CHECK_THROWS_AS(suggested_order(BoundKind::cesaro(), 0.0, 1.0, 1e-10),
                    std::domain_error);
    CHECK_THROWS_AS(suggested_order(BoundKind::cesaro(), 0.0, 0.5, 0.0),
                    std::invalid_argument);
    CHECK_THROWS_AS(suggested_order(BoundKind::dft(), 0.5, 0.6, 1e-10),
                    std::domain_error);
}

TEST_CASE("dispatch matches the concrete evaluators") {
    CoefficientSeries s = extremal_coeffs({0.4, 0.2}, 80);
    CHECK(majorant(BoundKind::plain_bohr(), s, 0.3, 1e-10).value ==
          bohr_majorant(s, 0.3, 1e-10).value);
    CHECK(majorant(BoundKind::cesaro(), s, 0.3, 1e-10).value ==
          cesaro_majorant(s, 0.3, 1e-10).value);
    CHECK(majorant(BoundKind::bernardi(1.5), s, 0.3, 1e-10).value ==
          bernardi_majorant(s, 1.5, 0.3, 1e-10).value);
    CHECK(majorant(BoundKind::dft(), s, 0.3, 1e-10).value ==
          dft_majorant(s, 0.3, 1e-10).value);
}

TEST_CASE("bound names") {
    CHECK(BoundKind::plain_bohr().name() == "bohr");
    CHECK(BoundKind::cesaro().name() == "cesaro");
    CHECK(BoundKind::bernardi(2.0).name() == "bernardi");
    CHECK(BoundKind::dft().name() == "dft");
}
