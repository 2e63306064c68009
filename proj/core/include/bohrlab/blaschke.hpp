#pragma once

#include <complex>
#include <random>
#include <vector>

#include "bohrlab/series.hpp"

namespace bohrlab {

/// Finite Blaschke product rotation * prod_i (z_i - z)/(1 - conj(z_i) z).
/// Zeros must sit strictly inside the unit disk (|z_i| <= 1 - 1e-6), which keeps the
/// nearest pole at distance >= 1/(1 - 1e-6) and the Taylor series tame on the
/// closed disk. rotation must be unimodular.
struct BlaschkeSpec {
    std::vector<std::complex<double>> zeros;
    std::complex<double> rotation{1.0, 0.0};

    int degree() const { return static_cast<int>(zeros.size()); }
};

/// Taylor coefficients of the product at 0 up to the given order, as a unit-disk
/// series (gamma = 0) certified bounded by one. Each factor expands to
/// z_i - (1-|z_i|^2) sum_{n>=1} conj(z_i)^{n-1} z^n; factors are combined by
/// truncated convolution.
CoefficientSeries blaschke_taylor(const BlaschkeSpec& spec, int order);

/// Re-expands a unit-disk series (gamma = 0) about the center of Omega_gamma:
/// a_n -> a_n (1-gamma)^n. Normalized moduli and the tail cap are unchanged.
CoefficientSeries compose_affine_pullback(const CoefficientSeries& unit_series, double gamma);

struct CoefficientCheck {
    double max_violation;   // max_n (|a_n| - schwarz_pick_bound(|a_0|, gamma, n)), n >= 1
    int worst_index;
};

/// Largest violation of the Schwarz-Pick coefficient bound across stored indices.
/// A certified series keeps this below roundoff; values can be (and usually are)
/// negative. Order-0 series report {0, 0}.
CoefficientCheck check_coefficient_bounds(const CoefficientSeries& s);

/// Deterministic test-function generator: degree uniform in 1..6, zeros uniform in
/// the disk |z| <= 0.9, rotation uniform on the unit circle.
BlaschkeSpec random_blaschke_spec(std::mt19937_64& rng);

}  // namespace bohrlab
