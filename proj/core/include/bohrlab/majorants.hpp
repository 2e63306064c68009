#pragma once

#include <complex>
#include <span>
#include <string>
#include <vector>

#include "bohrlab/series.hpp"

namespace bohrlab {

/// Value of a transformed majorant series at radius rho, truncated at
/// truncation_order, together with a certified bound on the dropped part.
/// tail_bound never exceeds the tolerance the evaluation was asked for.
struct MajorantValue {
    double value;
    int truncation_order;
    double tail_bound;
};

/// Selects which operator majorant is evaluated. beta is the Bernardi weight
/// (> 0) and is ignored by the other operators.
struct BoundKind {
    enum class Tag { PlainBohr, Cesaro, Bernardi, Dft };

    Tag tag = Tag::PlainBohr;
    double beta = 1.0;

    static BoundKind plain_bohr() { return {Tag::PlainBohr, 1.0}; }
    static BoundKind cesaro() { return {Tag::Cesaro, 1.0}; }
    static BoundKind bernardi(double beta) { return {Tag::Bernardi, beta}; }
    static BoundKind dft() { return {Tag::Dft, 1.0}; }

    std::string name() const;
};

/// sum_n |a_n| (rho/(1-gamma))^n, the plain majorant of the series on the circle of
/// radius rho about the center.
MajorantValue bohr_majorant(const CoefficientSeries& s, double rho, double tol);

/// Cesaro averages of the normalized coefficient prefix sums:
/// sum_n (1/(n+1)) (sum_{k<=n} |a_k|/(1-gamma)^k) rho^n.
MajorantValue cesaro_majorant(const CoefficientSeries& s, double rho, double tol);

/// Bernardi weights: sum_n |a_n| / ((n+beta) (1-gamma)^n) rho^n, beta > 0.
MajorantValue bernardi_majorant(const CoefficientSeries& s, double beta, double rho, double tol);

/// Partial-sum majorant with the PerOuter normalization:
/// sum_n (sum_{k<=n} |a_k|) / (1-gamma)^n rho^n. For gamma > 0 this series
/// diverges once rho >= 1 - gamma (any nonzero coefficient), which is reported as
/// a divergence error.
MajorantValue dft_majorant(const CoefficientSeries& s, double rho, double tol);

/// Dispatch on op.tag; op.beta feeds the Bernardi case.
MajorantValue majorant(BoundKind op, const CoefficientSeries& s, double rho, double tol);

/// b_n = sum_{k<=n} a_k exp(-2 pi i n k / (n+1)): the n-th output samples the
/// order-(n+1) discrete Fourier transform of the coefficient prefix a_0..a_n.
std::vector<std::complex<double>> dft_coefficient_transform(
    std::span<const std::complex<double>> coeffs);

/// Right-hand side the majorant is compared against: 1 for the plain majorant,
/// (1/rho) log(1/(1-rho)) for Cesaro (continuity value 1 at rho = 0), 1/beta for
/// Bernardi, 1/(1-rho) for the partial-sum majorant.
double target_bound(BoundKind op, double rho);

/// Smallest truncation order whose certified tail bound stays below tol for a
/// bounded-by-one series on Omega_gamma at radius rho.
int suggested_order(BoundKind op, double gamma, double rho, double tol);

}  // namespace bohrlab
