#pragma once

#include <complex>
#include <vector>

namespace bohrlab {

/// How coefficient moduli are scaled by powers of (1-gamma) when a majorant is
/// assembled. PerIndex divides |a_k| by (1-gamma)^k, one factor per coefficient
/// index. PerOuter leaves |a_k| unscaled; the summation level n then contributes a
/// single division by (1-gamma)^n covering the whole prefix a_0..a_n.
enum class NormalizationScheme { PerIndex, PerOuter };

/// Truncated expansion sum_n a_n (z - center)^n of a function analytic on
/// Omega_gamma, expanded about the disk center.
///
/// tail_cap bounds |a_n|/(1-gamma)^n for every dropped index n > order; 0 means the
/// stored coefficients are the entire series. bounded_by_one records that the
/// function maps Omega_gamma into the closed unit disk; the operator tail bounds
/// lean on that certificate.
class CoefficientSeries {
public:
    CoefficientSeries(double gamma, std::vector<std::complex<double>> coeffs,
                      double tail_cap, bool bounded_by_one);

    double gamma() const { return gamma_; }
    int order() const { return static_cast<int>(coeffs_.size()) - 1; }
    const std::vector<std::complex<double>>& coeffs() const { return coeffs_; }
    const std::complex<double>& coeff(int n) const;
    double tail_cap() const { return tail_cap_; }
    bool bounded_by_one() const { return bounded_by_one_; }

    /// Same series cut at a smaller order. The new tail cap absorbs the normalized
    /// moduli of the coefficients that move into the tail, so it stays certified.
    CoefficientSeries truncated(int new_order) const;

private:
    double gamma_;
    std::vector<std::complex<double>> coeffs_;
    double tail_cap_;
    bool bounded_by_one_;
};

/// Sharp coefficient bound for functions mapping Omega_gamma into the closed unit
/// disk (Schwarz-Pick at the center): |a_n| <= (1-gamma)^n (1 - a0_mod^2) for n >= 1.
/// Throws std::invalid_argument for n = 0, std::domain_error for bad gamma/a0_mod.
double schwarz_pick_bound(double a0_mod, double gamma, int n);

/// |a_n| scaled according to the scheme: PerIndex gives |a_n|/(1-gamma)^n, PerOuter
/// gives the plain |a_n| (the outer factor is applied by the summation loop).
double normalized_modulus(const CoefficientSeries& s, int n, NormalizationScheme scheme);

/// The constant function of modulus one as a padded series: coefficients
/// [1, 0, ..., 0] up to the given order, exact tail.
CoefficientSeries unimodular_constant_series(double gamma, int order);

}  // namespace bohrlab
