#pragma once

#include <vector>

#include "bohrlab/majorants.hpp"
#include "bohrlab/series.hpp"

namespace bohrlab {

/// Parameters of the Moebius extremal family on Omega_gamma: the pullback of
/// w -> (a - w)/(1 - a w) under w = gamma + (1-gamma) z.
struct ExtremalParams {
    double a;       // in (0, 1]; a = 1 degenerates to the unimodular constant
    double gamma;   // in [0, 1)
};

/// Coefficient moduli of the expansion about the disk center:
/// A_0 = a, A_n = a^(n-1) (1 - a^2) (1-gamma)^n for n >= 1. The normalized moduli
/// a^(n-1) (1-a^2) are gamma-free, which makes the centered majorants of this
/// family independent of gamma.
CoefficientSeries extremal_coeffs(const ExtremalParams& p, int order);

/// Closed form of the Cesaro majorant of the extremal family:
///   -(1/rho) log(1-rho) - (2a/rho) log(1-rho) + ((1+a)/(a rho)) log(1-a rho).
/// For a below 1e-4 the last term evaluates log(1-a rho)/a by its three-term
/// series to dodge the removable singularity at a = 0.
double extremal_cesaro_closed_form(double a, double rho);

/// Defect term of the extremal margin decomposition for the operator:
///   Cesaro    -((3-a)/rho) log(1-rho) - 2(1-a)/(1-rho) + ((1+a)/(a rho)) log(1-a rho)
///   Bernardi  sum_{n>=1} ((1-a^2) a^(n-1) - 2(1-a)) rho^n / (n+beta)
///   Dft       2a - (1+a)(1-rho)/(1-a rho)
/// Each is O((1-a)^2) as a -> 1 (the Dft defect at rho = 1/3), which is what makes
/// the radii sharp: the linear-in-(1-a) part of the margin dominates just above the
/// radius. The Bernardi sum is accumulated until its tail is below 1e-14.
double sharpness_defect(BoundKind op, double a, double rho);

/// majorant(extremal(p), rho) - target_bound(op, rho) at truncation tolerance
/// 1e-12. Positive values witness failure of the operator bound at rho.
double sharpness_margin(BoundKind op, const ExtremalParams& p, double rho);

/// Margin grid; margins is row-major, margins[i * rho_grid.size() + j] pairing
/// a_grid[i] with rho_grid[j].
struct MarginTable {
    BoundKind op;
    std::vector<double> a_grid;
    std::vector<double> rho_grid;
    std::vector<double> margins;
};

/// Evaluates sharpness_margin over the grid (grids strictly increasing inside
/// (0, 1)); every extremal uses the given gamma.
MarginTable sweep_margins(BoundKind op, double gamma,
                          const std::vector<double>& a_grid,
                          const std::vector<double>& rho_grid);

}  // namespace bohrlab
