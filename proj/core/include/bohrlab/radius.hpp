#pragma once

#include <functional>

namespace bohrlab {

/// The radius equations this module solves. Cesaro and Dft are the sharp radii of
/// the centered-expansion majorants (gamma drops out of those equations). The
/// Omega variants are the origin-frame versions with gamma-dependent radii,
/// BernardiTruncated the variant whose first m coefficients vanish.
struct RadiusProblem {
    enum class Kind { Cesaro, CesaroOmega, Bernardi, BernardiTruncated, BernardiOmega, Dft };

    Kind kind = Kind::Cesaro;
    double gamma = 0.0;   // CesaroOmega, BernardiOmega
    double beta = 1.0;    // Bernardi family; > 0 (BernardiTruncated allows beta > -m)
    int m = 0;            // BernardiTruncated; >= 0

    static RadiusProblem cesaro() { return {Kind::Cesaro, 0.0, 1.0, 0}; }
    static RadiusProblem cesaro_omega(double gamma) { return {Kind::CesaroOmega, gamma, 1.0, 0}; }
    static RadiusProblem bernardi(double beta) { return {Kind::Bernardi, 0.0, beta, 0}; }
    static RadiusProblem bernardi_truncated(double beta, int m) {
        return {Kind::BernardiTruncated, 0.0, beta, m};
    }
    static RadiusProblem bernardi_omega(double gamma, double beta) {
        return {Kind::BernardiOmega, gamma, beta, 0};
    }
    static RadiusProblem dft() { return {Kind::Dft, 0.0, 1.0, 0}; }
};

/// Bisection record. root is the midpoint of the final bracket [lo, hi]; the
/// residual changed sign over every bracket along the way.
struct RootCertificate {
    double root;
    double lo;
    double hi;
    double residual_at_root;
    int iterations;
};

/// Residual of the problem's defining equation, oriented so that it is positive
/// below the radius and negative above, with a single zero in (0, 1):
///   Cesaro             3 (1-x) log(1/(1-x)) - 2 x
///   CesaroOmega        (3+gamma) (1-x) log(1/(1-x)) - 2 x
///   Bernardi           1/beta - 2 sum_{n>=1} x^n/(n+beta)
///   BernardiTruncated  x^m/(m+beta) - 2 sum_{n>=m+1} x^n/(n+beta)
///   BernardiOmega      1/beta - (2/(1+gamma)) sum_{n>=1} x^n/(n+beta)
///   Dft                1 - 3 x
/// The series residuals are summed directly until the geometric tail
/// x^{N+1}/((N+1+beta)(1-x)) drops below 1e-14, or until the running value sits
/// below -1e-8: the terms are positive, so the partial value is an upper bound
/// on the true residual and its sign is then settled. Values above -1e-8, in
/// particular near every root, are fully accurate; the early exit only keeps
/// endpoint evaluations near x = 1 from needing ~1e10 terms.
double defining_residual(const RadiusProblem& p, double x);

/// Plain bracket-preserving bisection down to bracket width tol (at most 200
/// steps). Requires a sign change over [lo, hi]; throws std::invalid_argument
/// otherwise and std::runtime_error on non-finite residuals or iteration overrun.
RootCertificate solve_bracketed_root(const std::function<double(double)>& f,
                                     double lo, double hi, double tol);

/// Certified radius for the problem, bracket width 1e-12. The Dft radius is
/// returned as the exact binary64 value 1.0/3.0 with a synthetic certificate; the
/// others are solved on the bracket [1e-9, 1 - 1e-9].
RootCertificate radius_for(const RadiusProblem& p);

}  // namespace bohrlab
