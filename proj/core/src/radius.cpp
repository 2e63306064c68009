#include "bohrlab/radius.hpp"

#include <cmath>
#include <stdexcept>

namespace bohrlab {

namespace {

// Residual head - scale * sum_{n >= start} x^n/(n+beta). Terms are positive, so
// the running value is a decreasing upper bound on the true residual: once it
// sits below -1e-8 the sign is settled and summation can stop (near x = 1 the
// full 1e-14 tail would take ~1e10 terms). Values above -1e-8, in particular
// near every root, always run until the series tail x^{N+1}/((N+1+beta)(1-x))
// is below 1e-14 and are fully accurate.
double series_residual(double head, double scale, double beta, int start, double x) {
    double r = head;
    double x_pow = std::pow(x, start);
    double geom = 1.0 / (1.0 - x);
    for (int n = start;; ++n) {
        r -= scale * x_pow / (n + beta);
        if (r < -1e-8) return r;
        x_pow *= x;
        if (x_pow * geom / (n + 1 + beta) < 1e-14) return r;
    }
}

void validate_gamma(double gamma) {
    if (!(gamma >= 0.0 && gamma < 1.0)) {
        throw std::domain_error("shift parameter must lie in [0, 1)");
    }
}

}  // namespace

double defining_residual(const RadiusProblem& p, double x) {
    if (!(x > 0.0 && x < 1.0)) {
        throw std::domain_error("radius variable must lie in (0, 1)");
    }
    switch (p.kind) {
        case RadiusProblem::Kind::Cesaro:
            return -3.0 * (1.0 - x) * std::log1p(-x) - 2.0 * x;
        case RadiusProblem::Kind::CesaroOmega:
            validate_gamma(p.gamma);
            return -(3.0 + p.gamma) * (1.0 - x) * std::log1p(-x) - 2.0 * x;
        case RadiusProblem::Kind::Bernardi:
            if (!(p.beta > 0.0)) throw std::domain_error("weight must be positive");
            return series_residual(1.0 / p.beta, 2.0, p.beta, 1, x);
        case RadiusProblem::Kind::BernardiTruncated:
            if (p.m < 0) throw std::domain_error("vanishing order must be nonnegative");
            if (!(p.m + p.beta > 0.0)) {
                throw std::domain_error("weight must exceed minus the vanishing order");
            }
            return series_residual(std::pow(x, p.m) / (p.m + p.beta), 2.0, p.beta,
                                   p.m + 1, x);
        case RadiusProblem::Kind::BernardiOmega:
            validate_gamma(p.gamma);
            if (!(p.beta > 0.0)) throw std::domain_error("weight must be positive");
            return series_residual(1.0 / p.beta, 2.0 / (1.0 + p.gamma), p.beta, 1, x);
        case RadiusProblem::Kind::Dft:
            return 1.0 - 3.0 * x;
    }
    throw std::logic_error("unknown radius problem kind");
}

RootCertificate solve_bracketed_root(const std::function<double(double)>& f,
                                     double lo, double hi, double tol) {
    if (!(tol > 0.0)) {
        throw std::invalid_argument("bracket tolerance must be positive");
    }
    if (!(lo < hi)) {
        throw std::invalid_argument("bracket endpoints must satisfy lo < hi");
    }
    double flo = f(lo);
    double fhi = f(hi);
    if (!std::isfinite(flo) || !std::isfinite(fhi)) {
        throw std::runtime_error("non-finite residual at a bracket endpoint");
    }
    if (flo == 0.0) return {lo, lo, lo, 0.0, 0};
    if (fhi == 0.0) return {hi, hi, hi, 0.0, 0};
    if ((flo > 0.0) == (fhi > 0.0)) {
        throw std::invalid_argument("no sign change over the bracket");
    }
    int iterations = 0;
    while (hi - lo > tol) {
        if (iterations >= 200) {
            throw std::runtime_error("bisection failed to reach the bracket tolerance");
        }
        double mid = lo + 0.5 * (hi - lo);
        if (mid <= lo || mid >= hi) break;  // bracket at floating-point resolution
        double fm = f(mid);
        if (!std::isfinite(fm)) {
            throw std::runtime_error("non-finite residual inside the bracket");
        }
        ++iterations;
        if (fm == 0.0) {
            lo = hi = mid;
            break;
        }
        if ((fm > 0.0) == (flo > 0.0)) {
            lo = mid;
            flo = fm;
        } else {
            hi = mid;
        }
    }
    double root = lo + 0.5 * (hi - lo);
    return {root, lo, hi, f(root), iterations};
}

RootCertificate radius_for(const RadiusProblem& p) {
    constexpr double kBracketTol = 1e-12;
    if (p.kind == RadiusProblem::Kind::Dft) {
        // The defining residual 1 - 3x is linear; hand back the exact binary64
        // representation of 1/3 with a bracket no wider than bisection would give.
        double root = 1.0 / 3.0;
        return {root, root - 2.5e-13, root + 2.5e-13, defining_residual(p, root), 0};
    }
    auto f = [&p](double x) { return defining_residual(p, x); };
    return solve_bracketed_root(f, 1e-9, 1.0 - 1e-9, kBracketTol);
}

}  // namespace bohrlab
