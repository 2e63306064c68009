#include "bohrlab/blaschke.hpp"

#include <cmath>
#include <cstddef>
#include <stdexcept>
#include <utility>

namespace bohrlab {

namespace {

// Taylor coefficients of one factor (z0 - z)/(1 - conj(z0) z) up to `order`:
// c_0 = z0, c_n = -(1 - |z0|^2) conj(z0)^{n-1} for n >= 1.
std::vector<std::complex<double>> factor_coeffs(std::complex<double> z0, int order) {
    std::vector<std::complex<double>> c(static_cast<std::size_t>(order) + 1);
    c[0] = z0;
    std::complex<double> w = std::conj(z0);
    double head = std::norm(z0) - 1.0;
    std::complex<double> w_pow(1.0, 0.0);
    for (int n = 1; n <= order; ++n) {
        c[static_cast<std::size_t>(n)] = head * w_pow;
        w_pow *= w;
    }
    return c;
}

std::vector<std::complex<double>> convolve_truncated(
    const std::vector<std::complex<double>>& a,
    const std::vector<std::complex<double>>& b, int order) {
    std::vector<std::complex<double>> out(static_cast<std::size_t>(order) + 1,
                                          std::complex<double>(0.0, 0.0));
    for (int i = 0; i <= order && i < static_cast<int>(a.size()); ++i) {
        for (int j = 0; i + j <= order && j < static_cast<int>(b.size()); ++j) {
            out[static_cast<std::size_t>(i + j)] +=
                a[static_cast<std::size_t>(i)] * b[static_cast<std::size_t>(j)];
        }
    }
    return out;
}

// Uniform double in [0, 1) built from the top 53 bits of the engine output, so the
// stream does not depend on the standard library's distribution internals.
double uniform01(std::mt19937_64& rng) {
    return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

}  // namespace

CoefficientSeries blaschke_taylor(const BlaschkeSpec& spec, int order) {
    if (order < 0) {
        throw std::invalid_argument("order must be nonnegative");
    }
    double rot_defect = std::abs(std::abs(spec.rotation) - 1.0);
    if (rot_defect > 1e-12) {
        throw std::domain_error("rotation must be unimodular");
    }
    for (const auto& z0 : spec.zeros) {
        if (std::abs(z0) > 1.0 - 1e-6) {
            throw std::domain_error("zeros must satisfy |z| <= 1 - 1e-6");
        }
    }
    std::vector<std::complex<double>> acc(static_cast<std::size_t>(order) + 1,
                                          std::complex<double>(0.0, 0.0));
    acc[0] = spec.rotation;
    for (const auto& z0 : spec.zeros) {
        acc = convolve_truncated(acc, factor_coeffs(z0, order), order);
    }
    // The product maps the closed disk into itself, so Schwarz-Pick caps every
    // dropped coefficient by 1 - |b_0|^2.
    double tail_cap = std::max(0.0, 1.0 - std::norm(acc[0]));
    return CoefficientSeries(0.0, std::move(acc), tail_cap, true);
}

CoefficientSeries compose_affine_pullback(const CoefficientSeries& unit_series, double gamma) {
    if (unit_series.gamma() != 0.0) {
        throw std::invalid_argument("pullback expects a unit-disk series");
    }
    if (!(gamma >= 0.0 && gamma < 1.0)) {
        throw std::domain_error("shift parameter must lie in [0, 1)");
    }
    std::vector<std::complex<double>> c = unit_series.coeffs();
    double scale = 1.0;
    for (std::size_t n = 1; n < c.size(); ++n) {
        scale *= 1.0 - gamma;
        c[n] *= scale;
    }
    return CoefficientSeries(gamma, std::move(c), unit_series.tail_cap(),
                             unit_series.bounded_by_one());
}

CoefficientCheck check_coefficient_bounds(const CoefficientSeries& s) {
    CoefficientCheck result{0.0, 0};
    if (s.order() == 0) return result;
    double a0_mod = std::abs(s.coeff(0));
    bool first = true;
    for (int n = 1; n <= s.order(); ++n) {
        double violation = std::abs(s.coeff(n)) - schwarz_pick_bound(a0_mod, s.gamma(), n);
        if (first || violation > result.max_violation) {
            result.max_violation = violation;
            result.worst_index = n;
            first = false;
        }
    }
    return result;
}

BlaschkeSpec random_blaschke_spec(std::mt19937_64& rng) {
    BlaschkeSpec spec;
    int degree = 1 + static_cast<int>(uniform01(rng) * 6.0);
    if (degree > 6) degree = 6;
    spec.zeros.reserve(static_cast<std::size_t>(degree));
    for (int i = 0; i < degree; ++i) {
        double r = 0.9 * std::sqrt(uniform01(rng));
        double phi = 2.0 * M_PI * uniform01(rng);
        spec.zeros.emplace_back(r * std::cos(phi), r * std::sin(phi));
    }
    double rho = 2.0 * M_PI * uniform01(rng);
    spec.rotation = std::complex<double>(std::cos(rho), std::sin(rho));
    return spec;
}

}  // namespace bohrlab
