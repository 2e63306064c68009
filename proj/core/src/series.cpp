#include "bohrlab/series.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <utility>

namespace bohrlab {

CoefficientSeries::CoefficientSeries(double gamma, std::vector<std::complex<double>> coeffs,
                                     double tail_cap, bool bounded_by_one)
    : gamma_(gamma),
      coeffs_(std::move(coeffs)),
      tail_cap_(tail_cap),
      bounded_by_one_(bounded_by_one) {
    if (!(gamma_ >= 0.0 && gamma_ < 1.0)) {
        throw std::domain_error("shift parameter must lie in [0, 1)");
    }
    if (coeffs_.empty()) {
        throw std::invalid_argument("coefficient list must be nonempty");
    }
    if (!(tail_cap_ >= 0.0)) {
        throw std::invalid_argument("tail cap must be nonnegative");
    }
}

const std::complex<double>& CoefficientSeries::coeff(int n) const {
    if (n < 0 || n >= static_cast<int>(coeffs_.size())) {
        throw std::out_of_range("coefficient index out of range");
    }
    return coeffs_[static_cast<std::size_t>(n)];
}

CoefficientSeries CoefficientSeries::truncated(int new_order) const {
    if (new_order < 0 || new_order > order()) {
        throw std::invalid_argument("truncation order out of range");
    }
    std::vector<std::complex<double>> head(coeffs_.begin(),
                                           coeffs_.begin() + (new_order + 1));
    // Dropped stored coefficients join the tail; the cap stays a per-index bound.
    double cap = tail_cap_;
    double inv = 1.0 / (1.0 - gamma_);
    double inv_pow = std::pow(inv, new_order + 1);
    for (int n = new_order + 1; n <= order(); ++n) {
        double mod = std::abs(coeffs_[static_cast<std::size_t>(n)]);
        if (mod != 0.0) cap = std::max(cap, mod * inv_pow);
        inv_pow *= inv;
    }
    return CoefficientSeries(gamma_, std::move(head), cap, bounded_by_one_);
}

double schwarz_pick_bound(double a0_mod, double gamma, int n) {
    if (n <= 0) {
        throw std::invalid_argument("coefficient bound applies to indices n >= 1");
    }
    if (!(a0_mod >= 0.0 && a0_mod <= 1.0)) {
        throw std::domain_error("constant-term modulus must lie in [0, 1]");
    }
    if (!(gamma >= 0.0 && gamma < 1.0)) {
        throw std::domain_error("shift parameter must lie in [0, 1)");
    }
    return std::pow(1.0 - gamma, n) * (1.0 - a0_mod * a0_mod);
}

double normalized_modulus(const CoefficientSeries& s, int n, NormalizationScheme scheme) {
    double mod = std::abs(s.coeff(n));
    if (scheme == NormalizationScheme::PerOuter) return mod;
    if (mod == 0.0) return 0.0;  // avoid 0 * inf when the scale factor overflows
    return mod * std::pow(1.0 / (1.0 - s.gamma()), n);
}

CoefficientSeries unimodular_constant_series(double gamma, int order) {
    if (order < 0) {
        throw std::invalid_argument("order must be nonnegative");
    }
    std::vector<std::complex<double>> c(static_cast<std::size_t>(order) + 1,
                                        std::complex<double>(0.0, 0.0));
    c[0] = std::complex<double>(1.0, 0.0);
    return CoefficientSeries(gamma, std::move(c), 0.0, true);
}

}  // namespace bohrlab
