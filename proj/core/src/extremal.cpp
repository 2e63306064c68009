#include "bohrlab/extremal.hpp"

#include <cmath>
#include <cstddef>
#include <stdexcept>

namespace bohrlab {

namespace {

void validate_params(double a, double gamma) {
    if (!(a > 0.0 && a <= 1.0)) {
        throw std::domain_error("extremal parameter must lie in (0, 1]");
    }
    if (!(gamma >= 0.0 && gamma < 1.0)) {
        throw std::domain_error("shift parameter must lie in [0, 1)");
    }
}

// log(1 - a rho)/(a rho), series branch below a = 1e-4: the direct quotient loses
// accuracy near the removable singularity at a = 0. Error is O(a^3 rho^4) < 1e-13.
double log_ratio(double a, double rho) {
    if (a < 1e-4) {
        return -(1.0 + a * rho / 2.0 + a * a * rho * rho / 3.0);
    }
    return std::log1p(-a * rho) / (a * rho);
}

}  // namespace

CoefficientSeries extremal_coeffs(const ExtremalParams& p, int order) {
    validate_params(p.a, p.gamma);
    if (order < 0) {
        throw std::invalid_argument("order must be nonnegative");
    }
    std::vector<std::complex<double>> c(static_cast<std::size_t>(order) + 1);
    c[0] = std::complex<double>(p.a, 0.0);
    double term = (1.0 - p.a * p.a) * (1.0 - p.gamma);
    double ratio = p.a * (1.0 - p.gamma);
    for (int n = 1; n <= order; ++n) {
        c[static_cast<std::size_t>(n)] = std::complex<double>(term, 0.0);
        term *= ratio;
    }
    // Normalized moduli a^(n-1)(1-a^2) decrease in n; the first dropped index
    // gives the per-index cap.
    double tail_cap = (1.0 - p.a * p.a) * std::pow(p.a, order);
    return CoefficientSeries(p.gamma, std::move(c), tail_cap, true);
}

double extremal_cesaro_closed_form(double a, double rho) {
    validate_params(a, 0.0);
    if (!(rho >= 0.0 && rho < 1.0)) {
        throw std::domain_error("radius must lie in [0, 1)");
    }
    if (rho == 0.0) return a;
    return -(1.0 + 2.0 * a) / rho * std::log1p(-rho) + (1.0 + a) * log_ratio(a, rho);
}

double sharpness_defect(BoundKind op, double a, double rho) {
    validate_params(a, 0.0);
    if (!(rho >= 0.0 && rho < 1.0)) {
        throw std::domain_error("radius must lie in [0, 1)");
    }
    switch (op.tag) {
        case BoundKind::Tag::Cesaro: {
            if (rho == 0.0) return 0.0;
            return -(3.0 - a) / rho * std::log1p(-rho) - 2.0 * (1.0 - a) / (1.0 - rho) +
                   (1.0 + a) * log_ratio(a, rho);
        }
        case BoundKind::Tag::Bernardi: {
            if (!(op.beta > 0.0)) throw std::domain_error("weight must be positive");
            // (1-a) sum_{n>=1} ((1+a) a^(n-1) - 2) rho^n/(n+beta); pulling the
            // (1-a) factor out keeps the sum well conditioned as a -> 1.
            if (rho == 0.0) return 0.0;
            double sum = 0.0;
            double a_pow = 1.0;
            double rho_pow = rho;
            double scale = 1.0 / (1.0 - rho);
            for (int n = 1;; ++n) {
                sum += ((1.0 + a) * a_pow - 2.0) * rho_pow / (n + op.beta);
                a_pow *= a;
                rho_pow *= rho;
                if (2.0 * rho_pow * scale / (n + 1 + op.beta) < 1e-14) break;
            }
            return (1.0 - a) * sum;
        }
        case BoundKind::Tag::Dft:
            return 2.0 * a - (1.0 + a) * (1.0 - rho) / (1.0 - a * rho);
        case BoundKind::Tag::PlainBohr:
            break;
    }
    throw std::invalid_argument("no defect decomposition for this operator");
}

double sharpness_margin(BoundKind op, const ExtremalParams& p, double rho) {
    constexpr double kTol = 1e-12;
    int order = suggested_order(op, p.gamma, rho, kTol);
    CoefficientSeries s = extremal_coeffs(p, order);
    return majorant(op, s, rho, kTol).value - target_bound(op, rho);
}

MarginTable sweep_margins(BoundKind op, double gamma, const std::vector<double>& a_grid,
                          const std::vector<double>& rho_grid) {
    auto validate_grid = [](const std::vector<double>& g, const char* what) {
        if (g.empty()) {
            throw std::invalid_argument(std::string(what) + " grid must be nonempty");
        }
        double prev = 0.0;
        for (double v : g) {
            if (!(v > prev && v < 1.0)) {
                throw std::invalid_argument(std::string(what) +
                                            " grid must increase strictly inside (0, 1)");
            }
            prev = v;
        }
    };
    validate_grid(a_grid, "extremal parameter");
    validate_grid(rho_grid, "radius");
    MarginTable table;
    table.op = op;
    table.a_grid = a_grid;
    table.rho_grid = rho_grid;
    table.margins.reserve(a_grid.size() * rho_grid.size());
    for (double a : a_grid) {
        ExtremalParams p{a, gamma};
        for (double rho : rho_grid) {
            table.margins.push_back(sharpness_margin(op, p, rho));
        }
    }
    return table;
}

}  // namespace bohrlab
