#include "bohrlab/majorants.hpp"

#include <cmath>
#include <cstddef>
#include <stdexcept>

namespace bohrlab {

namespace {

void validate_eval_args(double rho, double tol) {
    if (!(rho >= 0.0 && rho < 1.0)) {
        throw std::domain_error("radius must lie in [0, 1)");
    }
    if (!(tol > 0.0)) {
        throw std::invalid_argument("tolerance must be positive");
    }
}

[[noreturn]] void tail_too_large(const char* what, double tail_bound, double tol) {
    throw std::runtime_error(std::string(what) +
                             ": stored order cannot certify the requested tolerance"
                             " (tail bound " +
                             std::to_string(tail_bound) + " > " + std::to_string(tol) + ")");
}

// rho^(N+1) by repeated multiplication; gradual underflow to 0 only costs the
// tail bound amounts far below any usable tolerance.
double pow_next(double rho, int order) {
    double p = rho;
    for (int n = 0; n < order; ++n) p *= rho;
    return p;
}

}  // namespace

std::string BoundKind::name() const {
    switch (tag) {
        case Tag::PlainBohr: return "bohr";
        case Tag::Cesaro: return "cesaro";
        case Tag::Bernardi: return "bernardi";
        case Tag::Dft: return "dft";
    }
    throw std::logic_error("unknown operator tag");
}

MajorantValue bohr_majorant(const CoefficientSeries& s, double rho, double tol) {
    validate_eval_args(rho, tol);
    const int N = s.order();
    const double q = rho / (1.0 - s.gamma());
    // Term n is m_n rho^n = |a_n| q^n; pairing |a_n| with q^n keeps the product
    // representable when the factors alone under/overflow, and the zero guard
    // blocks 0 * inf once |a_n| has underflown entirely.
    double sum = 0.0;
    double q_pow = 1.0;
    for (int n = 0; n <= N; ++n) {
        double mod = std::abs(s.coeff(n));
        if (mod != 0.0) sum += mod * q_pow;
        q_pow *= q;
    }
    // Dropped part: sum_{n>N} m_n rho^n <= tail_cap rho^{N+1}/(1-rho).
    double tail_bound = s.tail_cap() * pow_next(rho, N) / (1.0 - rho);
    if (!(tail_bound <= tol)) tail_too_large("bohr majorant", tail_bound, tol);
    return {sum, N, tail_bound};
}

MajorantValue cesaro_majorant(const CoefficientSeries& s, double rho, double tol) {
    validate_eval_args(rho, tol);
    const int N = s.order();
    const double q = rho / (1.0 - s.gamma());
    // T_n = sum_{k<=n} m_k rho^n satisfies T_n = rho T_{n-1} + |a_n| q^n and stays
    // well scaled even when the normalized prefix sums P_n themselves would not.
    double sum = 0.0;
    double t = 0.0;
    double q_pow = 1.0;
    for (int n = 0; n <= N; ++n) {
        double mod = std::abs(s.coeff(n));
        t = rho * t + (mod != 0.0 ? mod * q_pow : 0.0);
        sum += t / (n + 1);
        q_pow *= q;
    }
    // Dropped part with P_n <= P_N + (n-N) tail_cap:
    //   sum_{n>N} P_N rho^n/(n+1)            <= rho T_N / ((N+2)(1-rho))
    //   sum_{n>N} tail_cap (n-N)/(n+1) rho^n <= tail_cap rho^{N+1}/(1-rho).
    double tail_bound = rho * t / ((N + 2) * (1.0 - rho)) +
                        s.tail_cap() * pow_next(rho, N) / (1.0 - rho);
    if (!(tail_bound <= tol)) tail_too_large("cesaro majorant", tail_bound, tol);
    return {sum, N, tail_bound};
}

MajorantValue bernardi_majorant(const CoefficientSeries& s, double beta, double rho,
                                double tol) {
    validate_eval_args(rho, tol);
    if (!(beta > 0.0)) {
        throw std::domain_error("weight must be positive");
    }
    const int N = s.order();
    const double q = rho / (1.0 - s.gamma());
    double sum = 0.0;
    double q_pow = 1.0;
    for (int n = 0; n <= N; ++n) {
        double mod = std::abs(s.coeff(n));
        if (mod != 0.0) sum += mod * q_pow / (n + beta);
        q_pow *= q;
    }
    double tail_bound =
        s.tail_cap() * pow_next(rho, N) / ((N + 1 + beta) * (1.0 - rho));
    if (!(tail_bound <= tol)) tail_too_large("bernardi majorant", tail_bound, tol);
    return {sum, N, tail_bound};
}

MajorantValue dft_majorant(const CoefficientSeries& s, double rho, double tol) {
    validate_eval_args(rho, tol);
    const int N = s.order();
    const double q = rho / (1.0 - s.gamma());
    if (!(q < 1.0)) {
        throw std::domain_error(
            "partial-sum majorant diverges: radius must stay below 1 - gamma");
    }
    // PerOuter: the whole prefix sum of raw moduli is divided by (1-gamma)^n once.
    double sum = 0.0;
    double prefix = 0.0;
    double q_pow = 1.0;
    for (int n = 0; n <= N; ++n) {
        prefix += std::abs(s.coeff(n));
        sum += prefix * q_pow;
        q_pow *= q;
    }
    // Dropped part with R_n <= R_N + (n-N) tail_cap (raw moduli obey
    // |a_k| <= tail_cap (1-gamma)^k <= tail_cap):
    double q_next = pow_next(q, N);
    double tail_bound = prefix * q_next / (1.0 - q) +
                        s.tail_cap() * q_next / ((1.0 - q) * (1.0 - q));
    if (s.bounded_by_one()) {
        // |a_k| <= 1 gives R_n <= n+1 and the closed form
        // sum_{n>N} (n+1) q^n = q^{N+1} ((N+2) - (N+1) q)/(1-q)^2.
        double alt = q_next * ((N + 2) - (N + 1) * q) / ((1.0 - q) * (1.0 - q));
        if (alt < tail_bound) tail_bound = alt;
    }
    if (!(tail_bound <= tol)) tail_too_large("dft majorant", tail_bound, tol);
    return {sum, N, tail_bound};
}

MajorantValue majorant(BoundKind op, const CoefficientSeries& s, double rho, double tol) {
    switch (op.tag) {
        case BoundKind::Tag::PlainBohr: return bohr_majorant(s, rho, tol);
        case BoundKind::Tag::Cesaro: return cesaro_majorant(s, rho, tol);
        case BoundKind::Tag::Bernardi: return bernardi_majorant(s, op.beta, rho, tol);
        case BoundKind::Tag::Dft: return dft_majorant(s, rho, tol);
    }
    throw std::logic_error("unknown operator tag");
}

std::vector<std::complex<double>> dft_coefficient_transform(
    std::span<const std::complex<double>> coeffs) {
    std::vector<std::complex<double>> out;
    out.reserve(coeffs.size());
    for (std::size_t n = 0; n < coeffs.size(); ++n) {
        std::complex<double> b(0.0, 0.0);
        for (std::size_t k = 0; k <= n; ++k) {
            double angle = -2.0 * M_PI * static_cast<double>(n) * static_cast<double>(k) /
                           static_cast<double>(n + 1);
            b += coeffs[k] * std::complex<double>(std::cos(angle), std::sin(angle));
        }
        out.push_back(b);
    }
    return out;
}

double target_bound(BoundKind op, double rho) {
    if (!(rho >= 0.0 && rho < 1.0)) {
        throw std::domain_error("radius must lie in [0, 1)");
    }
    switch (op.tag) {
        case BoundKind::Tag::PlainBohr: return 1.0;
        case BoundKind::Tag::Cesaro:
            return rho == 0.0 ? 1.0 : -std::log1p(-rho) / rho;
        case BoundKind::Tag::Bernardi:
            if (!(op.beta > 0.0)) throw std::domain_error("weight must be positive");
            return 1.0 / op.beta;
        case BoundKind::Tag::Dft: return 1.0 / (1.0 - rho);
    }
    throw std::logic_error("unknown operator tag");
}

int suggested_order(BoundKind op, double gamma, double rho, double tol) {
    if (!(gamma >= 0.0 && gamma < 1.0)) {
        throw std::domain_error("shift parameter must lie in [0, 1)");
    }
    if (!(rho >= 0.0 && rho < 1.0)) {
        throw std::domain_error("radius must lie in [0, 1)");
    }
    if (!(tol > 0.0)) {
        throw std::invalid_argument("tolerance must be positive");
    }
    if (op.tag == BoundKind::Tag::Dft && !(rho < 1.0 - gamma)) {
        throw std::domain_error(
            "partial-sum majorant diverges: radius must stay below 1 - gamma");
    }
    // Worst case over bounded-by-one series: normalized moduli and the tail cap
    // never exceed 1, raw moduli never exceed 1.
    auto bound = [&](int n) {
        double next = std::pow(rho, n + 1);
        switch (op.tag) {
            case BoundKind::Tag::PlainBohr: return next / (1.0 - rho);
            case BoundKind::Tag::Cesaro: return 2.0 * next / (1.0 - rho);
            case BoundKind::Tag::Bernardi:
                if (!(op.beta > 0.0)) throw std::domain_error("weight must be positive");
                return next / ((n + 1 + op.beta) * (1.0 - rho));
            case BoundKind::Tag::Dft: {
                double q = rho / (1.0 - gamma);
                double qn = std::pow(q, n + 1);
                return qn * ((n + 2) - (n + 1) * q) / ((1.0 - q) * (1.0 - q));
            }
        }
        throw std::logic_error("unknown operator tag");
    };
    if (bound(0) <= tol) return 0;
    int hi = 1;
    while (bound(hi) > tol) {
        if (hi > (1 << 28)) {
            throw std::runtime_error("tolerance unreachable at this radius");
        }
        hi *= 2;
    }
    int lo = hi / 2;  // bound(lo) > tol
    while (hi - lo > 1) {
        int mid = lo + (hi - lo) / 2;
        (bound(mid) > tol ? lo : hi) = mid;
    }
    return hi;
}

}  // namespace bohrlab
