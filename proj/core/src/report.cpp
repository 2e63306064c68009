#include "bohrlab/report.hpp"

#include <cmath>
#include <cstdio>
#include <ostream>
#include <random>

#include <json.hpp>

#include "bohrlab/blaschke.hpp"
#include "bohrlab/shifted_disk.hpp"

namespace bohrlab {

namespace {

using ordered_json = nlohmann::ordered_json;

std::string fmt(double v) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.15g", v);
    return buf;
}

void dump(const ordered_json& j, std::ostream& out) { out << j.dump(2) << '\n'; }

// Concavity factor of the Cesaro upper envelope. The closed form
// -2 (1/(1-rho) + log(1-rho)/rho) cancels badly near 0, where the equivalent
// series -2 sum_{n>=1} n/(n+1) rho^n is cheap and sign-definite.
double cesaro_concavity_value(double rho) {
    if (rho == 0.0) return 0.0;
    if (rho < 0.25) {
        double sum = 0.0;
        double rho_pow = rho;
        for (int n = 1;; ++n) {
            sum += rho_pow * n / (n + 1);
            rho_pow *= rho;
            if (rho_pow / (1.0 - rho) < 1e-16) break;
        }
        return -2.0 * sum;
    }
    return -2.0 * (1.0 / (1.0 - rho) + std::log1p(-rho) / rho);
}

}  // namespace

void emit_table(const RootCertificate& c, TableFormat f, std::ostream& out) {
    if (f == TableFormat::Csv) {
        out << "root,lo,hi,residual_at_root,iterations\n"
            << fmt(c.root) << ',' << fmt(c.lo) << ',' << fmt(c.hi) << ','
            << fmt(c.residual_at_root) << ',' << c.iterations << '\n';
        return;
    }
    ordered_json j;
    j["root"] = c.root;
    j["lo"] = c.lo;
    j["hi"] = c.hi;
    j["residual_at_root"] = c.residual_at_root;
    j["iterations"] = c.iterations;
    dump(j, out);
}

void emit_table(const MajorantValue& v, TableFormat f, std::ostream& out) {
    if (f == TableFormat::Csv) {
        out << "value,truncation_order,tail_bound\n"
            << fmt(v.value) << ',' << v.truncation_order << ',' << fmt(v.tail_bound)
            << '\n';
        return;
    }
    ordered_json j;
    j["value"] = v.value;
    j["truncation_order"] = v.truncation_order;
    j["tail_bound"] = v.tail_bound;
    dump(j, out);
}

void emit_table(const MarginTable& t, TableFormat f, std::ostream& out) {
    if (f == TableFormat::Csv) {
        out << "operator,a,rho,margin\n";
        for (std::size_t i = 0; i < t.a_grid.size(); ++i) {
            for (std::size_t j = 0; j < t.rho_grid.size(); ++j) {
                out << t.op.name() << ',' << fmt(t.a_grid[i]) << ',' << fmt(t.rho_grid[j])
                    << ',' << fmt(t.margins[i * t.rho_grid.size() + j]) << '\n';
            }
        }
        return;
    }
    ordered_json j;
    j["operator"] = t.op.name();
    j["a_grid"] = t.a_grid;
    j["rho_grid"] = t.rho_grid;
    ordered_json rows = ordered_json::array();
    for (std::size_t i = 0; i < t.a_grid.size(); ++i) {
        ordered_json row = ordered_json::array();
        for (std::size_t k = 0; k < t.rho_grid.size(); ++k) {
            row.push_back(t.margins[i * t.rho_grid.size() + k]);
        }
        rows.push_back(std::move(row));
    }
    j["margins"] = std::move(rows);
    dump(j, out);
}

bool VerifyReport::all_pass() const {
    for (const auto& c : checks) {
        if (!c.pass) return false;
    }
    return true;
}

VerifyReport run_verify_suite(std::uint64_t seed) {
    VerifyReport report;
    report.seed = seed;
    auto add = [&report](std::string name, double residual, double threshold) {
        report.checks.push_back({std::move(name), residual, threshold, residual <= threshold});
    };

    // Coefficient bounds of random products, pulled back to each disk.
    const double gammas[] = {0.0, 0.25, 0.5, 0.75};
    std::mt19937_64 rng(seed);
    for (double gamma : gammas) {
        double worst = -1.0;
        for (int trial = 0; trial < 250; ++trial) {
            BlaschkeSpec spec = random_blaschke_spec(rng);
            CoefficientSeries unit = blaschke_taylor(spec, 64);
            CoefficientSeries pulled = compose_affine_pullback(unit, gamma);
            worst = std::max(worst, check_coefficient_bounds(pulled).max_violation);
        }
        add("coefficient-bounds-gamma-" + fmt(gamma), worst, 1e-9);
    }

    // The unimodular constant attains every target bound.
    const double rhos[] = {0.1, 0.3, 0.5, 0.9};
    const BoundKind ops[] = {BoundKind::plain_bohr(), BoundKind::cesaro(),
                             BoundKind::bernardi(1.0), BoundKind::dft()};
    for (const BoundKind& op : ops) {
        for (double rho : rhos) {
            int order = suggested_order(op, 0.0, rho, 1e-13);
            CoefficientSeries one = unimodular_constant_series(0.0, order);
            double gap =
                std::abs(majorant(op, one, rho, 1e-13).value - target_bound(op, rho));
            add("attainment-" + op.name() + "-rho-" + fmt(rho), gap, 1e-12);
        }
    }

    // Strictly negative extremal margins just below each sharp radius.
    struct Probe {
        BoundKind op;
        RadiusProblem problem;
    };
    const Probe probes[] = {
        {BoundKind::cesaro(), RadiusProblem::cesaro()},
        {BoundKind::bernardi(1.0), RadiusProblem::bernardi(1.0)},
        {BoundKind::dft(), RadiusProblem::dft()},
    };
    const double a_grid[] = {0.9, 0.99, 0.999, 0.9999};
    for (const Probe& probe : probes) {
        double rho = radius_for(probe.problem).root - 0.01;
        double worst = -1.0;
        for (double a : a_grid) {
            worst = std::max(worst, sharpness_margin(probe.op, {a, 0.0}, rho));
        }
        add("below-radius-" + probe.op.name(), worst, -1e-6);
    }
    return report;
}

void emit_table(const VerifyReport& r, TableFormat f, std::ostream& out) {
    if (f == TableFormat::Csv) {
        out << "seed,name,residual,threshold,pass\n";
        for (const auto& c : r.checks) {
            out << r.seed << ',' << c.name << ',' << fmt(c.residual) << ','
                << fmt(c.threshold) << ',' << (c.pass ? "true" : "false") << '\n';
        }
        return;
    }
    ordered_json j;
    j["seed"] = r.seed;
    j["all_pass"] = r.all_pass();
    ordered_json checks = ordered_json::array();
    for (const auto& c : r.checks) {
        ordered_json jc;
        jc["name"] = c.name;
        jc["residual"] = c.residual;
        jc["threshold"] = c.threshold;
        jc["pass"] = c.pass;
        checks.push_back(std::move(jc));
    }
    j["checks"] = std::move(checks);
    dump(j, out);
}

void emit_boundary_circles(TableFormat f, std::ostream& out) {
    const double gammas[] = {0.0, 0.2, 0.4, 0.5, 0.7};
    const int samples = 512;
    if (f == TableFormat::Csv) {
        out << "gamma,theta,re,im\n";
        for (double gamma : gammas) {
            ShiftedDisk disk = make_shifted_disk(gamma);
            for (int k = 0; k < samples; ++k) {
                double theta = 2.0 * M_PI * k / samples;
                auto z = boundary_point(disk, theta);
                out << fmt(gamma) << ',' << fmt(theta) << ',' << fmt(z.real()) << ','
                    << fmt(z.imag()) << '\n';
            }
        }
        return;
    }
    ordered_json j;
    j["columns"] = {"gamma", "theta", "re", "im"};
    ordered_json rows = ordered_json::array();
    for (double gamma : gammas) {
        ShiftedDisk disk = make_shifted_disk(gamma);
        for (int k = 0; k < samples; ++k) {
            double theta = 2.0 * M_PI * k / samples;
            auto z = boundary_point(disk, theta);
            rows.push_back({gamma, theta, z.real(), z.imag()});
        }
    }
    j["rows"] = std::move(rows);
    dump(j, out);
}

void emit_cesaro_concavity(TableFormat f, std::ostream& out) {
    const int samples = 512;
    if (f == TableFormat::Csv) {
        out << "rho,value\n";
        for (int k = 0; k < samples; ++k) {
            double rho = static_cast<double>(k) / samples;
            out << fmt(rho) << ',' << fmt(cesaro_concavity_value(rho)) << '\n';
        }
        return;
    }
    ordered_json j;
    j["columns"] = {"rho", "value"};
    ordered_json rows = ordered_json::array();
    for (int k = 0; k < samples; ++k) {
        double rho = static_cast<double>(k) / samples;
        rows.push_back({rho, cesaro_concavity_value(rho)});
    }
    j["rows"] = std::move(rows);
    dump(j, out);
}

void emit_cesaro_radius_equation(TableFormat f, std::ostream& out) {
    const int samples = 512;
    // 3 (1-rho) log(1-rho) + 2 rho, the negated Cesaro defining residual, extended
    // by its limit 0 at rho = 0 so the grid can start there.
    auto value = [](double rho) {
        return 3.0 * (1.0 - rho) * std::log1p(-rho) + 2.0 * rho;
    };
    if (f == TableFormat::Csv) {
        out << "rho,value\n";
        for (int k = 0; k < samples; ++k) {
            double rho = static_cast<double>(k) / samples;
            out << fmt(rho) << ',' << fmt(value(rho)) << '\n';
        }
        return;
    }
    ordered_json j;
    j["columns"] = {"rho", "value"};
    ordered_json rows = ordered_json::array();
    for (int k = 0; k < samples; ++k) {
        double rho = static_cast<double>(k) / samples;
        rows.push_back({rho, value(rho)});
    }
    j["rows"] = std::move(rows);
    dump(j, out);
}

}  // namespace bohrlab
