#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "bohrlab/extremal.hpp"
#include "bohrlab/majorants.hpp"
#include "bohrlab/radius.hpp"

namespace bohrlab {

enum class TableFormat { Csv, Json };

/// CSV: one header row, then data rows with 15 significant digits. JSON: a single
/// object mirroring the record; identical inputs produce byte-identical output.
void emit_table(const RootCertificate& c, TableFormat f, std::ostream& out);
void emit_table(const MajorantValue& v, TableFormat f, std::ostream& out);
void emit_table(const MarginTable& t, TableFormat f, std::ostream& out);

struct VerifyCheck {
    std::string name;
    double residual;    // the quantity the check caps
    double threshold;
    bool pass;          // residual <= threshold
};

struct VerifyReport {
    std::uint64_t seed;
    std::vector<VerifyCheck> checks;

    bool all_pass() const;
};

/// Seeded property run: Schwarz-Pick coefficient bounds on random Blaschke
/// pullbacks across gamma in {0, 0.25, 0.5, 0.75}, attainment of every target
/// bound by the unimodular constant, and below-radius safety of the extremal
/// margin sweeps.
VerifyReport run_verify_suite(std::uint64_t seed);

void emit_table(const VerifyReport& r, TableFormat f, std::ostream& out);

/// Figure data, 512 samples per curve.
/// Boundary circles of Omega_gamma for gamma in {0, 0.2, 0.4, 0.5, 0.7}; rows
/// (gamma, theta, re, im).
void emit_boundary_circles(TableFormat f, std::ostream& out);
/// Concavity factor of the Cesaro upper envelope, -2 (1/(1-rho) + log(1-rho)/rho),
/// nonpositive on [0, 1); rows (rho, value).
void emit_cesaro_concavity(TableFormat f, std::ostream& out);
/// Left side of the Cesaro radius equation, 3 (1-rho) log(1-rho) + 2 rho, whose
/// single sign change on (0, 1) is the Cesaro radius; rows (rho, value).
void emit_cesaro_radius_equation(TableFormat f, std::ostream& out);

}  // namespace bohrlab
