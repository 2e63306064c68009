#pragma once

#include <complex>

namespace bohrlab {

/// Disk Omega_gamma = { z : |z + gamma/(1-gamma)| < 1/(1-gamma) } for 0 <= gamma < 1.
/// Omega_0 is the unit disk; as gamma grows the disk inflates to the left while its
/// boundary stays pinned at z = 1.
struct ShiftedDisk {
    double gamma;
    double center;   // -gamma/(1-gamma), on the real axis
    double radius;   // 1/(1-gamma)
};

/// Validates gamma and fills in the derived center and radius.
/// Throws std::domain_error if gamma is not in [0, 1).
ShiftedDisk make_shifted_disk(double gamma);

/// The affine change of variable w = gamma + (1-gamma) z.
/// |w| < 1 exactly when z lies in Omega_gamma; the center maps to 0 and 1 maps to 1.
std::complex<double> map_to_unit_disk(const ShiftedDisk& disk, std::complex<double> z);

/// Point of the boundary circle at angle theta, center + radius * e^{i theta}.
std::complex<double> boundary_point(const ShiftedDisk& disk, double theta);

}  // namespace bohrlab
