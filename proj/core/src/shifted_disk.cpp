#include "bohrlab/shifted_disk.hpp"

#include <cmath>
#include <stdexcept>

namespace bohrlab {

ShiftedDisk make_shifted_disk(double gamma) {
    if (!(gamma >= 0.0 && gamma < 1.0)) {
        throw std::domain_error("shift parameter must lie in [0, 1)");
    }
    ShiftedDisk d;
    d.gamma = gamma;
    d.radius = 1.0 / (1.0 - gamma);
    // radius - 1 is exact in binary64 for radius in [1, 2^53], so deriving the
    // center from the radius keeps center + radius == 1 without rounding.
    d.center = 1.0 - d.radius;
    return d;
}

std::complex<double> map_to_unit_disk(const ShiftedDisk& disk, std::complex<double> z) {
    return std::complex<double>(disk.gamma, 0.0) + (1.0 - disk.gamma) * z;
}

std::complex<double> boundary_point(const ShiftedDisk& disk, double theta) {
    return std::complex<double>(disk.center, 0.0) +
           disk.radius * std::complex<double>(std::cos(theta), std::sin(theta));
}

}  // namespace bohrlab
