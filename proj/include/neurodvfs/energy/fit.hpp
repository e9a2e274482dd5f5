#pragma once

#include <span>
#include <vector>

namespace neurodvfs::energy {

struct VddFit {
    double e_norm = 0.0;
    /// (measured - fitted) / fitted, per point.
    std::vector<double> residuals;

    double max_abs_residual() const noexcept;
};

/// Least-squares fit of E = e_norm * V^2. Throws FitError for fewer than
/// two points, mismatched lengths, or all voltages equal; a single point
/// is accepted only through fit_vdd_squared_single.
VddFit fit_vdd_squared(std::span<const double> values, std::span<const double> voltages);

/// One-point normalisation e_norm = E / V^2.
VddFit fit_vdd_squared_single(double value, double voltage);

} // namespace neurodvfs::energy
