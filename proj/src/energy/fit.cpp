#include "neurodvfs/energy/fit.hpp"

#include "neurodvfs/errors.hpp"

#include <algorithm>
#include <cmath>

namespace neurodvfs::energy {

double VddFit::max_abs_residual() const noexcept
{
    double m = 0.0;
    for (double r : residuals) {
        m = std::max(m, std::abs(r));
    }
    return m;
}

VddFit fit_vdd_squared(std::span<const double> values, std::span<const double> voltages)
{
    if (values.size() != voltages.size()) {
        throw FitError("V_DD^2 fit: value and voltage counts differ");
    }
    if (values.size() < 2) {
        throw FitError("V_DD^2 fit needs at least two points");
    }
    const bool all_equal = std::all_of(voltages.begin(), voltages.end(),
                                       [&](double v) { return v == voltages.front(); });
    if (all_equal) {
        throw FitError("V_DD^2 fit is degenerate: all voltages are equal");
    }
    double num = 0.0;
    double den = 0.0;
    for (std::size_t i = 0; i < values.size(); ++i) {
        const double v2 = voltages[i] * voltages[i];
        num += values[i] * v2;
        den += v2 * v2;
    }
    VddFit fit;
    fit.e_norm = num / den;
    for (std::size_t i = 0; i < values.size(); ++i) {
        const double model = fit.e_norm * voltages[i] * voltages[i];
        fit.residuals.push_back((values[i] - model) / model);
    }
    return fit;
}

VddFit fit_vdd_squared_single(double value, double voltage)
{
    if (!(voltage > 0.0)) {
        throw FitError("V_DD^2 fit needs a positive voltage");
    }
    VddFit fit;
    fit.e_norm = value / (voltage * voltage);
    fit.residuals.push_back(0.0);
    return fit;
}

} // namespace neurodvfs::energy
