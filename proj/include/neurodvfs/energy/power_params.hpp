#pragma once

#include "neurodvfs/dvfs/performance_level.hpp"

#include <optional>
#include <vector>

namespace neurodvfs::energy {

/// Power-model parameters for one performance level. Values are
/// chip-aggregate over `chip_cores` PEs; per-core accounting charges a
/// 1/chip_cores share of the baseline and offset terms.
struct PlPower {
    double p_bl_leak_mw = 0.0;
    double p_bl_mw = 0.0;
    double e_neur0_nj = 0.0; ///< per timestep
    double e_neur_nj = 0.0;  ///< per neuron update
    double e_syn0_nj = 0.0;  ///< per timestep
    double e_syn_nj = 0.0;   ///< per synaptic event

    friend bool operator==(const PlPower&, const PlPower&) = default;
};

struct ReferencePoint {
    double voltage = 0.0;
    double frequency_hz = 0.0;
    PlPower power;
};

/// Measured operating points the model interpolates between.
struct ReferencePowerTable {
    std::vector<ReferencePoint> points; ///< ascending voltage
    unsigned chip_cores = 4;

    /// The three measured levels of the 28 nm prototype (0.70/0.85/1.00 V).
    static ReferencePowerTable measured();
};

/// Parameters at an arbitrary (V, f). Exact at reference points. Between
/// them: leakage is linear in V, the dynamic baseline is k(V) V^2 f and
/// every energy term is x(V) V^2, with k and x piecewise linear in V.
/// Throws ConfigError outside the table's voltage range.
PlPower interpolate_power(const ReferencePowerTable& table, double voltage, double frequency_hz);

/// Baseline power of a reduced-frequency sublevel on the parent's rail:
/// leakage plus the parent's dynamic baseline scaled linearly by f.
double dfs_baseline_power(const PlPower& parent, double parent_frequency_hz, double dfs_frequency_hz);

class PowerModelParams {
public:
    PowerModelParams() = default;
    /// Throws ConfigError if any invariant fails (negative value, leakage
    /// above baseline, series decreasing with level).
    PowerModelParams(std::vector<PlPower> levels, std::optional<double> dfs_idle_mw, unsigned chip_cores,
                     double infrastructure_mw = 48.2);

    /// Parameters for every level of `set`, plus the DFS idle baseline.
    static PowerModelParams for_pl_set(const dvfs::PlSet& set, const ReferencePowerTable& table,
                                       double infrastructure_mw = 48.2);

    const PlPower& at(unsigned pl) const; ///< 1-based; throws ConfigError
    std::size_t size() const noexcept { return levels_.size(); }
    const std::vector<PlPower>& levels() const noexcept { return levels_; }
    const std::optional<double>& dfs_idle_mw() const noexcept { return dfs_idle_mw_; }
    unsigned chip_cores() const noexcept { return chip_cores_; }
    double infrastructure_mw() const noexcept { return infrastructure_mw_; }

private:
    std::vector<PlPower> levels_;
    std::optional<double> dfs_idle_mw_;
    unsigned chip_cores_ = 4;
    double infrastructure_mw_ = 48.2;
};

} // namespace neurodvfs::energy
