#pragma once

#include "neurodvfs/snn/workload_costs.hpp"

#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace neurodvfs::dvfs {

enum class TargetRole {
    Exact,      ///< thresholds must be reproduced exactly
    BestEffort, ///< contributes its residual to the objective
    Legacy      ///< hand-set thresholds; reported but ignored
};

const char* to_string(TargetRole role);

/// One network's per-core input fan-outs and the chip-level spike-count
/// thresholds it should produce.
struct CalibrationTarget {
    std::string name;
    std::vector<std::vector<std::uint32_t>> core_fanouts;
    std::uint64_t n_neur = 0; ///< neurons per core
    std::vector<std::uint64_t> l_th;
    TargetRole role = TargetRole::Exact;
};

/// Integer search space. c_other and c_est are not identifiable from
/// thresholds and are held fixed.
struct CalibrationGrid {
    std::uint64_t c_syn_min = 1;
    std::uint64_t c_syn_max = 60;
    std::uint64_t c_pre_min = 0;
    std::uint64_t c_pre_max = 2000;
    std::uint64_t c_pre_step = 1;
    std::uint64_t c_neur_min = 1;
    std::uint64_t c_neur_max = 1000;
    std::uint64_t c_other = 2500;
    std::uint64_t c_est = 20;
};

/// A measured operating point that ran in real time: its workload must
/// not exceed `capacity` cycles.
struct WorkloadBudget {
    std::string name;
    std::uint64_t n_neur = 0;
    std::uint64_t spikes = 0;
    std::uint64_t synapse_words = 0;
    std::uint64_t capacity = 0;
};

struct TargetOutcome {
    std::string name;
    TargetRole role = TargetRole::Exact;
    std::vector<std::uint64_t> wanted;
    std::vector<std::uint64_t> achieved;
    std::uint64_t residual = 0; ///< sum of |achieved - wanted| over boundaries
};

struct CalibrationResult {
    snn::WorkloadCosts costs;
    std::vector<TargetOutcome> outcomes;
    std::uint64_t total_residual = 0;
    /// Smallest distance, in cycles, from the chosen base workload to the
    /// edge of the interval that keeps the exact targets exact.
    std::uint64_t margin = 0;
    std::uint64_t feasible_points = 0;
};

/// Chip thresholds (element-wise min over cores) for one target under
/// `costs`.
std::vector<std::uint64_t> chip_thresholds(const CalibrationTarget& target, const snn::WorkloadCosts& costs,
                                           std::span<const std::uint64_t> boundary_capacities);

/// Grid search for costs whose worst-case thresholds reproduce every Exact
/// target and minimise the BestEffort residual; ties go to the point with
/// the widest margin. Throws CalibrationError when no grid point satisfies
/// the Exact targets and budgets or fewer than two non-legacy targets are
/// given.
CalibrationResult calibrate_costs(std::span<const CalibrationTarget> targets,
                                  std::span<const std::uint64_t> boundary_capacities,
                                  const CalibrationGrid& grid = {}, std::span<const WorkloadBudget> budgets = {});

} // namespace neurodvfs::dvfs
