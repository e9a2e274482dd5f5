#pragma once

#include "neurodvfs/dvfs/performance_level.hpp"
#include "neurodvfs/dvfs/transition.hpp"
#include "neurodvfs/energy/power_params.hpp"
#include "neurodvfs/snn/workload_costs.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

namespace neurodvfs::sim {

enum class PolicyKind { Exact, CountThreshold, Fixed };

struct Policy {
    PolicyKind kind = PolicyKind::CountThreshold;
    unsigned fixed_pl = 0; ///< Fixed only, 1-based

    /// "exact", "count" or "fixed:PLn". Throws ConfigError otherwise.
    static Policy parse(const std::string& text);
    std::string to_string() const;
    bool is_dvfs() const noexcept { return kind != PolicyKind::Fixed; }

    friend bool operator==(const Policy&, const Policy&) = default;
};

/// Which kernel stages execute. The reduced modes reproduce the runs of
/// the differential power measurement.
enum class RunMode {
    Full,          ///< neurons and spike processing
    NoSpikes,      ///< neurons update, spikes are neither sent nor processed
    EmptyHandlers, ///< timer handler runs with nothing in it
    CoresOff       ///< processing elements power-gated
};

const char* to_string(RunMode mode);

/// Active level and processing time of one core in one cycle.
struct ScheduleEntry {
    unsigned pl = 1;
    double t_sp_ms = 0.0;
    friend bool operator==(const ScheduleEntry&, const ScheduleEntry&) = default;
};

/// Indexed [core][k].
using Schedule = std::vector<std::vector<ScheduleEntry>>;

struct SimConfig {
    double t_sys_ms = 1.0;
    std::int64_t k_max = 1000;
    Policy policy;
    dvfs::PlSet pl_set = dvfs::PlSet::standard();
    snn::WorkloadCosts costs;
    energy::ReferencePowerTable power_table = energy::ReferencePowerTable::measured();
    double infrastructure_mw = 48.2;
    /// Overrides the worst-case spike-count thresholds of the count policy.
    std::optional<std::vector<std::uint64_t>> thresholds;
    /// Idle on the DFS sublevel when the PL set has one (DVFS policies only).
    bool idle_on_dfs = true;
    bool charge_transitions = false;
    dvfs::TransitionConfig transitions;
    std::uint64_t seed = 1;
    RunMode mode = RunMode::Full;
    /// Forces every core's level and processing time, e.g. the schedule of
    /// a full run imposed on its reduced counterparts.
    std::optional<Schedule> imposed;

    SimConfig();

    /// Throws ConfigError on any violated invariant.
    void validate() const;
};

/// Calibrated per-task cycle costs of the simulation kernel.
snn::WorkloadCosts default_costs();

/// "1pl", "2pl", "3pl", "3pl+dfs" or "4pl" (case-insensitive). Throws
/// ConfigError otherwise.
dvfs::PlSet parse_pl_set(const std::string& name);

nlohmann::json to_json(const snn::WorkloadCosts& costs);
snn::WorkloadCosts costs_from_json(const nlohmann::json& j, const snn::WorkloadCosts& defaults);
nlohmann::json to_json(const dvfs::PlSet& set);
dvfs::PlSet pl_set_from_json(const nlohmann::json& j);

/// Config schema: every key optional, unknown keys rejected.
nlohmann::json to_json(const SimConfig& config);
SimConfig sim_config_from_json(const nlohmann::json& j);

} // namespace neurodvfs::sim
