#pragma once

#include "neurodvfs/dvfs/performance_level.hpp"

#include <optional>
#include <string>
#include <vector>

namespace neurodvfs::dvfs {

/// Power-management-controller sequencing for a level change. Every event
/// is timed off the reference clock; defaults correspond to 31 pre-charge
/// switches, which gives a supply change in 100 ns and a power-up in 1 us.
struct TransitionConfig {
    unsigned precharge_switches = 31;
    double clock_disable_ns = 10.0;
    double supply_select_ns = 10.0;
    double precharge_ns = 60.0;          ///< net pre-charge on a supply change
    double power_up_precharge_ns = 960.0; ///< net pre-charge when leaving power-shut-off
    double frequency_select_ns = 10.0;
    double clock_enable_ns = 10.0;

    double supply_change_latency() const noexcept
    {
        return clock_disable_ns + supply_select_ns + precharge_ns + frequency_select_ns + clock_enable_ns;
    }
    double power_up_latency() const noexcept
    {
        return clock_disable_ns + supply_select_ns + power_up_precharge_ns + frequency_select_ns + clock_enable_ns;
    }
    double frequency_change_latency() const noexcept { return frequency_select_ns + clock_enable_ns; }
};

enum class TransitionKind { None, FrequencyOnly, SupplyChange, PowerUp };

struct TransitionEvent {
    std::string name;
    double start_ns = 0.0;
    double duration_ns = 0.0;
};

/// `from` empty means the core is powered off.
TransitionKind classify_transition(const std::optional<PerformanceLevel>& from, const PerformanceLevel& to);

/// Ordered PMC events: clock disable, supply selection, net pre-charge,
/// frequency selection, clock enable. A frequency-only change keeps the
/// rail and skips the first three.
std::vector<TransitionEvent> transition_sequence(const std::optional<PerformanceLevel>& from,
                                                 const PerformanceLevel& to, const TransitionConfig& config);

/// Sum of the event durations of transition_sequence.
double transition_latency(const std::optional<PerformanceLevel>& from, const PerformanceLevel& to,
                          const TransitionConfig& config);

} // namespace neurodvfs::dvfs
