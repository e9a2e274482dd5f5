#include "neurodvfs/dvfs/transition.hpp"

namespace neurodvfs::dvfs {

TransitionKind classify_transition(const std::optional<PerformanceLevel>& from, const PerformanceLevel& to)
{
    if (!from) {
        return TransitionKind::PowerUp;
    }
    if (from->voltage == to.voltage) {
        return from->frequency_hz == to.frequency_hz ? TransitionKind::None : TransitionKind::FrequencyOnly;
    }
    return TransitionKind::SupplyChange;
}

std::vector<TransitionEvent> transition_sequence(const std::optional<PerformanceLevel>& from,
                                                 const PerformanceLevel& to, const TransitionConfig& config)
{
    std::vector<TransitionEvent> events;
    double t = 0.0;
    auto emit = [&](const char* name, double duration) {
        events.push_back({name, t, duration});
        t += duration;
    };
    switch (classify_transition(from, to)) {
    case TransitionKind::None:
        break;
    case TransitionKind::FrequencyOnly:
        emit("frequency_select", config.frequency_select_ns);
        emit("clock_enable", config.clock_enable_ns);
        break;
    case TransitionKind::SupplyChange:
    case TransitionKind::PowerUp: {
        const bool power_up = !from.has_value();
        emit("clock_disable", config.clock_disable_ns);
        emit("supply_select", config.supply_select_ns);
        emit("net_precharge", power_up ? config.power_up_precharge_ns : config.precharge_ns);
        emit("frequency_select", config.frequency_select_ns);
        emit("clock_enable", config.clock_enable_ns);
        break;
    }
    }
    return events;
}

double transition_latency(const std::optional<PerformanceLevel>& from, const PerformanceLevel& to,
                          const TransitionConfig& config)
{
    double total = 0.0;
    for (const auto& e : transition_sequence(from, to, config)) {
        total += e.duration_ns;
    }
    return total;
}

} // namespace neurodvfs::dvfs
