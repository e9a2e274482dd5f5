#pragma once

#include "neurodvfs/sim/explore.hpp"
#include "neurodvfs/sim/harness.hpp"
#include "neurodvfs/sim/histogram.hpp"

#include <iosfwd>
#include <string>

#include <json.hpp>

namespace neurodvfs::sim {

/// Shortest decimal form that round-trips.
std::string format_number(double x);

/// time_ms,neuron_id
void write_raster_csv(std::ostream& out, const RunResult& result);
/// k,core,l_received,l_fifo,estimated_c,executed_c,pl,t_sp_ms,
/// deadline_violation,realtime_risk,transition_ns,e_baseline_active_nj,
/// e_baseline_idle_nj,e_neuron_nj,e_synapse_nj,e_total_nj,spikes_sent,
/// synaptic_events
void write_records_csv(std::ostream& out, const RunResult& result);
/// pl,bin_start_ms,bin_end_ms,count
void write_histogram_csv(std::ostream& out, const PlHistogram& histogram);
/// variant,levels,dfs,thresholds,pe_mw,baseline_mw,neuron_mw,synapse_mw,
/// reduction_pct,pl_fractions,deadline_violations
void write_exploration_csv(std::ostream& out, const Exploration& exploration);

/// Headline numbers of a run: power, level usage, violations, counters.
nlohmann::json summary_json(const RunResult& result);
nlohmann::json to_json(const Exploration& exploration);

} // namespace neurodvfs::sim
