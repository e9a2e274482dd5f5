#pragma once

#include "neurodvfs/bench/network_spec.hpp"
#include "neurodvfs/dvfs/calibration.hpp"

#include <cstdint>
#include <vector>

namespace neurodvfs::sim {

/// Per-core fan-outs of `network` as a calibration target.
dvfs::CalibrationTarget target_from_network(const bench::NetworkSpec& network, std::vector<std::uint64_t> l_th,
                                            dvfs::TargetRole role);

/// The published spike-count thresholds: bursting (47, 214) exact, async
/// (47, 229) best effort, synfire (20, 100) hand-set and ignored.
std::vector<dvfs::CalibrationTarget> standard_targets(std::uint64_t seed);

/// The locally connected network at 16,000 synaptic events per ms ran in
/// real time at PL1: 50 spikes of fan-out 80 on each 80-neuron core.
std::vector<dvfs::WorkloadBudget> standard_budgets();

} // namespace neurodvfs::sim
