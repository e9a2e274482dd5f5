#pragma once

#include "neurodvfs/snn/workload_costs.hpp"

#include <cstdint>
#include <limits>
#include <span>
#include <vector>

namespace neurodvfs::dvfs {

/// Marks a boundary that no spike count reaches.
inline constexpr std::uint64_t kNoThreshold = std::numeric_limits<std::uint64_t>::max();

/// Per-level capacities c_th (cycles per timestep) and the spike-count
/// boundaries l_th derived from them.
struct PlThresholds {
    std::vector<std::uint64_t> capacities;
    std::vector<std::uint64_t> spike_counts;
};

/// Prefix sums of descending-sorted fan-outs: entry l is the number of
/// synapse words of the l inputs with the largest fan-out.
std::vector<std::uint64_t> worst_case_words(std::span<const std::uint32_t> fanouts);

/// Worst-case workload for l received spikes, given precomputed prefix sums.
std::uint64_t worst_case_workload(std::span<const std::uint64_t> prefix_words, const snn::WorkloadCosts& costs,
                                  std::uint64_t n_neur, std::uint64_t l);

/// For each boundary capacity c_th,i, the first l whose worst-case workload
/// reaches c_th,i. kNoThreshold when even every input firing at once stays
/// below capacity.
std::vector<std::uint64_t> derive_worstcase_thresholds(std::span<const std::uint32_t> fanouts,
                                                       const snn::WorkloadCosts& costs, std::uint64_t n_neur,
                                                       std::span<const std::uint64_t> boundary_capacities);

/// Element-wise minimum over per-core thresholds: one conservative set
/// that is safe on every core.
std::vector<std::uint64_t> combine_chip_thresholds(const std::vector<std::vector<std::uint64_t>>& per_core);

} // namespace neurodvfs::dvfs
