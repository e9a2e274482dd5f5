#pragma once

#include "neurodvfs/snn/spike_fifo.hpp"
#include "neurodvfs/snn/synapse_row.hpp"
#include "neurodvfs/snn/workload_costs.hpp"

#include <cstdint>
#include <span>

namespace neurodvfs::dvfs {

struct WorkloadEstimate {
    std::uint64_t cycles = 0;        ///< c = c_neur,tot + c_syn,tot + c_pre-spike,tot + c_other
    std::uint64_t overhead = 0;      ///< l_fifo * c_est spent by the estimation loop itself
    std::uint64_t spikes = 0;        ///< l, FIFO entries plus preloaded spikes
    std::uint64_t synapse_words = 0; ///< sum of fan-outs

    std::uint64_t total() const noexcept { return cycles + overhead; }
};

/// Walks the FIFO and sums fan-outs from the row table. `preloaded` are
/// spikes known ahead of time (background input held in DRAM); they add
/// workload but cost nothing to estimate. Throws RoutingError for a source
/// without a row.
WorkloadEstimate estimate_workload_exact(std::span<const snn::SpikeEvent> fifo, const snn::RowTable& rows,
                                         const snn::WorkloadCosts& costs, std::uint64_t n_neur,
                                         std::span<const snn::NeuronId> preloaded = {});

/// c for l spikes whose fan-outs sum to `synapse_words`.
constexpr std::uint64_t workload_cycles(const snn::WorkloadCosts& costs, std::uint64_t n_neur, std::uint64_t spikes,
                                        std::uint64_t synapse_words) noexcept
{
    return n_neur * costs.c_neur + synapse_words * costs.c_syn + spikes * costs.c_pre_spike + costs.c_other;
}

} // namespace neurodvfs::dvfs
