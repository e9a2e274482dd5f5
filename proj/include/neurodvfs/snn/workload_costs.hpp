#pragma once

#include <cstdint>

namespace neurodvfs::snn {

/// Clock-cycle costs of the per-timestep kernel work.
struct WorkloadCosts {
    std::uint64_t c_neur = 0;      ///< per neuron state update
    std::uint64_t c_syn = 0;       ///< per synapse word
    std::uint64_t c_pre_spike = 0; ///< per received spike: row lookup + DMA
    std::uint64_t c_other = 0;     ///< fixed per timestep
    std::uint64_t c_est = 0;       ///< per FIFO entry in the exact-estimation loop

    friend bool operator==(const WorkloadCosts&, const WorkloadCosts&) = default;
};

} // namespace neurodvfs::snn
