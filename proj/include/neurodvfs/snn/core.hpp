#pragma once

#include "neurodvfs/snn/neuron.hpp"
#include "neurodvfs/snn/ring_buffer.hpp"
#include "neurodvfs/snn/spike_fifo.hpp"
#include "neurodvfs/snn/synapse_row.hpp"
#include "neurodvfs/snn/workload_costs.hpp"

#include <cstdint>
#include <span>
#include <vector>

namespace neurodvfs::snn {

struct NeuronUpdate {
    std::vector<NeuronId> fired; ///< global ids, ascending
    std::uint64_t cycles = 0;
};

/// One processing element: its neurons, input buffers, spike queue and
/// synapse-row lookup table.
class Core {
public:
    Core(std::uint32_t id, NeuronId first_neuron, std::size_t neuron_count, LifParams params, RowTable rows,
         WorkloadCosts costs, std::uint64_t noise_seed);

    std::uint32_t id() const noexcept { return id_; }
    NeuronId first_neuron() const noexcept { return first_neuron_; }
    std::size_t neuron_count() const noexcept { return states_.size(); }

    const LifParams& params() const noexcept { return params_; }
    const WorkloadCosts& costs() const noexcept { return costs_; }
    const RowTable& rows() const noexcept { return rows_; }
    const std::vector<NeuronState>& states() const noexcept { return states_; }
    std::vector<NeuronState>& states() noexcept { return states_; }
    const InputRingBuffer& ring_buffer() const noexcept { return buffer_; }
    SpikeFifo& fifo() noexcept { return fifo_; }
    const SpikeFifo& fifo() const noexcept { return fifo_; }

    /// Row length for `source`; throws RoutingError if there is no row.
    std::size_t fan_out(NeuronId source) const;

    /// Decodes the source's row into the ring buffer. Returns
    /// c_pre_spike + fan_out * c_syn.
    std::uint64_t process_spike_event(NeuronId source);

    /// One timestep for every neuron: injects the current slot, integrates,
    /// zeroes the slot and advances the cursor. `forced` holds local
    /// indices that must fire this step. Returns n_neur * c_neur cycles.
    NeuronUpdate update_neurons(std::int64_t step, double dt_ms, std::span<const std::uint32_t> forced = {});

    /// Timestep with neuron processing disabled: the slot is discarded.
    void skip_neurons() { buffer_.skip(); }

    std::uint64_t synaptic_events() const noexcept { return synaptic_events_; }

private:
    std::uint32_t id_;
    NeuronId first_neuron_;
    LifParams params_;
    RowTable rows_;
    WorkloadCosts costs_;
    std::uint64_t noise_seed_;
    std::vector<NeuronState> states_;
    InputRingBuffer buffer_;
    SpikeFifo fifo_;
    std::uint64_t synaptic_events_ = 0;
    std::vector<bool> forced_mask_;
};

} // namespace neurodvfs::snn
