#pragma once

#include "neurodvfs/snn/synapse_word.hpp"

#include <array>
#include <cstdint>
#include <vector>

namespace neurodvfs::snn {

/// Summed raw weights for one neuron in one delay slot.
struct SlotInput {
    std::uint32_t excitatory = 0;
    std::uint32_t inhibitory = 0;
};

/// 16-slot synaptic input buffer for all neurons of a core, sharing one
/// cursor. Slot `cursor` is the input for the current timestep; a weight
/// with delay d lands in slot (cursor + d) mod 16.
///
/// Accumulators saturate at UINT32_MAX instead of wrapping; saturation
/// events are counted.
class InputRingBuffer {
public:
    explicit InputRingBuffer(std::size_t neuron_count);

    std::size_t neuron_count() const noexcept { return neuron_count_; }
    unsigned cursor() const noexcept { return cursor_; }

    void add(unsigned target, unsigned delay, SynapseType type, std::uint16_t weight);

    const SlotInput& peek(unsigned target, unsigned delay = 0) const;

    /// Returns the current slot's inputs for every neuron, zeroes that slot
    /// and advances the cursor.
    std::vector<SlotInput> consume();

    /// Advances without reading (used when neuron processing is disabled);
    /// the discarded content is counted as consumed.
    void skip();

    std::uint64_t total_inserted() const noexcept { return inserted_; }
    std::uint64_t total_consumed() const noexcept { return consumed_; }
    std::uint64_t pending() const noexcept;
    std::uint64_t saturation_events() const noexcept { return saturations_; }

private:
    std::size_t index(unsigned slot, unsigned target) const noexcept { return slot * neuron_count_ + target; }

    std::size_t neuron_count_;
    unsigned cursor_ = 0;
    std::vector<SlotInput> slots_;
    std::uint64_t inserted_ = 0;
    std::uint64_t consumed_ = 0;
    std::uint64_t saturations_ = 0;
};

} // namespace neurodvfs::snn
