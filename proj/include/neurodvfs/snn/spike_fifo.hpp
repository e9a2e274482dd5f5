#pragma once

#include "neurodvfs/snn/synapse_row.hpp"

#include <cstdint>
#include <deque>
#include <vector>

namespace neurodvfs::snn {

struct SpikeEvent {
    NeuronId source = 0;
    std::int64_t arrival_cycle = 0;

    friend bool operator==(const SpikeEvent&, const SpikeEvent&) = default;
};

/// Hardware spike queue. Spikes pushed during cycle k become visible to
/// the core only in cycle k + 1.
class SpikeFifo {
public:
    void push(NeuronId source, std::int64_t arrival_cycle);

    /// Number of entries that processing in `cycle` may see.
    std::size_t visible(std::int64_t cycle) const noexcept;

    /// Removes and returns every entry that arrived before `cycle`, in
    /// arrival order. Entries from `cycle` itself stay queued.
    std::vector<SpikeEvent> drain(std::int64_t cycle);

    std::size_t size() const noexcept { return queue_.size(); }
    bool empty() const noexcept { return queue_.empty(); }

private:
    std::deque<SpikeEvent> queue_;
};

} // namespace neurodvfs::snn
