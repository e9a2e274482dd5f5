#include "neurodvfs/snn/spike_fifo.hpp"

#include "neurodvfs/errors.hpp"

namespace neurodvfs::snn {

void SpikeFifo::push(NeuronId source, std::int64_t arrival_cycle)
{
    if (!queue_.empty() && queue_.back().arrival_cycle > arrival_cycle) {
        throw Error("spike FIFO entries must arrive in non-decreasing cycle order");
    }
    queue_.push_back({source, arrival_cycle});
}

std::size_t SpikeFifo::visible(std::int64_t cycle) const noexcept
{
    std::size_t n = 0;
    for (const auto& e : queue_) {
        if (e.arrival_cycle >= cycle) {
            break;
        }
        ++n;
    }
    return n;
}

std::vector<SpikeEvent> SpikeFifo::drain(std::int64_t cycle)
{
    std::vector<SpikeEvent> out;
    while (!queue_.empty() && queue_.front().arrival_cycle < cycle) {
        out.push_back(queue_.front());
        queue_.pop_front();
    }
    return out;
}

} // namespace neurodvfs::snn
