#include "neurodvfs/dvfs/workload.hpp"

#include "neurodvfs/errors.hpp"

#include <string>

namespace neurodvfs::dvfs {

namespace {

std::uint64_t row_size(const snn::RowTable& rows, snn::NeuronId source)
{
    const auto it = rows.find(source);
    if (it == rows.end()) {
        throw RoutingError("workload estimation: no synapse row for source " + std::to_string(source));
    }
    return it->second.words.size();
}

} // namespace

WorkloadEstimate estimate_workload_exact(std::span<const snn::SpikeEvent> fifo, const snn::RowTable& rows,
                                         const snn::WorkloadCosts& costs, std::uint64_t n_neur,
                                         std::span<const snn::NeuronId> preloaded)
{
    WorkloadEstimate est;
    for (const auto& event : fifo) {
        est.synapse_words += row_size(rows, event.source);
    }
    for (snn::NeuronId source : preloaded) {
        est.synapse_words += row_size(rows, source);
    }
    est.spikes = fifo.size() + preloaded.size();
    est.cycles = workload_cycles(costs, n_neur, est.spikes, est.synapse_words);
    est.overhead = fifo.size() * costs.c_est;
    return est;
}

} // namespace neurodvfs::dvfs
