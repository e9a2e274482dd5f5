#include "neurodvfs/snn/core.hpp"

#include "neurodvfs/errors.hpp"
#include "neurodvfs/rng.hpp"

#include <string>

namespace neurodvfs::snn {

Core::Core(std::uint32_t id, NeuronId first_neuron, std::size_t neuron_count, LifParams params, RowTable rows,
           WorkloadCosts costs, std::uint64_t noise_seed)
    : id_(id),
      first_neuron_(first_neuron),
      params_(params),
      rows_(std::move(rows)),
      costs_(costs),
      noise_seed_(noise_seed),
      states_(neuron_count, resting_state(params)),
      buffer_(neuron_count),
      forced_mask_(neuron_count, false)
{
    if (neuron_count > kMaxTargets) {
        throw NetworkError("core " + std::to_string(id) + " has " + std::to_string(neuron_count) +
                           " neurons; the synapse word addresses at most 256");
    }
}

std::size_t Core::fan_out(NeuronId source) const
{
    const auto it = rows_.find(source);
    if (it == rows_.end()) {
        throw RoutingError("core " + std::to_string(id_) + " has no synapse row for source " + std::to_string(source));
    }
    return it->second.words.size();
}

std::uint64_t Core::process_spike_event(NeuronId source)
{
    const auto it = rows_.find(source);
    if (it == rows_.end()) {
        throw RoutingError("core " + std::to_string(id_) + " has no synapse row for source " + std::to_string(source));
    }
    const SynapseRow& row = it->second;
    for (std::uint32_t raw : row.words) {
        const SynapseWord w = decode(raw);
        buffer_.add(w.target, w.delay, w.type, w.weight);
    }
    synaptic_events_ += row.words.size();
    return costs_.c_pre_spike + row.words.size() * costs_.c_syn;
}

NeuronUpdate Core::update_neurons(std::int64_t step, double dt_ms, std::span<const std::uint32_t> forced)
{
    for (std::uint32_t local : forced) {
        if (local >= states_.size()) {
            throw NetworkError("forced neuron " + std::to_string(local) + " out of range on core " +
                               std::to_string(id_));
        }
        forced_mask_[local] = true;
    }

    const std::vector<SlotInput> input = buffer_.consume();
    NeuronUpdate result;
    const bool noisy = params_.noise_std != 0.0 || params_.noise_mean != 0.0;
    for (std::size_t n = 0; n < states_.size(); ++n) {
        const NeuronId gid = first_neuron_ + static_cast<NeuronId>(n);
        double noise = 0.0;
        if (noisy) {
            noise = params_.noise_mean +
                    params_.noise_std * normal_at(noise_seed_, gid, static_cast<std::uint64_t>(step));
        }
        if (step_neuron(states_[n], params_, input[n], noise, dt_ms, forced_mask_[n])) {
            result.fired.push_back(gid);
        }
    }
    for (std::uint32_t local : forced) {
        forced_mask_[local] = false;
    }
    result.cycles = states_.size() * costs_.c_neur;
    return result;
}

} // namespace neurodvfs::snn
