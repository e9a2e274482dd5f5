#pragma once

#include "neurodvfs/bench/network_spec.hpp"

#include <cstdint>

namespace neurodvfs::bench {

/// Locally connected network: every neuron projects to all neurons of its
/// own core and nowhere else; a fixed subset fires in every timestep.
struct LocalOptions {
    std::uint32_t num_cores = 4;
    std::uint32_t neurons_per_core = 80;
    double firing_fraction = 0.625; ///< 50 of 80 neurons
    std::uint16_t weight = 0;
    std::uint64_t seed = 1;
};

/// Synfire chain with feedforward inhibition, one group per core, the
/// last group feeding the first.
struct SynfireOptions {
    std::uint32_t groups = 4;
    std::uint32_t e_per_group = 200;
    std::uint32_t i_per_group = 50;
    std::uint32_t e_inputs = 60;        ///< E(prev) -> E and E(prev) -> I, per target
    std::uint32_t i_inputs = 25;        ///< I -> E within a group, per target
    std::uint32_t delay_between_ms = 10;
    std::uint32_t delay_within_ms = 8;
    std::uint32_t stimulus_spikes = 400;
    double stimulus_sigma_ms = 2.4;
    double stimulus_onset_ms = 20.0;
    std::uint32_t stimulus_inputs = 60; ///< stimulus sources per group-1 neuron
    std::uint16_t w_ee = 0;
    std::uint16_t w_ei = 0;
    std::uint16_t w_ie = 0;
    std::uint16_t w_stim = 0;
    snn::LifParams neuron;
    std::uint64_t seed = 1;
};

/// Sparse random excitatory network with a Poisson background population.
/// With SFA every neuron inhibits itself through a slow synapse.
struct RandomNetOptions {
    std::uint32_t neurons = 1000;
    std::uint32_t num_cores = 4;
    double p_rec = 0.08;
    bool sfa = true;
    std::uint32_t background = 200;
    double p_ext = 0.1;
    double background_rate_hz = 0.0;
    std::uint32_t delay_min_ms = 1;
    std::uint32_t delay_max_ms = 1;
    std::uint16_t w_rec = 0;
    std::uint16_t w_sfa = 0;
    std::uint16_t w_bg = 0;
    snn::LifParams neuron;
    std::uint64_t seed = 1;
};

SynfireOptions default_synfire_options();
RandomNetOptions default_bursting_options();
RandomNetOptions default_async_options();

/// Throws NetworkError if firing_fraction is outside [0, 1].
NetworkSpec build_local(const LocalOptions& options = {});
/// Throws NetworkError for fewer than two groups or impossible in-degrees.
NetworkSpec build_synfire(const SynfireOptions& options = default_synfire_options());
NetworkSpec build_bursting(const RandomNetOptions& options = default_bursting_options());
NetworkSpec build_async(const RandomNetOptions& options = default_async_options());

/// Builds a named benchmark ("local", "synfire", "bursting", "async") with
/// defaults and the given seed.
NetworkSpec build_named(const std::string& name, std::uint64_t seed);

} // namespace neurodvfs::bench
