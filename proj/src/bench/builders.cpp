#include "neurodvfs/bench/builders.hpp"

#include "neurodvfs/errors.hpp"
#include "neurodvfs/rng.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <sstream>

namespace neurodvfs::bench {

namespace {

std::uint8_t word_delay(std::uint32_t delay_ms)
{
    if (delay_ms < 1 || delay_ms > snn::kDelaySlots) {
        throw NetworkError("effective delay must be within 1..16 ms, got " + std::to_string(delay_ms));
    }
    return static_cast<std::uint8_t>(delay_ms - 1);
}

/// k distinct values from [0, n), in ascending order (Floyd's algorithm).
std::vector<std::uint32_t> sample_distinct(Rng& rng, std::uint32_t n, std::uint32_t k)
{
    std::vector<std::uint32_t> chosen;
    chosen.reserve(k);
    for (std::uint32_t j = n - k; j < n; ++j) {
        const auto t = static_cast<std::uint32_t>(rng.below(j + 1ULL));
        if (std::find(chosen.begin(), chosen.end(), t) == chosen.end()) {
            chosen.push_back(t);
        } else {
            chosen.push_back(j);
        }
    }
    std::sort(chosen.begin(), chosen.end());
    return chosen;
}

} // namespace

SynfireOptions default_synfire_options()
{
    SynfireOptions o;
    o.neuron.tau_m = 15.0;
    o.neuron.e_leak = -70.0;
    o.neuron.v_threshold = -55.0;
    o.neuron.v_reset = -70.0;
    o.neuron.tau_exc = 1.5;
    o.neuron.tau_inh = 10.0;
    o.neuron.refractory_steps = 2;
    o.neuron.exc_scale = 1e-4;
    o.neuron.inh_scale = 1e-4;
    o.neuron.noise_mean = 0.0;
    o.neuron.noise_std = 10.0;
    o.w_ee = 600;
    o.w_ei = 600;
    o.w_ie = 1000;
    o.w_stim = 500;
    return o;
}

RandomNetOptions default_bursting_options()
{
    RandomNetOptions o;
    o.p_rec = 0.08;
    o.sfa = true;
    o.background_rate_hz = 15.0;
    o.delay_min_ms = 1;
    o.delay_max_ms = 5;
    o.neuron.tau_m = 20.0;
    o.neuron.e_leak = -70.0;
    o.neuron.v_threshold = -55.0;
    o.neuron.v_reset = -70.0;
    o.neuron.tau_exc = 5.0;
    o.neuron.tau_adapt = 144.0;
    o.neuron.refractory_steps = 5;
    o.neuron.sfa = true;
    o.neuron.exc_scale = 1e-4;
    o.neuron.inh_scale = 1e-4;
    o.neuron.noise_mean = 7.0;
    o.neuron.noise_std = 15.0;
    o.w_rec = 200;
    o.w_sfa = 800;
    o.w_bg = 400;
    return o;
}

RandomNetOptions default_async_options()
{
    RandomNetOptions o = default_bursting_options();
    o.p_rec = 0.02;
    o.sfa = false;
    o.neuron.sfa = false;
    o.w_sfa = 0;
    return o;
}

NetworkSpec build_local(const LocalOptions& o)
{
    if (!(o.firing_fraction >= 0.0 && o.firing_fraction <= 1.0)) {
        throw NetworkError("firing fraction must be within [0, 1]");
    }
    NetworkSpec spec;
    spec.name = "local";
    spec.num_cores = o.num_cores;
    spec.neurons_per_core = o.neurons_per_core;
    spec.seed = o.seed;
    spec.core_params.assign(o.num_cores, snn::LifParams{});
    const auto firing = static_cast<std::uint32_t>(std::llround(o.firing_fraction * o.neurons_per_core));
    std::vector<std::uint32_t> forced(firing);
    std::iota(forced.begin(), forced.end(), 0U);
    spec.forced.assign(o.num_cores, forced);
    for (std::uint32_t core = 0; core < o.num_cores; ++core) {
        const NeuronId first = core * o.neurons_per_core;
        for (std::uint32_t s = 0; s < o.neurons_per_core; ++s) {
            for (std::uint32_t t = 0; t < o.neurons_per_core; ++t) {
                spec.connections.push_back({first + s, first + t, o.weight, snn::SynapseType::Excitatory, 0});
            }
        }
    }
    std::ostringstream os;
    os << "all-to-all within each core, " << firing << " of " << o.neurons_per_core
       << " neurons per core forced to fire every timestep";
    spec.description = os.str();
    return spec;
}

NetworkSpec build_synfire(const SynfireOptions& o)
{
    if (o.groups < 2) {
        throw NetworkError("a synfire chain needs at least two groups");
    }
    if (o.e_inputs > o.e_per_group || o.i_inputs > o.i_per_group || o.stimulus_inputs > o.stimulus_spikes) {
        throw NetworkError("synfire in-degree exceeds the presynaptic population size");
    }
    const std::uint32_t per_group = o.e_per_group + o.i_per_group;
    NetworkSpec spec;
    spec.name = "synfire";
    spec.num_cores = o.groups;
    spec.neurons_per_core = per_group;
    spec.seed = o.seed;
    spec.core_params.assign(o.groups, o.neuron);

    Rng rng(o.seed);
    const auto between = word_delay(o.delay_between_ms);
    const auto within = word_delay(o.delay_within_ms);
    auto e_id = [&](std::uint32_t g, std::uint32_t i) { return g * per_group + i; };
    auto i_id = [&](std::uint32_t g, std::uint32_t i) { return g * per_group + o.e_per_group + i; };

    for (std::uint32_t g = 0; g < o.groups; ++g) {
        const std::uint32_t prev = (g + o.groups - 1) % o.groups;
        // E(prev) -> E(g) and E(prev) -> I(g).
        for (std::uint32_t t = 0; t < per_group; ++t) {
            const bool target_is_e = t < o.e_per_group;
            const NeuronId target = g * per_group + t;
            for (std::uint32_t s : sample_distinct(rng, o.e_per_group, o.e_inputs)) {
                spec.connections.push_back({e_id(prev, s), target, target_is_e ? o.w_ee : o.w_ei,
                                            snn::SynapseType::Excitatory, between});
            }
        }
        // I(g) -> E(g).
        for (std::uint32_t t = 0; t < o.e_per_group; ++t) {
            for (std::uint32_t s : sample_distinct(rng, o.i_per_group, o.i_inputs)) {
                spec.connections.push_back({i_id(g, s), e_id(g, t), o.w_ie, snn::SynapseType::Inhibitory, within});
            }
        }
    }

    // Gaussian pulse packet into group 1: one spike per stimulus source.
    const NeuronId first_source = spec.neuron_count();
    for (std::uint32_t k = 0; k < o.stimulus_spikes; ++k) {
        ExternalSource src;
        src.id = first_source + k;
        src.via_fifo = true;
        src.kind = SourceKind::Explicit;
        const double t = o.stimulus_onset_ms + o.stimulus_sigma_ms * rng.normal();
        src.steps = {std::max<std::int64_t>(0, std::llround(t))};
        spec.sources.push_back(std::move(src));
    }
    for (std::uint32_t t = 0; t < per_group; ++t) {
        for (std::uint32_t s : sample_distinct(rng, o.stimulus_spikes, o.stimulus_inputs)) {
            spec.connections.push_back({first_source + s, t, o.w_stim, snn::SynapseType::Excitatory, 0});
        }
    }

    std::ostringstream os;
    os << o.groups << " groups of " << o.e_per_group << " E + " << o.i_per_group << " I, " << o.e_inputs
       << " E inputs and " << o.i_inputs << " I inputs per neuron, delays " << o.delay_between_ms << "/"
       << o.delay_within_ms << " ms, pulse packet of " << o.stimulus_spikes << " spikes (sigma "
       << o.stimulus_sigma_ms << " ms)";
    spec.description = os.str();
    return spec;
}

namespace {

NetworkSpec build_random(const RandomNetOptions& o, const char* name)
{
    if (o.num_cores == 0 || o.neurons % o.num_cores != 0) {
        throw NetworkError("neuron count must split evenly over the cores");
    }
    if (o.delay_min_ms > o.delay_max_ms) {
        throw NetworkError("minimum delay exceeds maximum delay");
    }
    NetworkSpec spec;
    spec.name = name;
    spec.num_cores = o.num_cores;
    spec.neurons_per_core = o.neurons / o.num_cores;
    spec.seed = o.seed;
    snn::LifParams neuron = o.neuron;
    neuron.sfa = o.sfa;
    spec.core_params.assign(o.num_cores, neuron);

    Rng rng(o.seed);
    const std::uint32_t span = o.delay_max_ms - o.delay_min_ms + 1;
    auto draw_delay = [&] {
        return word_delay(o.delay_min_ms + static_cast<std::uint32_t>(rng.below(span)));
    };
    for (NeuronId s = 0; s < o.neurons; ++s) {
        for (NeuronId t = 0; t < o.neurons; ++t) {
            if (t != s && rng.bernoulli(o.p_rec)) {
                spec.connections.push_back({s, t, o.w_rec, snn::SynapseType::Excitatory, draw_delay()});
            }
        }
        if (o.sfa) {
            spec.connections.push_back({s, s, o.w_sfa, snn::SynapseType::Inhibitory, 0});
        }
    }
    const NeuronId first_bg = spec.neuron_count();
    for (std::uint32_t b = 0; b < o.background; ++b) {
        ExternalSource src;
        src.id = first_bg + b;
        src.via_fifo = false;
        src.kind = SourceKind::Poisson;
        src.rate_hz = o.background_rate_hz;
        src.seed = mix64(o.seed ^ 0xB6ULL);
        spec.sources.push_back(src);
        for (NeuronId t = 0; t < o.neurons; ++t) {
            if (rng.bernoulli(o.p_ext)) {
                spec.connections.push_back({src.id, t, o.w_bg, snn::SynapseType::Excitatory, draw_delay()});
            }
        }
    }

    std::ostringstream os;
    os << o.neurons << " excitatory neurons, p_rec " << o.p_rec << (o.sfa ? ", SFA self-synapses" : "")
       << ", " << o.background << " Poisson background sources (p_ext " << o.p_ext << ", "
       << o.background_rate_hz << " Hz)";
    spec.description = os.str();
    return spec;
}

} // namespace

NetworkSpec build_bursting(const RandomNetOptions& o)
{
    return build_random(o, "bursting");
}

NetworkSpec build_async(const RandomNetOptions& o)
{
    return build_random(o, "async");
}

NetworkSpec build_named(const std::string& name, std::uint64_t seed)
{
    if (name == "local") {
        LocalOptions o;
        o.seed = seed;
        return build_local(o);
    }
    if (name == "synfire") {
        auto o = default_synfire_options();
        o.seed = seed;
        return build_synfire(o);
    }
    if (name == "bursting") {
        auto o = default_bursting_options();
        o.seed = seed;
        return build_bursting(o);
    }
    if (name == "async") {
        auto o = default_async_options();
        o.seed = seed;
        return build_async(o);
    }
    throw ConfigError("unknown benchmark '" + name + "' (expected local, synfire, bursting or async)");
}

} // namespace neurodvfs::bench
