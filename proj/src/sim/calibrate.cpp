#include "neurodvfs/sim/calibrate.hpp"

#include "neurodvfs/bench/builders.hpp"
#include "neurodvfs/dvfs/performance_level.hpp"

#include <cmath>

namespace neurodvfs::sim {

dvfs::CalibrationTarget target_from_network(const bench::NetworkSpec& network, std::vector<std::uint64_t> l_th,
                                            dvfs::TargetRole role)
{
    const bench::Routing routing = bench::build_routing(network);
    dvfs::CalibrationTarget t;
    t.name = network.name;
    t.n_neur = network.neurons_per_core;
    t.l_th = std::move(l_th);
    t.role = role;
    for (std::uint32_t c = 0; c < network.num_cores; ++c) {
        t.core_fanouts.push_back(routing.fanouts(c));
    }
    return t;
}

std::vector<dvfs::CalibrationTarget> standard_targets(std::uint64_t seed)
{
    auto bursting = bench::default_bursting_options();
    bursting.seed = seed;
    auto async = bench::default_async_options();
    async.seed = seed;
    auto synfire = bench::default_synfire_options();
    synfire.seed = seed;
    return {target_from_network(bench::build_bursting(bursting), {47, 214}, dvfs::TargetRole::Exact),
            target_from_network(bench::build_async(async), {47, 229}, dvfs::TargetRole::BestEffort),
            target_from_network(bench::build_synfire(synfire), {20, 100}, dvfs::TargetRole::Legacy)};
}

std::vector<dvfs::WorkloadBudget> standard_budgets()
{
    const bench::LocalOptions local;
    const auto firing = static_cast<std::uint64_t>(std::llround(local.firing_fraction * local.neurons_per_core));
    const auto pl1 = dvfs::PlSet::standard().level(1);
    return {{"local", local.neurons_per_core, firing, firing * local.neurons_per_core, pl1.capacity(1.0)}};
}

} // namespace neurodvfs::sim
