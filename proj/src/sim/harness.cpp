#include "neurodvfs/sim/harness.hpp"

#include "neurodvfs/dvfs/selection.hpp"
#include "neurodvfs/dvfs/thresholds.hpp"
#include "neurodvfs/dvfs/workload.hpp"
#include "neurodvfs/errors.hpp"
#include "neurodvfs/rng.hpp"
#include "neurodvfs/snn/core.hpp"

#include <algorithm>
#include <future>
#include <optional>

namespace neurodvfs::sim {

namespace {

constexpr double kMsPerNs = 1e-6;

double processing_time_ms(std::uint64_t cycles, const dvfs::PerformanceLevel& level)
{
    return static_cast<double>(cycles) / level.frequency_hz * 1000.0;
}

} // namespace

const CycleRecord& RunResult::record(std::uint32_t core, std::int64_t k) const
{
    if (core >= num_cores || k < 0 || k >= k_max) {
        throw Error("cycle record index out of range");
    }
    return records[static_cast<std::size_t>(k) * num_cores + core];
}

Schedule RunResult::schedule() const
{
    Schedule s(num_cores, std::vector<ScheduleEntry>(static_cast<std::size_t>(k_max)));
    for (const auto& r : records) {
        s[r.core][static_cast<std::size_t>(r.k)] = {r.pl, r.t_sp_ms};
    }
    return s;
}

energy::RunPower RunResult::power() const
{
    return {chip_energy_nj, t_sys_ms, synaptic_events};
}

double RunResult::pe_power_mw() const
{
    return energy::average_power(chip_energy_nj, t_sys_ms);
}

std::uint64_t RunResult::deadline_violations() const
{
    return static_cast<std::uint64_t>(
        std::count_if(records.begin(), records.end(), [](const CycleRecord& r) { return r.deadline_violation; }));
}

std::vector<double> RunResult::pl_fractions(std::size_t levels) const
{
    std::vector<double> f(levels, 0.0);
    if (records.empty()) {
        return f;
    }
    for (const auto& r : records) {
        if (r.pl >= 1 && r.pl <= levels) {
            f[r.pl - 1] += 1.0;
        }
    }
    for (double& x : f) {
        x /= static_cast<double>(records.size());
    }
    return f;
}

energy::EnergyReport RunResult::component_report(std::string label) const
{
    std::vector<double> base;
    std::vector<double> neur;
    std::vector<double> syn;
    base.reserve(records.size());
    neur.reserve(records.size());
    syn.reserve(records.size());
    for (const auto& r : records) {
        base.push_back(r.energy.baseline());
        neur.push_back(r.energy.neuron);
        syn.push_back(r.energy.synapse);
    }
    const double norm = static_cast<double>(k_max) * t_sys_ms * 1000.0;
    energy::EnergyReport rep;
    rep.label = std::move(label);
    rep.baseline_mw = energy::sum_energy(base) / norm;
    rep.neuron_mw = energy::sum_energy(neur) / norm;
    rep.synapse_mw = energy::sum_energy(syn) / norm;
    rep.infrastructure_mw = infrastructure_mw;
    energy::finalize_report(rep, synaptic_events, static_cast<double>(k_max) * t_sys_ms / 1000.0);
    return rep;
}

std::vector<std::uint64_t> network_thresholds(const bench::NetworkSpec& network, const bench::Routing& routing,
                                              const SimConfig& config)
{
    if (config.thresholds) {
        return *config.thresholds;
    }
    const auto boundaries = config.pl_set.boundary_capacities(config.t_sys_ms);
    std::vector<std::vector<std::uint64_t>> per_core;
    for (std::uint32_t c = 0; c < network.num_cores; ++c) {
        const auto fanouts = routing.fanouts(c);
        per_core.push_back(
            dvfs::derive_worstcase_thresholds(fanouts, config.costs, network.neurons_per_core, boundaries));
    }
    return dvfs::combine_chip_thresholds(per_core);
}

RunResult run(const bench::NetworkSpec& network, const SimConfig& config)
{
    config.validate();
    network.validate();
    if (config.imposed && config.imposed->size() != network.num_cores) {
        throw ConfigError("imposed schedule covers " + std::to_string(config.imposed->size()) +
                          " cores, network has " + std::to_string(network.num_cores));
    }
    const energy::PowerModelParams power =
        energy::PowerModelParams::for_pl_set(config.pl_set, config.power_table, config.infrastructure_mw);
    const double share = 1.0 / static_cast<double>(power.chip_cores());
    const bench::Routing routing = bench::build_routing(network);

    RunResult result;
    result.network = network.name;
    result.policy = config.policy.to_string();
    result.pl_set = config.pl_set.label();
    result.mode = config.mode;
    result.num_cores = network.num_cores;
    result.k_max = config.k_max;
    result.t_sys_ms = config.t_sys_ms;
    result.infrastructure_mw = config.infrastructure_mw;
    result.thresholds = network_thresholds(network, routing, config);
    result.records.reserve(static_cast<std::size_t>(config.k_max) * network.num_cores);
    result.chip_energy_nj.assign(static_cast<std::size_t>(config.k_max), 0.0);

    std::vector<snn::Core> cores;
    cores.reserve(network.num_cores);
    for (std::uint32_t c = 0; c < network.num_cores; ++c) {
        cores.emplace_back(c, c * network.neurons_per_core, network.neurons_per_core, network.core_params[c],
                           routing.rows[c], config.costs, hash_counter(config.seed, c, 0x6e6f697365ULL));
    }

    std::vector<const bench::ExternalSource*> fifo_sources;
    std::vector<const bench::ExternalSource*> preloaded_sources;
    for (const auto& s : network.sources) {
        (s.via_fifo ? fifo_sources : preloaded_sources).push_back(&s);
    }

    const bool dvfs = config.policy.is_dvfs();
    energy::IdleLevel idle_level;
    std::optional<dvfs::PerformanceLevel> idle_pl;
    if (dvfs) {
        if (config.idle_on_dfs && config.pl_set.dfs()) {
            idle_level = {1, true};
            idle_pl = *config.pl_set.dfs();
        } else {
            idle_level = {1, false};
            idle_pl = config.pl_set.level(1);
        }
    } else {
        idle_level = {config.policy.fixed_pl, false};
        idle_pl = config.pl_set.level(config.policy.fixed_pl);
    }
    const auto capacities = config.pl_set.capacities(config.t_sys_ms);

    const bool neurons_run = config.mode == RunMode::Full || config.mode == RunMode::NoSpikes;
    const bool spikes_run = config.mode == RunMode::Full;
    const energy::StageFlags stages{neurons_run, spikes_run};

    std::vector<std::vector<snn::NeuronId>> preloaded(network.num_cores);
    std::vector<snn::NeuronId> emitted;

    auto route = [&](snn::NeuronId source, std::int64_t k, CycleRecord* sender) {
        ++result.spikes_emitted;
        const auto it = routing.targets.find(source);
        if (it == routing.targets.end()) {
            return;
        }
        for (std::uint32_t target : it->second) {
            cores[target].fifo().push(source, k);
            ++result.spike_deliveries;
        }
        if (sender) {
            ++sender->spikes_sent;
        }
    };

    for (std::int64_t k = 0; k < config.k_max; ++k) {
        for (auto& p : preloaded) {
            p.clear();
        }
        if (spikes_run) {
            for (const auto* s : preloaded_sources) {
                if (!s->fires_at(k, config.t_sys_ms)) {
                    continue;
                }
                const auto it = routing.targets.find(s->id);
                if (it == routing.targets.end()) {
                    continue;
                }
                for (std::uint32_t target : it->second) {
                    preloaded[target].push_back(s->id);
                }
            }
        }

        const std::size_t first_record = result.records.size();
        for (std::uint32_t c = 0; c < network.num_cores; ++c) {
            snn::Core& core = cores[c];
            CycleRecord rec;
            rec.core = c;
            rec.k = k;

            const std::vector<snn::SpikeEvent> drained = core.fifo().drain(k);
            if (!spikes_run && !drained.empty()) {
                throw Error("spikes queued in a run with spike processing disabled");
            }
            const dvfs::WorkloadEstimate est = dvfs::estimate_workload_exact(
                drained, core.rows(), config.costs, neurons_run ? core.neuron_count() : 0, preloaded[c]);
            rec.l_fifo = drained.size();
            rec.l_received = est.spikes;
            rec.estimated_c = est.cycles;

            std::uint64_t executed = config.costs.c_other;
            if (config.mode == RunMode::CoresOff) {
                executed = 0;
            }
            if (config.policy.kind == PolicyKind::Exact && config.mode != RunMode::CoresOff) {
                executed += est.overhead;
            }

            unsigned pl = 1;
            switch (config.policy.kind) {
            case PolicyKind::Exact: {
                const auto sel = dvfs::select_pl_exact(est.total(), capacities);
                pl = sel.pl;
                rec.realtime_risk = sel.realtime_risk;
                break;
            }
            case PolicyKind::CountThreshold:
                pl = dvfs::select_pl_by_count(est.spikes, result.thresholds);
                rec.realtime_risk = est.total() > capacities.back();
                break;
            case PolicyKind::Fixed:
                pl = config.policy.fixed_pl;
                rec.realtime_risk = est.total() > capacities[pl - 1];
                break;
            }

            if (spikes_run) {
                for (const auto& e : drained) {
                    executed += core.process_spike_event(e.source);
                }
                for (snn::NeuronId s : preloaded[c]) {
                    executed += core.process_spike_event(s);
                }
                rec.synaptic_events = est.synapse_words;
                result.spikes_processed += drained.size();
            }

            emitted.clear();
            if (neurons_run) {
                const auto update = core.update_neurons(k, config.t_sys_ms,
                                                        network.forced.empty() ? std::span<const std::uint32_t>{}
                                                                               : std::span(network.forced[c]));
                executed += update.cycles;
                emitted = update.fired;
            } else {
                core.skip_neurons();
            }

            if (config.mode == RunMode::Full) {
                const std::uint64_t recount = est.cycles + (config.policy.kind == PolicyKind::Exact ? est.overhead : 0);
                if (recount != executed) {
                    throw Error("executed cycles diverge from the workload estimate on core " + std::to_string(c));
                }
            }
            rec.executed_c = executed;

            const dvfs::PerformanceLevel& level = config.pl_set.level(pl);
            double t_sp = processing_time_ms(executed, level);
            if (config.charge_transitions && config.mode != RunMode::CoresOff) {
                rec.transition_ns = dvfs::transition_latency(idle_pl, level, config.transitions) +
                                    dvfs::transition_latency(level, *idle_pl, config.transitions);
                t_sp += rec.transition_ns * kMsPerNs;
            }
            if (config.imposed) {
                const ScheduleEntry& e = (*config.imposed)[c][static_cast<std::size_t>(k)];
                pl = e.pl;
                t_sp = e.t_sp_ms;
            }
            rec.pl = pl;
            rec.t_sp_ms = t_sp;
            rec.deadline_violation = t_sp > config.t_sys_ms;

            if (config.mode == RunMode::CoresOff) {
                rec.energy = energy::CycleEnergy{};
                rec.energy.pl = pl;
                rec.energy.t_sp_ms = t_sp;
            } else {
                rec.energy = energy::cycle_energy(pl, t_sp, neurons_run ? core.neuron_count() : 0,
                                                  rec.synaptic_events, power, config.t_sys_ms, idle_level, stages,
                                                  share);
            }
            result.synaptic_events += rec.synaptic_events;

            for (snn::NeuronId id : emitted) {
                result.raster.push_back({k, id});
            }
            result.records.push_back(rec);
            if (spikes_run) {
                for (snn::NeuronId id : emitted) {
                    route(id, k, &result.records.back());
                }
            }
        }

        if (spikes_run) {
            for (const auto* s : fifo_sources) {
                if (s->fires_at(k, config.t_sys_ms)) {
                    route(s->id, k, nullptr);
                }
            }
        }

        std::vector<double> cycle(network.num_cores);
        for (std::uint32_t c = 0; c < network.num_cores; ++c) {
            cycle[c] = result.records[first_record + c].energy.total;
        }
        result.chip_energy_nj[static_cast<std::size_t>(k)] = energy::sum_energy(cycle);
    }

    for (const auto& core : cores) {
        result.spikes_pending += core.fifo().size();
    }
    return result;
}

Decomposition decompose(const bench::NetworkSpec& network, const SimConfig& config, std::string label)
{
    SimConfig full_cfg = config;
    full_cfg.mode = RunMode::Full;
    full_cfg.imposed.reset();
    Decomposition d;
    d.full = run(network, full_cfg);

    SimConfig reduced = config;
    reduced.imposed = d.full.schedule();
    auto reduced_run = [&](RunMode mode) {
        SimConfig c = reduced;
        c.mode = mode;
        return run(network, c).power();
    };
    auto no_spikes = std::async(std::launch::async, reduced_run, RunMode::NoSpikes);
    auto empty = std::async(std::launch::async, reduced_run, RunMode::EmptyHandlers);
    auto off = std::async(std::launch::async, reduced_run, RunMode::CoresOff);
    d.report = energy::decompose_power(d.full.power(), no_spikes.get(), empty.get(), off.get(),
                                       config.infrastructure_mw, std::move(label));
    return d;
}

} // namespace neurodvfs::sim
