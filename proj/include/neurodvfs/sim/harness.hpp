#pragma once

#include "neurodvfs/bench/network_spec.hpp"
#include "neurodvfs/energy/cycle_energy.hpp"
#include "neurodvfs/energy/decomposition.hpp"
#include "neurodvfs/sim/config.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace neurodvfs::sim {

struct SpikeRecord {
    std::int64_t step = 0;
    snn::NeuronId neuron = 0;
    friend bool operator==(const SpikeRecord&, const SpikeRecord&) = default;
};

/// One core in one simulation cycle.
struct CycleRecord {
    std::uint32_t core = 0;
    std::int64_t k = 0;
    std::uint64_t l_received = 0;  ///< FIFO spikes plus preloaded background spikes
    std::uint64_t l_fifo = 0;
    std::uint64_t estimated_c = 0; ///< workload predicted from the FIFO and row table
    std::uint64_t executed_c = 0;  ///< cycles actually spent, estimation overhead included
    unsigned pl = 1;
    bool realtime_risk = false; ///< workload above the top level's capacity
    double transition_ns = 0.0;
    double t_sp_ms = 0.0;
    bool deadline_violation = false;
    energy::CycleEnergy energy;
    std::uint64_t spikes_sent = 0;
    std::uint64_t synaptic_events = 0;
};

struct RunResult {
    std::string network;
    std::string policy;
    std::string pl_set;
    RunMode mode = RunMode::Full;
    std::uint32_t num_cores = 0;
    std::int64_t k_max = 0;
    double t_sys_ms = 1.0;
    double infrastructure_mw = 0.0;
    std::vector<std::uint64_t> thresholds; ///< count policy boundaries in use
    std::vector<SpikeRecord> raster;       ///< ascending (step, neuron)
    std::vector<CycleRecord> records;      ///< cycle-major, then core
    std::vector<double> chip_energy_nj;    ///< per cycle, summed over cores
    std::uint64_t synaptic_events = 0;
    std::uint64_t spikes_emitted = 0;      ///< neuron and FIFO-routed source spikes
    std::uint64_t spike_deliveries = 0;    ///< FIFO pushes, one per target core
    std::uint64_t spikes_processed = 0;    ///< FIFO entries drained and processed
    std::uint64_t spikes_pending = 0;      ///< FIFO entries left after the last cycle

    const CycleRecord& record(std::uint32_t core, std::int64_t k) const;
    /// Active level and processing time per core and cycle.
    Schedule schedule() const;
    energy::RunPower power() const;
    double pe_power_mw() const;
    std::uint64_t deadline_violations() const;
    /// Fraction of core-cycles spent at each level, index 0 = PL1.
    std::vector<double> pl_fractions(std::size_t levels) const;
    /// Component split of the average PE power of this run (mW).
    energy::EnergyReport component_report(std::string label = {}) const;
};

/// Worst-case spike-count thresholds of the network under `config`: per
/// core from its row fan-outs, then the element-wise minimum over cores.
std::vector<std::uint64_t> network_thresholds(const bench::NetworkSpec& network, const bench::Routing& routing,
                                              const SimConfig& config);

/// The timestep loop. For every cycle k and core in order: drain spikes
/// queued before k, estimate the workload, select a level, process spikes
/// and neurons, charge energy, and queue emitted spikes for cycle k + 1.
/// Throws ConfigError or NetworkError on a mismatch between network and
/// config; deadline violations are recorded.
RunResult run(const bench::NetworkSpec& network, const SimConfig& config);

/// Full run plus the three reduced runs with the full run's schedule
/// imposed, decomposed into baseline, neuron and synapse power.
struct Decomposition {
    RunResult full;
    energy::EnergyReport report;
};
Decomposition decompose(const bench::NetworkSpec& network, const SimConfig& config, std::string label = {});

} // namespace neurodvfs::sim
