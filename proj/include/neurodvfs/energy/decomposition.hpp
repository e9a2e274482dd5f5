#pragma once

#include <cstdint>
#include <iosfwd>
#include <span>
#include <string>
#include <vector>

#include <json.hpp>

namespace neurodvfs::energy {

/// Chip energy of every timestep of one run plus its synaptic event count.
struct RunPower {
    std::vector<double> cycle_energy_nj;
    double t_sys_ms = 1.0;
    std::uint64_t synaptic_events = 0;
};

/// Power breakdown of one configuration, one column of the benchmark
/// power table.
struct EnergyReport {
    std::string label;
    double baseline_mw = 0.0;
    double neuron_mw = 0.0;
    double synapse_mw = 0.0;
    double pe_mw = 0.0;
    double infrastructure_mw = 0.0;
    double total_mw = 0.0;
    double syn_events_per_s = 0.0;
    double e_per_syn_event_nj = 0.0;    ///< total power / event rate
    double e_per_syn_event_pe_nj = 0.0; ///< PE power / event rate
};

/// Differential decomposition from four runs: full software (P0), spike
/// sending off (P1), empty timer handlers (P2), cores off (P3).
/// P_syn = P0 - P1, P_neur = P1 - P2, P_BL = P2 - P3, PE = P0 - P3.
/// Throws Error if the runs differ in length or timestep.
EnergyReport decompose_power(const RunPower& full, const RunPower& no_spikes, const RunPower& empty_handlers,
                             const RunPower& cores_off, double infrastructure_mw, std::string label = {});

/// Fills the derived fields (PE, total, event rate, energy per event)
/// from the three components.
void finalize_report(EnergyReport& report, std::uint64_t synaptic_events, double duration_s);

/// Rows: total, infrastructure, baseline, neuron, synapse, PE, SynEvents/s,
/// E/SynEvent, E/SynEvent (PE only); one column per report.
void write_energy_csv(std::ostream& out, std::span<const EnergyReport> reports);

nlohmann::json to_json(const EnergyReport& report);

} // namespace neurodvfs::energy
