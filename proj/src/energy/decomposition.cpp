#include "neurodvfs/energy/decomposition.hpp"

#include "neurodvfs/energy/cycle_energy.hpp"
#include "neurodvfs/errors.hpp"

#include <cmath>
#include <functional>
#include <iomanip>
#include <limits>
#include <ostream>

namespace neurodvfs::energy {

namespace {

void check_compatible(const RunPower& a, const RunPower& b, const char* name)
{
    if (a.cycle_energy_nj.size() != b.cycle_energy_nj.size()) {
        throw Error(std::string("power decomposition: run '") + name + "' has " +
                    std::to_string(b.cycle_energy_nj.size()) + " cycles, expected " +
                    std::to_string(a.cycle_energy_nj.size()));
    }
    if (a.t_sys_ms != b.t_sys_ms) {
        throw Error(std::string("power decomposition: run '") + name + "' uses a different timestep");
    }
}

double per_event(double power_mw, double rate)
{
    if (rate <= 0.0) {
        return std::numeric_limits<double>::quiet_NaN();
    }
    return power_mw * 1e-3 / rate * 1e9;
}

} // namespace

void finalize_report(EnergyReport& r, std::uint64_t synaptic_events, double duration_s)
{
    r.pe_mw = r.baseline_mw + r.neuron_mw + r.synapse_mw;
    r.total_mw = r.pe_mw + r.infrastructure_mw;
    r.syn_events_per_s = duration_s > 0.0 ? static_cast<double>(synaptic_events) / duration_s : 0.0;
    r.e_per_syn_event_nj = per_event(r.total_mw, r.syn_events_per_s);
    r.e_per_syn_event_pe_nj = per_event(r.pe_mw, r.syn_events_per_s);
}

EnergyReport decompose_power(const RunPower& full, const RunPower& no_spikes, const RunPower& empty_handlers,
                             const RunPower& cores_off, double infrastructure_mw, std::string label)
{
    check_compatible(full, no_spikes, "no spikes");
    check_compatible(full, empty_handlers, "empty handlers");
    check_compatible(full, cores_off, "cores off");

    const double p0 = average_power(full.cycle_energy_nj, full.t_sys_ms);
    const double p1 = average_power(no_spikes.cycle_energy_nj, full.t_sys_ms);
    const double p2 = average_power(empty_handlers.cycle_energy_nj, full.t_sys_ms);
    const double p3 = average_power(cores_off.cycle_energy_nj, full.t_sys_ms);

    EnergyReport r;
    r.label = std::move(label);
    r.synapse_mw = p0 - p1;
    r.neuron_mw = p1 - p2;
    r.baseline_mw = p2 - p3;
    r.infrastructure_mw = infrastructure_mw;
    const double duration_s = static_cast<double>(full.cycle_energy_nj.size()) * full.t_sys_ms * 1e-3;
    finalize_report(r, full.synaptic_events, duration_s);
    r.pe_mw = p0 - p3;
    r.total_mw = r.pe_mw + r.infrastructure_mw;
    r.e_per_syn_event_nj = per_event(r.total_mw, r.syn_events_per_s);
    r.e_per_syn_event_pe_nj = per_event(r.pe_mw, r.syn_events_per_s);
    return r;
}

void write_energy_csv(std::ostream& out, std::span<const EnergyReport> reports)
{
    out << "quantity";
    for (const auto& r : reports) {
        out << ',' << r.label;
    }
    out << '\n';
    auto row = [&](const char* name, const std::function<double(const EnergyReport&)>& get) {
        out << name;
        for (const auto& r : reports) {
            const double v = get(r);
            out << ',';
            if (std::isfinite(v)) {
                out << std::setprecision(10) << v;
            }
        }
        out << '\n';
    };
    row("total_mw", [](const EnergyReport& r) { return r.total_mw; });
    row("infrastructure_mw", [](const EnergyReport& r) { return r.infrastructure_mw; });
    row("baseline_mw", [](const EnergyReport& r) { return r.baseline_mw; });
    row("neuron_mw", [](const EnergyReport& r) { return r.neuron_mw; });
    row("synapse_mw", [](const EnergyReport& r) { return r.synapse_mw; });
    row("pe_mw", [](const EnergyReport& r) { return r.pe_mw; });
    row("syn_events_per_s", [](const EnergyReport& r) { return r.syn_events_per_s; });
    row("e_per_syn_event_nj", [](const EnergyReport& r) { return r.e_per_syn_event_nj; });
    row("e_per_syn_event_pe_nj", [](const EnergyReport& r) { return r.e_per_syn_event_pe_nj; });
}

nlohmann::json to_json(const EnergyReport& r)
{
    auto num = [](double v) -> nlohmann::json {
        if (std::isfinite(v)) {
            return v;
        }
        return nullptr;
    };
    return {
        {"label", r.label},
        {"total_mw", num(r.total_mw)},
        {"infrastructure_mw", num(r.infrastructure_mw)},
        {"baseline_mw", num(r.baseline_mw)},
        {"neuron_mw", num(r.neuron_mw)},
        {"synapse_mw", num(r.synapse_mw)},
        {"pe_mw", num(r.pe_mw)},
        {"syn_events_per_s", num(r.syn_events_per_s)},
        {"e_per_syn_event_nj", num(r.e_per_syn_event_nj)},
        {"e_per_syn_event_pe_nj", num(r.e_per_syn_event_pe_nj)},
    };
}

} // namespace neurodvfs::energy
