#include "neurodvfs/sim/reports.hpp"

#include <charconv>
#include <cmath>
#include <ostream>

namespace neurodvfs::sim {

std::string format_number(double x)
{
    if (!std::isfinite(x)) {
        return std::isnan(x) ? "nan" : (x > 0 ? "inf" : "-inf");
    }
    char buf[64];
    const auto res = std::to_chars(buf, buf + sizeof buf, x);
    return std::string(buf, res.ptr);
}

namespace {

std::string join(const std::vector<std::uint64_t>& v)
{
    std::string s;
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) {
            s += ';';
        }
        s += std::to_string(v[i]);
    }
    return s;
}

std::string join(const std::vector<double>& v)
{
    std::string s;
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) {
            s += ';';
        }
        s += format_number(v[i]);
    }
    return s;
}

} // namespace

void write_raster_csv(std::ostream& out, const RunResult& r)
{
    out << "time_ms,neuron_id\n";
    for (const auto& s : r.raster) {
        out << format_number(static_cast<double>(s.step) * r.t_sys_ms) << ',' << s.neuron << '\n';
    }
}

void write_records_csv(std::ostream& out, const RunResult& r)
{
    out << "k,core,l_received,l_fifo,estimated_c,executed_c,pl,t_sp_ms,deadline_violation,realtime_risk,"
           "transition_ns,e_baseline_active_nj,e_baseline_idle_nj,e_neuron_nj,e_synapse_nj,e_total_nj,"
           "spikes_sent,synaptic_events\n";
    for (const auto& c : r.records) {
        out << c.k << ',' << c.core << ',' << c.l_received << ',' << c.l_fifo << ',' << c.estimated_c << ','
            << c.executed_c << ',' << c.pl << ',' << format_number(c.t_sp_ms) << ',' << (c.deadline_violation ? 1 : 0)
            << ',' << (c.realtime_risk ? 1 : 0) << ',' << format_number(c.transition_ns) << ','
            << format_number(c.energy.baseline_active) << ',' << format_number(c.energy.baseline_idle) << ','
            << format_number(c.energy.neuron) << ',' << format_number(c.energy.synapse) << ','
            << format_number(c.energy.total) << ',' << c.spikes_sent << ',' << c.synaptic_events << '\n';
    }
}

void write_histogram_csv(std::ostream& out, const PlHistogram& h)
{
    out << "pl,bin_start_ms,bin_end_ms,count\n";
    for (std::size_t pl = 0; pl < h.counts.size(); ++pl) {
        for (std::size_t b = 0; b < h.counts[pl].size(); ++b) {
            out << pl + 1 << ',' << format_number(static_cast<double>(b) * h.bin_ms) << ','
                << format_number(static_cast<double>(b + 1) * h.bin_ms) << ',' << h.counts[pl][b] << '\n';
        }
    }
}

void write_exploration_csv(std::ostream& out, const Exploration& ex)
{
    out << "variant,levels,dfs,thresholds,pe_mw,baseline_mw,neuron_mw,synapse_mw,reduction_pct,pl_fractions,"
           "deadline_violations\n";
    out << "fixed-PL3,1,0,," << format_number(ex.reference_pe_mw) << ",,,,0,,0\n";
    for (const auto& r : ex.rows) {
        out << r.label << ',' << r.levels << ',' << (r.dfs ? 1 : 0) << ',' << join(r.thresholds) << ','
            << format_number(r.pe_mw) << ',' << format_number(r.baseline_mw) << ',' << format_number(r.neuron_mw)
            << ',' << format_number(r.synapse_mw) << ',' << format_number(r.reduction_pct) << ','
            << join(r.pl_fractions) << ',' << r.deadline_violations << '\n';
    }
}

nlohmann::json summary_json(const RunResult& r)
{
    std::size_t levels = 0;
    for (const auto& c : r.records) {
        levels = std::max<std::size_t>(levels, c.pl);
    }
    const auto rep = r.component_report();
    return nlohmann::json{{"network", r.network},
                          {"policy", r.policy},
                          {"pl_set", r.pl_set},
                          {"mode", to_string(r.mode)},
                          {"cores", r.num_cores},
                          {"k_max", r.k_max},
                          {"t_sys_ms", r.t_sys_ms},
                          {"thresholds", r.thresholds},
                          {"pe_mw", r.pe_power_mw()},
                          {"baseline_mw", rep.baseline_mw},
                          {"neuron_mw", rep.neuron_mw},
                          {"synapse_mw", rep.synapse_mw},
                          {"pl_fractions", r.pl_fractions(levels)},
                          {"deadline_violations", r.deadline_violations()},
                          {"synaptic_events", r.synaptic_events},
                          {"spikes", r.raster.size()},
                          {"spike_deliveries", r.spike_deliveries},
                          {"spikes_processed", r.spikes_processed},
                          {"spikes_pending", r.spikes_pending}};
}

nlohmann::json to_json(const Exploration& ex)
{
    nlohmann::json rows = nlohmann::json::array();
    for (const auto& r : ex.rows) {
        rows.push_back({{"variant", r.label},
                        {"levels", r.levels},
                        {"dfs", r.dfs},
                        {"thresholds", r.thresholds},
                        {"pe_mw", r.pe_mw},
                        {"baseline_mw", r.baseline_mw},
                        {"neuron_mw", r.neuron_mw},
                        {"synapse_mw", r.synapse_mw},
                        {"reduction_pct", r.reduction_pct},
                        {"pl_fractions", r.pl_fractions},
                        {"deadline_violations", r.deadline_violations}});
    }
    return {{"network", ex.network}, {"reference_pe_mw", ex.reference_pe_mw}, {"variants", rows}};
}

} // namespace neurodvfs::sim
