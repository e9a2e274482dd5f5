#include "neurodvfs/energy/power_params.hpp"

#include "neurodvfs/errors.hpp"

#include <cmath>
#include <string>

namespace neurodvfs::energy {

ReferencePowerTable ReferencePowerTable::measured()
{
    ReferencePowerTable t;
    t.chip_cores = 4;
    t.points = {
        {0.70, 125e6, {8.94, 14.92, 1000.0, 2.19, 730.0, 0.45}},
        {0.85, 333e6, {20.03, 37.44, 1410.0, 2.88, 990.0, 0.65}},
        {1.00, 500e6, {28.53, 71.17, 1540.0, 3.96, 1490.0, 0.90}},
    };
    return t;
}

namespace {

double lerp(double a, double b, double t)
{
    return a + (b - a) * t;
}

} // namespace

PlPower interpolate_power(const ReferencePowerTable& table, double voltage, double frequency_hz)
{
    const auto& pts = table.points;
    if (pts.empty()) {
        throw ConfigError("empty reference power table");
    }
    constexpr double kTol = 1e-9;
    for (const auto& p : pts) {
        if (std::abs(p.voltage - voltage) < kTol && std::abs(p.frequency_hz - frequency_hz) < 1.0) {
            return p.power;
        }
    }
    if (voltage < pts.front().voltage - kTol || voltage > pts.back().voltage + kTol) {
        throw ConfigError("voltage " + std::to_string(voltage) + " V outside the reference table range");
    }

    std::size_t hi = 1;
    while (hi < pts.size() - 1 && pts[hi].voltage < voltage) {
        ++hi;
    }
    const std::size_t lo = pts.size() == 1 ? 0 : hi - 1;
    if (pts.size() == 1) {
        hi = 0;
    }
    const auto& a = pts[lo];
    const auto& b = pts[hi];
    const double t = hi == lo ? 0.0 : (voltage - a.voltage) / (b.voltage - a.voltage);
    const double v2 = voltage * voltage;

    auto dyn_k = [](const ReferencePoint& p) {
        return (p.power.p_bl_mw - p.power.p_bl_leak_mw) / (p.voltage * p.voltage * p.frequency_hz);
    };
    auto norm = [](const ReferencePoint& p, double x) { return x / (p.voltage * p.voltage); };

    PlPower out;
    out.p_bl_leak_mw = lerp(a.power.p_bl_leak_mw, b.power.p_bl_leak_mw, t);
    out.p_bl_mw = out.p_bl_leak_mw + lerp(dyn_k(a), dyn_k(b), t) * v2 * frequency_hz;
    out.e_neur0_nj = lerp(norm(a, a.power.e_neur0_nj), norm(b, b.power.e_neur0_nj), t) * v2;
    out.e_neur_nj = lerp(norm(a, a.power.e_neur_nj), norm(b, b.power.e_neur_nj), t) * v2;
    out.e_syn0_nj = lerp(norm(a, a.power.e_syn0_nj), norm(b, b.power.e_syn0_nj), t) * v2;
    out.e_syn_nj = lerp(norm(a, a.power.e_syn_nj), norm(b, b.power.e_syn_nj), t) * v2;
    return out;
}

double dfs_baseline_power(const PlPower& parent, double parent_frequency_hz, double dfs_frequency_hz)
{
    return parent.p_bl_leak_mw + (parent.p_bl_mw - parent.p_bl_leak_mw) * (dfs_frequency_hz / parent_frequency_hz);
}

PowerModelParams::PowerModelParams(std::vector<PlPower> levels, std::optional<double> dfs_idle_mw,
                                   unsigned chip_cores, double infrastructure_mw)
    : levels_(std::move(levels)),
      dfs_idle_mw_(dfs_idle_mw),
      chip_cores_(chip_cores),
      infrastructure_mw_(infrastructure_mw)
{
    if (levels_.empty()) {
        throw ConfigError("power model has no levels");
    }
    if (chip_cores_ == 0) {
        throw ConfigError("power model needs at least one core");
    }
    for (std::size_t i = 0; i < levels_.size(); ++i) {
        const PlPower& p = levels_[i];
        const std::string where = "power parameters of PL" + std::to_string(i + 1);
        for (double v : {p.p_bl_leak_mw, p.p_bl_mw, p.e_neur0_nj, p.e_neur_nj, p.e_syn0_nj, p.e_syn_nj}) {
            if (!(v >= 0.0) || !std::isfinite(v)) {
                throw ConfigError(where + " must be finite and non-negative");
            }
        }
        if (p.p_bl_leak_mw > p.p_bl_mw) {
            throw ConfigError(where + ": leakage exceeds baseline");
        }
        if (i > 0) {
            const PlPower& q = levels_[i - 1];
            if (p.p_bl_leak_mw < q.p_bl_leak_mw || p.p_bl_mw < q.p_bl_mw || p.e_neur0_nj < q.e_neur0_nj ||
                p.e_neur_nj < q.e_neur_nj || p.e_syn0_nj < q.e_syn0_nj || p.e_syn_nj < q.e_syn_nj) {
                throw ConfigError(where + " must not be below the previous level's");
            }
        }
    }
    if (dfs_idle_mw_ && !(*dfs_idle_mw_ >= 0.0)) {
        throw ConfigError("DFS idle power must be non-negative");
    }
}

PowerModelParams PowerModelParams::for_pl_set(const dvfs::PlSet& set, const ReferencePowerTable& table,
                                              double infrastructure_mw)
{
    std::vector<PlPower> levels;
    for (const auto& pl : set.levels()) {
        levels.push_back(interpolate_power(table, pl.voltage, pl.frequency_hz));
    }
    std::optional<double> dfs;
    if (set.dfs()) {
        const auto& parent = set.level(set.dfs()->parent);
        dfs = dfs_baseline_power(levels[parent.index - 1], parent.frequency_hz, set.dfs()->frequency_hz);
    }
    return PowerModelParams(std::move(levels), dfs, table.chip_cores, infrastructure_mw);
}

const PlPower& PowerModelParams::at(unsigned pl) const
{
    if (pl < 1 || pl > levels_.size()) {
        throw ConfigError("no power parameters for PL" + std::to_string(pl));
    }
    return levels_[pl - 1];
}

} // namespace neurodvfs::energy
