#include "neurodvfs/energy/cycle_energy.hpp"

#include "neurodvfs/errors.hpp"

#include <algorithm>
#include <cmath>
#include <vector>

namespace neurodvfs::energy {

namespace {

// mW * ms = uJ
constexpr double kNanojoulePerMilliwattMs = 1000.0;

} // namespace

CycleEnergy cycle_energy(unsigned pl, double t_sp_ms, std::uint64_t n_neur, std::uint64_t n_syn,
                         const PowerModelParams& params, double t_sys_ms, IdleLevel idle, StageFlags stages,
                         double core_share)
{
    if (!(t_sp_ms >= 0.0)) {
        throw ConfigError("t_sp must be non-negative");
    }
    const PlPower& active = params.at(pl);
    double idle_mw = 0.0;
    if (idle.dfs) {
        if (!params.dfs_idle_mw()) {
            throw ConfigError("DFS idle level requested but no DFS sublevel is configured");
        }
        idle_mw = *params.dfs_idle_mw();
    } else {
        idle_mw = params.at(idle.pl).p_bl_mw;
    }

    CycleEnergy e;
    e.pl = pl;
    e.t_sp_ms = t_sp_ms;
    e.n_syn = stages.synapse ? n_syn : 0;
    e.deadline_violation = t_sp_ms > t_sys_ms;
    const double idle_ms = std::max(0.0, t_sys_ms - t_sp_ms);
    e.baseline_active = core_share * active.p_bl_mw * t_sp_ms * kNanojoulePerMilliwattMs;
    e.baseline_idle = core_share * idle_mw * idle_ms * kNanojoulePerMilliwattMs;
    if (stages.neuron) {
        e.neuron = core_share * active.e_neur0_nj + active.e_neur_nj * static_cast<double>(n_neur);
    }
    if (stages.synapse) {
        e.synapse = core_share * active.e_syn0_nj + active.e_syn_nj * static_cast<double>(n_syn);
    }
    e.total = e.baseline_active + e.baseline_idle + e.neuron + e.synapse;
    return e;
}

double sum_energy(std::span<const double> energies_nj) noexcept
{
    // Neumaier summation.
    double sum = 0.0;
    double comp = 0.0;
    for (double x : energies_nj) {
        const double t = sum + x;
        if (std::abs(sum) >= std::abs(x)) {
            comp += (sum - t) + x;
        } else {
            comp += (x - t) + sum;
        }
        sum = t;
    }
    return sum + comp;
}

double average_power(std::span<const double> energies_nj, double t_sys_ms)
{
    if (energies_nj.empty()) {
        throw Error("average power of an empty run");
    }
    return sum_energy(energies_nj) / (static_cast<double>(energies_nj.size()) * t_sys_ms) /
           kNanojoulePerMilliwattMs;
}

double average_power(std::span<const CycleEnergy> cycles, double t_sys_ms)
{
    std::vector<double> totals;
    totals.reserve(cycles.size());
    for (const auto& c : cycles) {
        totals.push_back(c.total);
    }
    return average_power(totals, t_sys_ms);
}

} // namespace neurodvfs::energy
