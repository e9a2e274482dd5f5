#pragma once

#include "neurodvfs/energy/power_params.hpp"

#include <cstdint>
#include <span>

namespace neurodvfs::energy {

/// Where the core waits after processing: a full level, or the DFS
/// sublevel configured in the power parameters.
struct IdleLevel {
    unsigned pl = 1;
    bool dfs = false;
};

/// Which processing stages ran in the timestep. Disabled stages charge
/// neither their offset nor their per-item energy.
struct StageFlags {
    bool neuron = true;
    bool synapse = true;
};

/// Energy of one timestep in nJ.
struct CycleEnergy {
    double baseline_active = 0.0;
    double baseline_idle = 0.0;
    double neuron = 0.0;
    double synapse = 0.0;
    double total = 0.0;
    double t_sp_ms = 0.0;
    unsigned pl = 1;
    std::uint64_t n_syn = 0;
    bool deadline_violation = false;

    double baseline() const noexcept { return baseline_active + baseline_idle; }
};

/// E = P_BL,i t_sp + P_BL,idle (t_sys - t_sp) + E_neur0,i + e_neur,i n_neur
///     + E_syn0,i + e_syn,i n_syn
/// `core_share` scales the baseline and offset terms (1/cores for one PE of
/// a chip-aggregate table). If t_sp exceeds t_sys the idle term is zero and
/// the cycle is flagged. Throws ConfigError for an unknown level.
CycleEnergy cycle_energy(unsigned pl, double t_sp_ms, std::uint64_t n_neur, std::uint64_t n_syn,
                         const PowerModelParams& params, double t_sys_ms, IdleLevel idle = {},
                         StageFlags stages = {}, double core_share = 1.0);

/// Compensated sum of per-cycle energies (nJ).
double sum_energy(std::span<const double> energies_nj) noexcept;

/// P_avg = sum(E_cycle) / (k_max t_sys), in mW. Throws Error if empty.
double average_power(std::span<const double> energies_nj, double t_sys_ms);
double average_power(std::span<const CycleEnergy> cycles, double t_sys_ms);

} // namespace neurodvfs::energy
