#pragma once

#include <cstdint>
#include <span>

namespace neurodvfs::dvfs {

struct Selection {
    unsigned pl = 1;
    /// Workload exceeds the capacity of the highest level.
    bool realtime_risk = false;
};

/// Lowest level i with c < c_th,i; the top level otherwise. `capacities`
/// holds c_th for every level in ascending order.
Selection select_pl_exact(std::uint64_t c, std::span<const std::uint64_t> capacities);

/// Spike-count selection: PL1 if l < l_th,1, PLi if l_th,i-1 <= l < l_th,i,
/// the top level if l >= l_th,n-1. `thresholds` has one entry per boundary.
unsigned select_pl_by_count(std::uint64_t l, std::span<const std::uint64_t> thresholds);

} // namespace neurodvfs::dvfs
