#pragma once

#include "neurodvfs/sim/harness.hpp"

#include <cstdint>
#include <span>
#include <vector>

namespace neurodvfs::sim {

/// Cycle counts per (level, t_sp bin). Bin b covers [b w, (b + 1) w).
struct PlHistogram {
    double bin_ms = 0.05;
    std::vector<std::vector<std::uint64_t>> counts; ///< [pl - 1][bin]
    std::vector<double> max_t_sp_ms;                ///< per level, 0 if unused

    std::size_t bins() const noexcept { return counts.empty() ? 0 : counts.front().size(); }
    std::uint64_t total(unsigned pl) const;
};

/// Throws Error for an empty record set or a non-positive bin width. The
/// bins cover at least [0, t_sys] and extend to the largest t_sp.
PlHistogram pl_time_histogram(std::span<const CycleRecord> records, std::size_t levels, double bin_ms = 0.05,
                              double t_sys_ms = 1.0);

} // namespace neurodvfs::sim
