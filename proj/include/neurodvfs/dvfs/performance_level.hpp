#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace neurodvfs::dvfs {

enum class PlKind { Full, DfsSublevel };

/// A (supply voltage, clock frequency) operating point. Full levels are
/// numbered from 1 in ascending order; a DFS sublevel runs on the supply
/// rail of its parent at a lower clock.
struct PerformanceLevel {
    unsigned index = 1;
    double voltage = 0.0;
    double frequency_hz = 0.0;
    PlKind kind = PlKind::Full;
    unsigned parent = 0; ///< full-level index the sublevel borrows its rail from

    /// Cycles available in one timestep (c_th for this level).
    std::uint64_t capacity(double t_sys_ms) const noexcept;

    friend bool operator==(const PerformanceLevel&, const PerformanceLevel&) = default;
};

/// Ordered full levels plus an optional reduced-frequency idle sublevel.
class PlSet {
public:
    PlSet() = default;
    /// Throws ConfigError unless voltage and frequency strictly increase.
    explicit PlSet(std::vector<PerformanceLevel> levels, std::optional<PerformanceLevel> dfs = std::nullopt);

    /// Builds from (voltage, MHz) pairs in ascending order.
    static PlSet from_points(const std::vector<std::pair<double, double>>& volt_mhz,
                             std::optional<double> dfs_mhz = std::nullopt);

    /// PL1 (0.70 V, 125 MHz), PL2 (0.85 V, 333 MHz), PL3 (1.00 V, 500 MHz).
    static PlSet standard();

    std::size_t size() const noexcept { return levels_.size(); }
    const std::vector<PerformanceLevel>& levels() const noexcept { return levels_; }
    const PerformanceLevel& level(unsigned index) const; ///< 1-based
    const PerformanceLevel& top() const { return levels_.back(); }
    const std::optional<PerformanceLevel>& dfs() const noexcept { return dfs_; }
    bool contains(unsigned index) const noexcept { return index >= 1 && index <= levels_.size(); }

    /// c_th,i for every full level, ascending.
    std::vector<std::uint64_t> capacities(double t_sys_ms) const;
    /// c_th,1 .. c_th,n-1: the boundaries the selectors compare against.
    std::vector<std::uint64_t> boundary_capacities(double t_sys_ms) const;

    /// Short label such as "3PL" or "3PL+DFS10MHz".
    std::string label() const;

private:
    std::vector<PerformanceLevel> levels_;
    std::optional<PerformanceLevel> dfs_;
};

} // namespace neurodvfs::dvfs
