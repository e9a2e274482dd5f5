#include "neurodvfs/dvfs/performance_level.hpp"

#include "neurodvfs/errors.hpp"

#include <cmath>
#include <sstream>

namespace neurodvfs::dvfs {

std::uint64_t PerformanceLevel::capacity(double t_sys_ms) const noexcept
{
    return static_cast<std::uint64_t>(std::llround(frequency_hz * t_sys_ms * 1e-3));
}

PlSet::PlSet(std::vector<PerformanceLevel> levels, std::optional<PerformanceLevel> dfs)
    : levels_(std::move(levels)), dfs_(std::move(dfs))
{
    if (levels_.empty()) {
        throw ConfigError("performance level set is empty");
    }
    for (std::size_t i = 0; i < levels_.size(); ++i) {
        auto& pl = levels_[i];
        pl.index = static_cast<unsigned>(i + 1);
        pl.kind = PlKind::Full;
        pl.parent = pl.index;
        if (!(pl.voltage > 0.0) || !(pl.frequency_hz > 0.0)) {
            throw ConfigError("performance level " + std::to_string(pl.index) + " needs positive voltage and frequency");
        }
        if (i > 0 && (pl.voltage <= levels_[i - 1].voltage || pl.frequency_hz <= levels_[i - 1].frequency_hz)) {
            throw ConfigError("performance levels must have strictly increasing voltage and frequency");
        }
    }
    if (dfs_) {
        if (!contains(dfs_->parent)) {
            throw ConfigError("DFS sublevel refers to unknown parent level " + std::to_string(dfs_->parent));
        }
        const auto& parent = level(dfs_->parent);
        dfs_->kind = PlKind::DfsSublevel;
        dfs_->index = 0;
        dfs_->voltage = parent.voltage;
        if (!(dfs_->frequency_hz > 0.0) || dfs_->frequency_hz >= parent.frequency_hz) {
            throw ConfigError("DFS sublevel frequency must be positive and below its parent's");
        }
    }
}

PlSet PlSet::from_points(const std::vector<std::pair<double, double>>& volt_mhz, std::optional<double> dfs_mhz)
{
    std::vector<PerformanceLevel> levels;
    for (const auto& [v, mhz] : volt_mhz) {
        PerformanceLevel pl;
        pl.voltage = v;
        pl.frequency_hz = mhz * 1e6;
        levels.push_back(pl);
    }
    std::optional<PerformanceLevel> dfs;
    if (dfs_mhz) {
        PerformanceLevel sub;
        sub.kind = PlKind::DfsSublevel;
        sub.parent = 1;
        sub.frequency_hz = *dfs_mhz * 1e6;
        dfs = sub;
    }
    return PlSet(std::move(levels), dfs);
}

PlSet PlSet::standard()
{
    return from_points({{0.70, 125.0}, {0.85, 333.0}, {1.00, 500.0}});
}

const PerformanceLevel& PlSet::level(unsigned index) const
{
    if (!contains(index)) {
        throw ConfigError("unknown performance level " + std::to_string(index));
    }
    return levels_[index - 1];
}

std::vector<std::uint64_t> PlSet::capacities(double t_sys_ms) const
{
    std::vector<std::uint64_t> out;
    out.reserve(levels_.size());
    for (const auto& pl : levels_) {
        out.push_back(pl.capacity(t_sys_ms));
    }
    return out;
}

std::vector<std::uint64_t> PlSet::boundary_capacities(double t_sys_ms) const
{
    auto caps = capacities(t_sys_ms);
    caps.pop_back();
    return caps;
}

std::string PlSet::label() const
{
    std::ostringstream os;
    os << levels_.size() << "PL";
    if (dfs_) {
        os << "+DFS" << std::llround(dfs_->frequency_hz / 1e6) << "MHz";
    }
    return os.str();
}

} // namespace neurodvfs::dvfs
