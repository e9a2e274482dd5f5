#include "neurodvfs/dvfs/selection.hpp"

#include "neurodvfs/errors.hpp"

namespace neurodvfs::dvfs {

Selection select_pl_exact(std::uint64_t c, std::span<const std::uint64_t> capacities)
{
    if (capacities.empty()) {
        throw ConfigError("no performance levels to select from");
    }
    Selection sel;
    const std::size_t boundaries = capacities.size() - 1;
    for (std::size_t i = 0; i < boundaries; ++i) {
        if (c < capacities[i]) {
            sel.pl = static_cast<unsigned>(i + 1);
            return sel;
        }
    }
    sel.pl = static_cast<unsigned>(capacities.size());
    sel.realtime_risk = c > capacities.back();
    return sel;
}

unsigned select_pl_by_count(std::uint64_t l, std::span<const std::uint64_t> thresholds)
{
    for (std::size_t i = 0; i < thresholds.size(); ++i) {
        if (l < thresholds[i]) {
            return static_cast<unsigned>(i + 1);
        }
    }
    return static_cast<unsigned>(thresholds.size() + 1);
}

} // namespace neurodvfs::dvfs
