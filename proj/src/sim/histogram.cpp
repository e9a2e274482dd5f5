#include "neurodvfs/sim/histogram.hpp"

#include "neurodvfs/errors.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace neurodvfs::sim {

std::uint64_t PlHistogram::total(unsigned pl) const
{
    if (pl < 1 || pl > counts.size()) {
        return 0;
    }
    const auto& row = counts[pl - 1];
    return std::accumulate(row.begin(), row.end(), std::uint64_t{0});
}

PlHistogram pl_time_histogram(std::span<const CycleRecord> records, std::size_t levels, double bin_ms,
                              double t_sys_ms)
{
    if (records.empty()) {
        throw Error("histogram of an empty record set");
    }
    if (!(bin_ms > 0.0)) {
        throw Error("histogram bin width must be positive");
    }
    double max_t = 0.0;
    for (const auto& r : records) {
        if (r.pl < 1 || r.pl > levels) {
            throw Error("record at level " + std::to_string(r.pl) + " outside the histogram's " +
                        std::to_string(levels) + " levels");
        }
        max_t = std::max(max_t, r.t_sp_ms);
    }
    const auto bin_of = [bin_ms](double t) { return static_cast<std::size_t>(std::floor(t / bin_ms + 1e-9)); };
    const std::size_t bins = std::max(bin_of(max_t) + 1, static_cast<std::size_t>(std::ceil(t_sys_ms / bin_ms - 1e-9)));

    PlHistogram h;
    h.bin_ms = bin_ms;
    h.counts.assign(levels, std::vector<std::uint64_t>(bins, 0));
    h.max_t_sp_ms.assign(levels, 0.0);
    for (const auto& r : records) {
        ++h.counts[r.pl - 1][bin_of(r.t_sp_ms)];
        h.max_t_sp_ms[r.pl - 1] = std::max(h.max_t_sp_ms[r.pl - 1], r.t_sp_ms);
    }
    return h;
}

} // namespace neurodvfs::sim
