#include "neurodvfs/dvfs/thresholds.hpp"

#include "neurodvfs/dvfs/workload.hpp"
#include "neurodvfs/errors.hpp"

#include <algorithm>
#include <functional>

namespace neurodvfs::dvfs {

std::vector<std::uint64_t> worst_case_words(std::span<const std::uint32_t> fanouts)
{
    std::vector<std::uint32_t> sorted(fanouts.begin(), fanouts.end());
    std::sort(sorted.begin(), sorted.end(), std::greater<>());
    std::vector<std::uint64_t> prefix(sorted.size() + 1, 0);
    for (std::size_t i = 0; i < sorted.size(); ++i) {
        prefix[i + 1] = prefix[i] + sorted[i];
    }
    return prefix;
}

std::uint64_t worst_case_workload(std::span<const std::uint64_t> prefix_words, const snn::WorkloadCosts& costs,
                                  std::uint64_t n_neur, std::uint64_t l)
{
    const std::uint64_t inputs = prefix_words.empty() ? 0 : prefix_words.size() - 1;
    const std::uint64_t capped = std::min(l, inputs);
    const std::uint64_t words = prefix_words.empty() ? 0 : prefix_words[capped];
    return workload_cycles(costs, n_neur, capped, words);
}

std::vector<std::uint64_t> derive_worstcase_thresholds(std::span<const std::uint32_t> fanouts,
                                                       const snn::WorkloadCosts& costs, std::uint64_t n_neur,
                                                       std::span<const std::uint64_t> boundary_capacities)
{
    const auto prefix = worst_case_words(fanouts);
    const std::uint64_t inputs = fanouts.size();
    std::vector<std::uint64_t> out;
    out.reserve(boundary_capacities.size());
    for (std::uint64_t cap : boundary_capacities) {
        // worst_c is non-decreasing in l: binary search for the first l in
        // [0, inputs] with worst_c(l) >= cap.
        std::uint64_t lo = 0;
        std::uint64_t hi = inputs + 1;
        while (lo < hi) {
            const std::uint64_t mid = lo + (hi - lo) / 2;
            if (worst_case_workload(prefix, costs, n_neur, mid) >= cap) {
                hi = mid;
            } else {
                lo = mid + 1;
            }
        }
        out.push_back(lo > inputs ? kNoThreshold : lo);
    }
    return out;
}

std::vector<std::uint64_t> combine_chip_thresholds(const std::vector<std::vector<std::uint64_t>>& per_core)
{
    if (per_core.empty()) {
        return {};
    }
    std::vector<std::uint64_t> out = per_core.front();
    for (const auto& core : per_core) {
        if (core.size() != out.size()) {
            throw ConfigError("per-core threshold lists differ in length");
        }
        for (std::size_t i = 0; i < out.size(); ++i) {
            out[i] = std::min(out[i], core[i]);
        }
    }
    return out;
}

} // namespace neurodvfs::dvfs
