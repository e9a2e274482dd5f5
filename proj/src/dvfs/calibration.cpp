#include "neurodvfs/dvfs/calibration.hpp"

#include "neurodvfs/dvfs/thresholds.hpp"
#include "neurodvfs/dvfs/workload.hpp"
#include "neurodvfs/errors.hpp"

#include <algorithm>
#include <cstdlib>
#include <limits>
#include <sstream>

namespace neurodvfs::dvfs {

namespace {

using Prefix = std::vector<std::uint64_t>;

struct PreparedTarget {
    const CalibrationTarget* target;
    std::vector<Prefix> prefixes;
};

std::uint64_t words_at(const Prefix& p, std::uint64_t l)
{
    return p[std::min<std::uint64_t>(l, p.size() - 1)];
}

std::uint64_t inputs_of(const Prefix& p)
{
    return p.size() - 1;
}

/// Input-dependent part of worst_c: everything except n_neur*c_neur + c_other.
std::uint64_t spike_work(const Prefix& p, std::uint64_t l, std::uint64_t c_syn, std::uint64_t c_pre)
{
    const std::uint64_t capped = std::min(l, inputs_of(p));
    return words_at(p, capped) * c_syn + capped * c_pre;
}

/// Closed interval of base workloads (n_neur*c_neur + c_other).
struct Interval {
    std::int64_t lo = std::numeric_limits<std::int64_t>::min();
    std::int64_t hi = std::numeric_limits<std::int64_t>::max();

    bool empty() const noexcept { return lo > hi; }
    void clamp(std::int64_t l, std::int64_t h)
    {
        lo = std::max(lo, l);
        hi = std::min(hi, h);
    }
};

/// Base interval for which the chip threshold equals `wanted` on one boundary.
Interval base_interval(const std::vector<Prefix>& cores, std::uint64_t wanted, std::uint64_t cap, std::uint64_t c_syn,
                       std::uint64_t c_pre)
{
    Interval iv;
    const auto capacity = static_cast<std::int64_t>(cap);
    if (wanted == kNoThreshold) {
        std::uint64_t worst = 0;
        for (const auto& p : cores) {
            worst = std::max(worst, spike_work(p, inputs_of(p), c_syn, c_pre));
        }
        iv.hi = capacity - 1 - static_cast<std::int64_t>(worst);
        return iv;
    }
    // Every core must stay below capacity for l = wanted - 1 ...
    if (wanted >= 1) {
        std::uint64_t worst_below = 0;
        for (const auto& p : cores) {
            worst_below = std::max(worst_below, spike_work(p, wanted - 1, c_syn, c_pre));
        }
        iv.hi = capacity - 1 - static_cast<std::int64_t>(worst_below);
    }
    // ... and some core with at least `wanted` inputs must reach it at l = wanted.
    bool any = false;
    std::uint64_t best_at = 0;
    for (const auto& p : cores) {
        if (inputs_of(p) >= wanted) {
            any = true;
            best_at = std::max(best_at, spike_work(p, wanted, c_syn, c_pre));
        }
    }
    if (!any) {
        iv.lo = 1;
        iv.hi = 0;
        return iv;
    }
    iv.lo = capacity - static_cast<std::int64_t>(best_at);
    return iv;
}

std::int64_t ceil_div(std::int64_t a, std::int64_t b)
{
    return a >= 0 ? (a + b - 1) / b : -((-a) / b);
}

std::int64_t floor_div(std::int64_t a, std::int64_t b)
{
    return a >= 0 ? a / b : -((-a + b - 1) / b);
}

std::uint64_t residual(const std::vector<std::uint64_t>& a, const std::vector<std::uint64_t>& b)
{
    std::uint64_t r = 0;
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] == b[i]) {
            continue;
        }
        if (a[i] == kNoThreshold || b[i] == kNoThreshold) {
            r += 1000000;
            continue;
        }
        r += a[i] > b[i] ? a[i] - b[i] : b[i] - a[i];
    }
    return r;
}

} // namespace

const char* to_string(TargetRole role)
{
    switch (role) {
    case TargetRole::Exact:
        return "exact";
    case TargetRole::BestEffort:
        return "best-effort";
    case TargetRole::Legacy:
        return "legacy";
    }
    return "?";
}

std::vector<std::uint64_t> chip_thresholds(const CalibrationTarget& target, const snn::WorkloadCosts& costs,
                                           std::span<const std::uint64_t> boundary_capacities)
{
    std::vector<std::vector<std::uint64_t>> per_core;
    per_core.reserve(target.core_fanouts.size());
    for (const auto& fanouts : target.core_fanouts) {
        per_core.push_back(derive_worstcase_thresholds(fanouts, costs, target.n_neur, boundary_capacities));
    }
    return combine_chip_thresholds(per_core);
}

CalibrationResult calibrate_costs(std::span<const CalibrationTarget> targets,
                                  std::span<const std::uint64_t> boundary_capacities, const CalibrationGrid& grid,
                                  std::span<const WorkloadBudget> budgets)
{
    std::vector<PreparedTarget> exact;
    std::vector<PreparedTarget> soft;
    for (const auto& t : targets) {
        if (t.role == TargetRole::Legacy) {
            continue;
        }
        if (t.l_th.size() != boundary_capacities.size()) {
            throw CalibrationError("target '" + t.name + "' has " + std::to_string(t.l_th.size()) +
                                   " thresholds but there are " + std::to_string(boundary_capacities.size()) +
                                   " level boundaries");
        }
        if (t.core_fanouts.empty() || t.n_neur == 0) {
            throw CalibrationError("target '" + t.name + "' has no cores or no neurons");
        }
        PreparedTarget prepared{&t, {}};
        for (const auto& f : t.core_fanouts) {
            prepared.prefixes.push_back(worst_case_words(f));
        }
        (t.role == TargetRole::Exact ? exact : soft).push_back(std::move(prepared));
    }
    if (exact.size() + soft.size() < 2) {
        throw CalibrationError("calibration needs at least two non-legacy (network, thresholds) pairs");
    }
    if (exact.empty()) {
        throw CalibrationError("calibration needs at least one exact target to pin the base workload");
    }
    if (grid.c_pre_step == 0 || grid.c_syn_min > grid.c_syn_max || grid.c_pre_min > grid.c_pre_max) {
        throw CalibrationError("invalid calibration grid");
    }

    bool found = false;
    CalibrationResult best;
    std::uint64_t best_residual = std::numeric_limits<std::uint64_t>::max();
    std::uint64_t best_margin = 0;
    std::uint64_t feasible = 0;

    for (std::uint64_t c_syn = grid.c_syn_min; c_syn <= grid.c_syn_max; ++c_syn) {
        for (std::uint64_t c_pre = grid.c_pre_min; c_pre <= grid.c_pre_max; c_pre += grid.c_pre_step) {
            // c_neur range satisfying every exact target.
            std::int64_t neur_lo = static_cast<std::int64_t>(grid.c_neur_min);
            std::int64_t neur_hi = static_cast<std::int64_t>(grid.c_neur_max);
            std::vector<std::pair<const PreparedTarget*, Interval>> intervals;
            for (const auto& pt : exact) {
                Interval iv;
                for (std::size_t b = 0; b < boundary_capacities.size(); ++b) {
                    const Interval one =
                        base_interval(pt.prefixes, pt.target->l_th[b], boundary_capacities[b], c_syn, c_pre);
                    iv.clamp(one.lo, one.hi);
                }
                if (iv.empty()) {
                    neur_lo = 1;
                    neur_hi = 0;
                    break;
                }
                const auto n = static_cast<std::int64_t>(pt.target->n_neur);
                const auto other = static_cast<std::int64_t>(grid.c_other);
                if (iv.lo != std::numeric_limits<std::int64_t>::min()) {
                    neur_lo = std::max(neur_lo, ceil_div(iv.lo - other, n));
                }
                if (iv.hi != std::numeric_limits<std::int64_t>::max()) {
                    neur_hi = std::min(neur_hi, floor_div(iv.hi - other, n));
                }
                intervals.emplace_back(&pt, iv);
            }
            if (neur_lo > neur_hi) {
                continue;
            }
            for (std::int64_t c_neur = neur_lo; c_neur <= neur_hi; ++c_neur) {
                snn::WorkloadCosts costs{static_cast<std::uint64_t>(c_neur), c_syn, c_pre, grid.c_other, grid.c_est};
                if (std::any_of(budgets.begin(), budgets.end(), [&](const WorkloadBudget& b) {
                        return workload_cycles(costs, b.n_neur, b.spikes, b.synapse_words) > b.capacity;
                    })) {
                    continue;
                }
                std::uint64_t margin = std::numeric_limits<std::uint64_t>::max();
                ++feasible;
                for (const auto& [pt, iv] : intervals) {
                    const auto base =
                        static_cast<std::int64_t>(pt->target->n_neur) * c_neur + static_cast<std::int64_t>(grid.c_other);
                    if (iv.lo != std::numeric_limits<std::int64_t>::min()) {
                        margin = std::min<std::uint64_t>(margin, static_cast<std::uint64_t>(base - iv.lo));
                    }
                    if (iv.hi != std::numeric_limits<std::int64_t>::max()) {
                        margin = std::min<std::uint64_t>(margin, static_cast<std::uint64_t>(iv.hi - base));
                    }
                }
                std::uint64_t total = 0;
                for (const auto& pt : soft) {
                    total += residual(chip_thresholds(*pt.target, costs, boundary_capacities), pt.target->l_th);
                    if (total > best_residual) {
                        break;
                    }
                }
                if (!found || total < best_residual || (total == best_residual && margin > best_margin)) {
                    found = true;
                    best_residual = total;
                    best_margin = margin;
                    best.costs = costs;
                }
            }
        }
    }

    if (!found) {
        std::ostringstream os;
        os << "no integer cost point in c_syn [" << grid.c_syn_min << ", " << grid.c_syn_max << "], c_pre ["
           << grid.c_pre_min << ", " << grid.c_pre_max << "] step " << grid.c_pre_step << ", c_neur ["
           << grid.c_neur_min << ", " << grid.c_neur_max << "] reproduces the exact targets:";
        for (const auto& pt : exact) {
            os << " " << pt.target->name;
        }
        for (const auto& b : budgets) {
            os << " within budget " << b.name;
        }
        throw CalibrationError(os.str());
    }

    best.total_residual = best_residual;
    best.margin = best_margin;
    best.feasible_points = feasible;
    for (const auto& t : targets) {
        TargetOutcome outcome;
        outcome.name = t.name;
        outcome.role = t.role;
        outcome.wanted = t.l_th;
        if (t.l_th.size() == boundary_capacities.size() && !t.core_fanouts.empty()) {
            outcome.achieved = chip_thresholds(t, best.costs, boundary_capacities);
            outcome.residual = residual(outcome.achieved, outcome.wanted);
        }
        best.outcomes.push_back(std::move(outcome));
    }
    return best;
}

} // namespace neurodvfs::dvfs
