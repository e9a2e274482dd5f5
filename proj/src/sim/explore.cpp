#include "neurodvfs/sim/explore.hpp"

#include "neurodvfs/errors.hpp"
#include "neurodvfs/sim/harness.hpp"

#include <future>
#include <sstream>

namespace neurodvfs::sim {

std::vector<Variant> default_variants()
{
    return parse_variants("1pl,2pl,3pl,3pl+dfs");
}

std::vector<Variant> parse_variants(const std::string& list)
{
    std::vector<Variant> out;
    std::stringstream ss(list);
    std::string item;
    while (std::getline(ss, item, ',')) {
        const auto b = item.find_first_not_of(" \t");
        const auto e = item.find_last_not_of(" \t");
        if (b == std::string::npos) {
            continue;
        }
        item = item.substr(b, e - b + 1);
        dvfs::PlSet set = parse_pl_set(item);
        out.push_back({set.label(), std::move(set)});
    }
    if (out.empty()) {
        throw ConfigError("variant list is empty");
    }
    return out;
}

Exploration explore_architectures(const bench::NetworkSpec& network, const SimConfig& base,
                                  const std::vector<Variant>& variants)
{
    if (variants.empty()) {
        throw ConfigError("variant list is empty");
    }
    SimConfig ref = base;
    ref.pl_set = dvfs::PlSet::standard();
    ref.policy = Policy{PolicyKind::Fixed, 3};
    ref.thresholds.reset();
    ref.imposed.reset();
    ref.mode = RunMode::Full;

    auto reference = std::async(std::launch::async, [&] { return run(network, ref).pe_power_mw(); });
    std::vector<std::future<RunResult>> futures;
    for (const auto& v : variants) {
        SimConfig cfg = base;
        cfg.pl_set = v.set;
        if (!cfg.policy.is_dvfs()) {
            cfg.policy = Policy{PolicyKind::CountThreshold, 0};
        }
        cfg.thresholds.reset();
        cfg.imposed.reset();
        cfg.mode = RunMode::Full;
        futures.push_back(std::async(std::launch::async, [&network, cfg] { return run(network, cfg); }));
    }

    Exploration ex;
    ex.network = network.name;
    ex.reference_pe_mw = reference.get();
    for (std::size_t i = 0; i < variants.size(); ++i) {
        const RunResult r = futures[i].get();
        const auto rep = r.component_report(variants[i].label);
        VariantResult row;
        row.label = variants[i].label;
        row.levels = variants[i].set.size();
        row.dfs = variants[i].set.dfs().has_value();
        row.thresholds = r.thresholds;
        row.pe_mw = r.pe_power_mw();
        row.baseline_mw = rep.baseline_mw;
        row.neuron_mw = rep.neuron_mw;
        row.synapse_mw = rep.synapse_mw;
        row.reduction_pct = 100.0 * (1.0 - row.pe_mw / ex.reference_pe_mw);
        row.pl_fractions = r.pl_fractions(row.levels);
        row.deadline_violations = r.deadline_violations();
        ex.rows.push_back(std::move(row));
    }
    return ex;
}

} // namespace neurodvfs::sim
