#pragma once

#include "neurodvfs/bench/network_spec.hpp"
#include "neurodvfs/sim/config.hpp"

#include <string>
#include <vector>

namespace neurodvfs::sim {

struct Variant {
    std::string label;
    dvfs::PlSet set;
};

/// 1PL, 2PL {PL1, PL3}, 3PL and 3PL with a 10 MHz DFS idle sublevel.
std::vector<Variant> default_variants();
/// Comma-separated names accepted by parse_pl_set. Throws ConfigError for
/// an empty list or an unknown name.
std::vector<Variant> parse_variants(const std::string& list);

struct VariantResult {
    std::string label;
    std::size_t levels = 0;
    bool dfs = false;
    std::vector<std::uint64_t> thresholds;
    double pe_mw = 0.0;
    double baseline_mw = 0.0;
    double neuron_mw = 0.0;
    double synapse_mw = 0.0;
    double reduction_pct = 0.0; ///< relative to fixed PL3
    std::vector<double> pl_fractions;
    std::uint64_t deadline_violations = 0;
};

struct Exploration {
    std::string network;
    double reference_pe_mw = 0.0; ///< fixed PL3 on the standard set
    std::vector<VariantResult> rows;
};

/// Runs the network once at fixed PL3 and once per variant under the base
/// config's DVFS policy (count thresholds if the base policy is fixed),
/// with thresholds re-derived for each variant. Runs execute concurrently.
/// Throws ConfigError for an empty variant list.
Exploration explore_architectures(const bench::NetworkSpec& network, const SimConfig& base,
                                  const std::vector<Variant>& variants);

} // namespace neurodvfs::sim
