#include "neurodvfs/sim/config.hpp"

#include "neurodvfs/errors.hpp"

#include <algorithm>
#include <cctype>
#include <set>

namespace neurodvfs::sim {

using nlohmann::json;

Policy Policy::parse(const std::string& text)
{
    std::string t = text;
    std::transform(t.begin(), t.end(), t.begin(), [](unsigned char c) { return std::tolower(c); });
    if (t == "exact") {
        return {PolicyKind::Exact, 0};
    }
    if (t == "count" || t == "count-threshold") {
        return {PolicyKind::CountThreshold, 0};
    }
    const std::string prefix = "fixed:pl";
    if (t.rfind(prefix, 0) == 0 && t.size() > prefix.size()) {
        const std::string digits = t.substr(prefix.size());
        if (std::all_of(digits.begin(), digits.end(), [](unsigned char c) { return std::isdigit(c); }) &&
            digits.size() <= 2) {
            const unsigned pl = static_cast<unsigned>(std::stoul(digits));
            if (pl >= 1) {
                return {PolicyKind::Fixed, pl};
            }
        }
    }
    throw ConfigError("unknown policy '" + text + "' (expected exact, count or fixed:PLn)");
}

std::string Policy::to_string() const
{
    switch (kind) {
    case PolicyKind::Exact:
        return "exact";
    case PolicyKind::CountThreshold:
        return "count";
    case PolicyKind::Fixed:
        return "fixed:PL" + std::to_string(fixed_pl);
    }
    return "?";
}

const char* to_string(RunMode mode)
{
    switch (mode) {
    case RunMode::Full:
        return "full";
    case RunMode::NoSpikes:
        return "no-spikes";
    case RunMode::EmptyHandlers:
        return "empty-handlers";
    case RunMode::CoresOff:
        return "cores-off";
    }
    return "?";
}

snn::WorkloadCosts default_costs()
{
    snn::WorkloadCosts c;
    c.c_neur = 246;
    c.c_syn = 15;
    c.c_pre_spike = 832;
    c.c_other = 2500;
    c.c_est = 20;
    return c;
}

SimConfig::SimConfig() : costs(default_costs()) {}

void SimConfig::validate() const
{
    if (!(t_sys_ms > 0.0)) {
        throw ConfigError("t_sys must be positive");
    }
    if (k_max < 1) {
        throw ConfigError("k_max must be at least 1");
    }
    if (pl_set.size() == 0) {
        throw ConfigError("PL set is empty");
    }
    const auto& top = pl_set.top();
    if (std::abs(top.voltage - 1.0) > 1e-9 || std::abs(top.frequency_hz - 500e6) > 1.0) {
        throw ConfigError("PL set must contain the peak level 500 MHz @ 1.0 V as its top level");
    }
    if (policy.kind == PolicyKind::Fixed && !pl_set.contains(policy.fixed_pl)) {
        throw ConfigError("policy " + policy.to_string() + " names a level outside the PL set");
    }
    if (thresholds && thresholds->size() + 1 != pl_set.size()) {
        throw ConfigError("explicit thresholds need one entry per level boundary");
    }
    if (thresholds && !std::is_sorted(thresholds->begin(), thresholds->end())) {
        throw ConfigError("explicit thresholds must be non-decreasing");
    }
    if (infrastructure_mw < 0.0) {
        throw ConfigError("infrastructure power must be non-negative");
    }
    if (imposed) {
        for (const auto& core : *imposed) {
            if (core.size() < static_cast<std::size_t>(k_max)) {
                throw ConfigError("imposed schedule is shorter than k_max");
            }
            for (const auto& e : core) {
                if (!pl_set.contains(e.pl) || !(e.t_sp_ms >= 0.0)) {
                    throw ConfigError("imposed schedule holds an invalid entry");
                }
            }
        }
    }
}

dvfs::PlSet parse_pl_set(const std::string& name)
{
    std::string t = name;
    std::transform(t.begin(), t.end(), t.begin(), [](unsigned char c) { return std::tolower(c); });
    if (t == "1pl") {
        return dvfs::PlSet::from_points({{1.0, 500.0}});
    }
    if (t == "2pl") {
        return dvfs::PlSet::from_points({{0.70, 125.0}, {1.0, 500.0}});
    }
    if (t == "3pl") {
        return dvfs::PlSet::standard();
    }
    if (t == "3pl+dfs" || t == "3pl+dfs10mhz") {
        return dvfs::PlSet::from_points({{0.70, 125.0}, {0.85, 333.0}, {1.0, 500.0}}, 10.0);
    }
    if (t == "4pl") {
        return dvfs::PlSet::from_points({{0.70, 125.0}, {0.80, 300.0}, {0.90, 400.0}, {1.0, 500.0}});
    }
    throw ConfigError("unknown PL set '" + name + "' (expected 1pl, 2pl, 3pl, 3pl+dfs or 4pl)");
}

json to_json(const snn::WorkloadCosts& c)
{
    return json{{"c_neur", c.c_neur},
                {"c_syn", c.c_syn},
                {"c_pre_spike", c.c_pre_spike},
                {"c_other", c.c_other},
                {"c_est", c.c_est}};
}

namespace {

void reject_unknown(const json& j, std::initializer_list<const char*> keys, const char* what)
{
    if (!j.is_object()) {
        throw ConfigError(std::string(what) + " must be a JSON object");
    }
    std::set<std::string> allowed(keys.begin(), keys.end());
    for (const auto& item : j.items()) {
        if (!allowed.count(item.key())) {
            throw ConfigError(std::string("unknown key '") + item.key() + "' in " + what);
        }
    }
}

} // namespace

snn::WorkloadCosts costs_from_json(const json& j, const snn::WorkloadCosts& d)
{
    reject_unknown(j, {"c_neur", "c_syn", "c_pre_spike", "c_other", "c_est"}, "costs");
    snn::WorkloadCosts c;
    c.c_neur = j.value("c_neur", d.c_neur);
    c.c_syn = j.value("c_syn", d.c_syn);
    c.c_pre_spike = j.value("c_pre_spike", d.c_pre_spike);
    c.c_other = j.value("c_other", d.c_other);
    c.c_est = j.value("c_est", d.c_est);
    return c;
}

json to_json(const dvfs::PlSet& set)
{
    json levels = json::array();
    for (const auto& l : set.levels()) {
        levels.push_back(json::array({l.voltage, l.frequency_hz / 1e6}));
    }
    json j{{"levels", levels}};
    if (set.dfs()) {
        j["dfs_mhz"] = set.dfs()->frequency_hz / 1e6;
    }
    return j;
}

dvfs::PlSet pl_set_from_json(const json& j)
{
    if (j.is_string()) {
        return parse_pl_set(j.get<std::string>());
    }
    reject_unknown(j, {"levels", "dfs_mhz"}, "pl_set");
    std::vector<std::pair<double, double>> points;
    for (const auto& p : j.at("levels")) {
        if (!p.is_array() || p.size() != 2) {
            throw ConfigError("pl_set levels must be [voltage, MHz] pairs");
        }
        points.emplace_back(p[0].get<double>(), p[1].get<double>());
    }
    std::optional<double> dfs;
    if (j.contains("dfs_mhz")) {
        dfs = j.at("dfs_mhz").get<double>();
    }
    return dvfs::PlSet::from_points(points, dfs);
}

json to_json(const SimConfig& c)
{
    json j{{"t_sys_ms", c.t_sys_ms},
           {"k_max", c.k_max},
           {"policy", c.policy.to_string()},
           {"pl_set", to_json(c.pl_set)},
           {"costs", to_json(c.costs)},
           {"infrastructure_mw", c.infrastructure_mw},
           {"idle_on_dfs", c.idle_on_dfs},
           {"charge_transitions", c.charge_transitions},
           {"seed", c.seed},
           {"mode", to_string(c.mode)}};
    if (c.thresholds) {
        j["thresholds"] = *c.thresholds;
    }
    return j;
}

SimConfig sim_config_from_json(const json& j)
{
    reject_unknown(j,
                   {"t_sys_ms", "k_max", "policy", "pl_set", "costs", "infrastructure_mw", "idle_on_dfs",
                    "charge_transitions", "seed", "mode", "thresholds"},
                   "sim config");
    SimConfig c;
    try {
        c.t_sys_ms = j.value("t_sys_ms", c.t_sys_ms);
        c.k_max = j.value("k_max", c.k_max);
        if (j.contains("policy")) {
            c.policy = Policy::parse(j.at("policy").get<std::string>());
        }
        if (j.contains("pl_set")) {
            c.pl_set = pl_set_from_json(j.at("pl_set"));
        }
        if (j.contains("costs")) {
            c.costs = costs_from_json(j.at("costs"), c.costs);
        }
        c.infrastructure_mw = j.value("infrastructure_mw", c.infrastructure_mw);
        c.idle_on_dfs = j.value("idle_on_dfs", c.idle_on_dfs);
        c.charge_transitions = j.value("charge_transitions", c.charge_transitions);
        c.seed = j.value("seed", c.seed);
        if (j.contains("mode")) {
            const auto m = j.at("mode").get<std::string>();
            if (m == "full") {
                c.mode = RunMode::Full;
            } else if (m == "no-spikes") {
                c.mode = RunMode::NoSpikes;
            } else if (m == "empty-handlers") {
                c.mode = RunMode::EmptyHandlers;
            } else if (m == "cores-off") {
                c.mode = RunMode::CoresOff;
            } else {
                throw ConfigError("unknown run mode '" + m + "'");
            }
        }
        if (j.contains("thresholds")) {
            c.thresholds = j.at("thresholds").get<std::vector<std::uint64_t>>();
        }
    } catch (const json::exception& e) {
        throw ConfigError(std::string("malformed sim config: ") + e.what());
    }
    c.validate();
    return c;
}

} // namespace neurodvfs::sim
