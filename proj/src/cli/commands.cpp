#include "neurodvfs/cli/commands.hpp"

#include "neurodvfs/bench/builders.hpp"
#include "neurodvfs/dvfs/thresholds.hpp"
#include "neurodvfs/energy/decomposition.hpp"
#include "neurodvfs/errors.hpp"
#include "neurodvfs/sim/calibrate.hpp"
#include "neurodvfs/sim/explore.hpp"
#include "neurodvfs/sim/harness.hpp"
#include "neurodvfs/sim/histogram.hpp"
#include "neurodvfs/sim/reports.hpp"

#include <CLI11.hpp>

#include <cstdio>
#include <fstream>
#include <functional>
#include <iomanip>
#include <iostream>
#include <sstream>

namespace neurodvfs::cli {

namespace fs = std::filesystem;
using nlohmann::json;

namespace {

json read_json_file(const fs::path& path)
{
    std::ifstream in(path);
    if (!in) {
        throw ConfigError("cannot open " + path.string());
    }
    try {
        return json::parse(in);
    } catch (const json::exception& e) {
        throw ConfigError("cannot parse " + path.string() + ": " + e.what());
    }
}

class OutputDir {
public:
    explicit OutputDir(fs::path dir) : dir_(std::move(dir))
    {
        std::error_code ec;
        fs::create_directories(dir_, ec);
        if (ec) {
            throw Error("cannot create output directory " + dir_.string() + ": " + ec.message());
        }
    }

    void write(const std::string& name, const std::function<void(std::ostream&)>& body)
    {
        const fs::path p = dir_ / name;
        std::ofstream out(p, std::ios::binary);
        if (!out) {
            throw Error("cannot write " + p.string());
        }
        body(out);
        out.close();
        if (!out) {
            throw Error("write failed for " + p.string());
        }
        files_.push_back(name);
    }

    void write_json(const std::string& name, const json& j)
    {
        write(name, [&](std::ostream& o) { o << j.dump(2) << '\n'; });
    }

    std::vector<ManifestFile> inventory() const
    {
        std::vector<ManifestFile> v;
        for (const auto& name : files_) {
            const fs::path p = dir_ / name;
            v.push_back({name, fs::file_size(p), file_hash(p)});
        }
        return v;
    }

    const fs::path& path() const noexcept { return dir_; }

private:
    fs::path dir_;
    std::vector<std::string> files_;
};

void finish(OutputDir& dir, RunManifest m, std::ostream& out)
{
    m.output_dir = dir.path().string();
    m.files = dir.inventory();
    const json j = to_json(m);
    std::ofstream f(dir.path() / "manifest.json", std::ios::binary);
    if (!f) {
        throw Error("cannot write manifest");
    }
    f << j.dump(2) << '\n';
    out << "run " << m.run_id << ": wrote " << m.files.size() + 1 << " files to " << m.output_dir << '\n';
}

RunManifest make_manifest(const std::string& command, const std::string& config_path, const RunConfig& cfg,
                          const std::string& extra)
{
    RunManifest m;
    m.command = command;
    m.config_path = config_path;
    m.resolved_config = to_json(cfg);
    m.extra = extra;
    m.network_seed = cfg.network_seed;
    m.sim_seed = cfg.sim.seed;
    m.run_id = fnv1a64_hex(command + '\n' + extra + '\n' + m.resolved_config.dump()).substr(0, 12);
    return m;
}

std::string fmt_thresholds(const std::vector<std::uint64_t>& t)
{
    std::ostringstream os;
    os << '(';
    for (std::size_t i = 0; i < t.size(); ++i) {
        os << (i ? ", " : "");
        if (t[i] == dvfs::kNoThreshold) {
            os << "none";
        } else {
            os << t[i];
        }
    }
    os << ')';
    return os.str();
}

struct Overrides {
    std::string policy;
    std::string pl_set;
    std::uint64_t seed = 0;
    bool has_seed = false;
    std::int64_t k_max = 0;
};

void apply(RunConfig& cfg, const Overrides& o)
{
    if (!o.policy.empty()) {
        cfg.sim.policy = sim::Policy::parse(o.policy);
    }
    if (!o.pl_set.empty()) {
        cfg.sim.pl_set = sim::parse_pl_set(o.pl_set);
        cfg.sim.thresholds.reset();
    }
    if (o.has_seed) {
        cfg.sim.seed = o.seed;
        cfg.network_seed = o.seed;
    }
    if (o.k_max > 0) {
        cfg.sim.k_max = o.k_max;
    }
    cfg.sim.validate();
}

int cmd_generate(const std::string& benchmark, std::uint64_t seed, const std::string& out_path, std::ostream& out)
{
    const bench::NetworkSpec spec = bench::build_named(benchmark, seed);
    std::ofstream f(out_path, std::ios::binary);
    if (!f) {
        throw Error("cannot write " + out_path);
    }
    f << bench::to_json(spec).dump() << '\n';
    out << "wrote " << spec.name << " (" << spec.neuron_count() << " neurons, " << spec.connections.size()
        << " synapses) to " << out_path << '\n';
    return kOk;
}

int cmd_run(const std::string& config_path, const Overrides& o, const std::string& out_dir, std::ostream& out)
{
    RunConfig cfg = load_run_config(config_path);
    apply(cfg, o);
    const bench::NetworkSpec network = load_network(cfg);
    const sim::RunResult r = sim::run(network, cfg.sim);
    const sim::PlHistogram h = sim::pl_time_histogram(r.records, cfg.sim.pl_set.size(), 0.05, cfg.sim.t_sys_ms);
    const auto report = r.component_report(network.name + " " + r.policy);

    OutputDir dir(out_dir);
    dir.write_json("config.json", to_json(cfg));
    dir.write("raster.csv", [&](std::ostream& s) { sim::write_raster_csv(s, r); });
    dir.write("records.csv", [&](std::ostream& s) { sim::write_records_csv(s, r); });
    dir.write("histogram.csv", [&](std::ostream& s) { sim::write_histogram_csv(s, h); });
    dir.write("energy.csv", [&](std::ostream& s) { energy::write_energy_csv(s, std::span(&report, 1)); });
    dir.write_json("energy.json", energy::to_json(report));
    dir.write_json("summary.json", sim::summary_json(r));
    finish(dir, make_manifest("run", config_path, cfg, ""), out);

    out << network.name << " " << r.policy << " on " << r.pl_set << ": PE " << std::fixed << std::setprecision(2)
        << r.pe_power_mw() << " mW, thresholds " << fmt_thresholds(r.thresholds) << ", "
        << r.deadline_violations() << " deadline violations\n";
    return kOk;
}

int cmd_explore(const std::string& config_path, const std::string& variants, const Overrides& o,
                const std::string& out_dir, std::ostream& out)
{
    RunConfig cfg = load_run_config(config_path);
    apply(cfg, o);
    const auto list = sim::parse_variants(variants);
    const bench::NetworkSpec network = load_network(cfg);
    const sim::Exploration ex = sim::explore_architectures(network, cfg.sim, list);

    OutputDir dir(out_dir);
    dir.write_json("config.json", to_json(cfg));
    dir.write("exploration.csv", [&](std::ostream& s) { sim::write_exploration_csv(s, ex); });
    dir.write_json("exploration.json", sim::to_json(ex));
    finish(dir, make_manifest("explore", config_path, cfg, variants), out);

    out << std::fixed << std::setprecision(2) << "fixed PL3: " << ex.reference_pe_mw << " mW\n";
    for (const auto& row : ex.rows) {
        out << row.label << ": " << row.pe_mw << " mW (" << row.reduction_pct << "% reduction)\n";
    }
    return kOk;
}

int cmd_decompose(const std::string& config_path, const Overrides& o, const std::string& out_dir, std::ostream& out)
{
    RunConfig cfg = load_run_config(config_path);
    apply(cfg, o);
    const bench::NetworkSpec network = load_network(cfg);
    const sim::Decomposition d = sim::decompose(network, cfg.sim, network.name + " " + cfg.sim.policy.to_string());

    OutputDir dir(out_dir);
    dir.write_json("config.json", to_json(cfg));
    dir.write("energy.csv", [&](std::ostream& s) { energy::write_energy_csv(s, std::span(&d.report, 1)); });
    dir.write_json("energy.json", energy::to_json(d.report));
    finish(dir, make_manifest("decompose", config_path, cfg, ""), out);

    out << std::fixed << std::setprecision(2) << d.report.label << ": baseline " << d.report.baseline_mw
        << " mW, neuron " << d.report.neuron_mw << " mW, synapse " << d.report.synapse_mw << " mW, PE "
        << d.report.pe_mw << " mW, E/SynEvent (PE) " << std::setprecision(3) << d.report.e_per_syn_event_pe_nj
        << " nJ\n";
    return kOk;
}

int cmd_thresholds(const std::string& config_path, const Overrides& o, std::ostream& out)
{
    RunConfig cfg = load_run_config(config_path);
    apply(cfg, o);
    const bench::NetworkSpec network = load_network(cfg);
    const bench::Routing routing = bench::build_routing(network);
    const auto boundaries = cfg.sim.pl_set.boundary_capacities(cfg.sim.t_sys_ms);
    for (std::uint32_t c = 0; c < network.num_cores; ++c) {
        const auto t =
            dvfs::derive_worstcase_thresholds(routing.fanouts(c), cfg.sim.costs, network.neurons_per_core, boundaries);
        out << "core " << c << ": " << fmt_thresholds(t) << '\n';
    }
    out << "chip: " << fmt_thresholds(sim::network_thresholds(network, routing, cfg.sim)) << '\n';
    return kOk;
}

int cmd_calibrate(std::uint64_t seed, std::ostream& out)
{
    const auto targets = sim::standard_targets(seed);
    const auto caps = dvfs::PlSet::standard().boundary_capacities(1.0);
    const auto budgets = sim::standard_budgets();
    const auto result = dvfs::calibrate_costs(targets, caps, {}, budgets);
    out << sim::to_json(result.costs).dump(2) << '\n';
    for (const auto& t : result.outcomes) {
        out << t.name << " [" << dvfs::to_string(t.role) << "]: wanted " << fmt_thresholds(t.wanted) << ", got "
            << fmt_thresholds(t.achieved) << '\n';
    }
    out << "feasible points " << result.feasible_points << ", margin " << result.margin << " cycles\n";
    return kOk;
}

} // namespace

RunConfig run_config_from_json(const json& j, const fs::path& base_dir)
{
    if (!j.is_object()) {
        throw ConfigError("run config must be a JSON object");
    }
    for (const auto& item : j.items()) {
        if (item.key() != "network" && item.key() != "sim") {
            throw ConfigError("unknown key '" + item.key() + "' in run config");
        }
    }
    RunConfig cfg;
    if (!j.contains("network")) {
        throw ConfigError("run config lacks a network section");
    }
    const json& n = j.at("network");
    try {
        if (n.contains("benchmark") == n.contains("file")) {
            throw ConfigError("network section needs exactly one of 'benchmark' and 'file'");
        }
        if (n.contains("benchmark")) {
            cfg.benchmark = n.at("benchmark").get<std::string>();
            cfg.network_seed = n.value("seed", std::uint64_t{1});
        } else {
            fs::path p = n.at("file").get<std::string>();
            cfg.network_file = p.is_absolute() || base_dir.empty() ? p : base_dir / p;
        }
    } catch (const json::exception& e) {
        throw ConfigError(std::string("malformed network section: ") + e.what());
    }
    cfg.sim = sim::sim_config_from_json(j.value("sim", json::object()));
    return cfg;
}

RunConfig load_run_config(const fs::path& path)
{
    return run_config_from_json(read_json_file(path), path.parent_path());
}

json to_json(const RunConfig& cfg)
{
    json net;
    if (!cfg.benchmark.empty()) {
        net = {{"benchmark", cfg.benchmark}, {"seed", cfg.network_seed}};
    } else {
        net = {{"file", fs::absolute(cfg.network_file).string()}};
    }
    return {{"network", net}, {"sim", sim::to_json(cfg.sim)}};
}

bench::NetworkSpec load_network(const RunConfig& cfg)
{
    if (!cfg.benchmark.empty()) {
        return bench::build_named(cfg.benchmark, cfg.network_seed);
    }
    bench::NetworkSpec spec;
    try {
        spec = bench::network_from_json(read_json_file(cfg.network_file));
    } catch (const NetworkError& e) {
        throw ConfigError(std::string("invalid network file: ") + e.what());
    }
    return spec;
}

json to_json(const RunManifest& m)
{
    json files = json::array();
    for (const auto& f : m.files) {
        files.push_back({{"name", f.name}, {"bytes", f.bytes}, {"fnv1a64", f.fnv1a64}});
    }
    return {{"format", "neurodvfs-manifest"},
            {"version", 1},
            {"command", m.command},
            {"run_id", m.run_id},
            {"config_path", m.config_path},
            {"arguments", m.extra},
            {"seeds", {{"network", m.network_seed}, {"sim", m.sim_seed}}},
            {"resolved_config", m.resolved_config},
            {"output_dir", m.output_dir},
            {"files", files}};
}

std::string fnv1a64_hex(const std::string& bytes)
{
    std::uint64_t h = 0xcbf29ce484222325ULL;
    for (unsigned char c : bytes) {
        h ^= c;
        h *= 0x100000001b3ULL;
    }
    char buf[17];
    std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
    return buf;
}

std::string file_hash(const fs::path& path)
{
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw Error("cannot read " + path.string());
    }
    std::ostringstream ss;
    ss << in.rdbuf();
    return fnv1a64_hex(ss.str());
}

int main_entry(int argc, const char* const* argv, std::ostream& out, std::ostream& err)
{
    CLI::App app{"Neuromorphic many-core simulator with per-core DVFS and energy accounting", "neurodvfs"};
    app.require_subcommand(1);

    std::string benchmark;
    std::uint64_t gen_seed = 1;
    std::string gen_out;
    auto* generate = app.add_subcommand("generate", "Build a benchmark network and write it as JSON");
    generate->add_option("benchmark", benchmark, "local, synfire, bursting or async")->required();
    generate->add_option("--seed", gen_seed, "Construction seed");
    generate->add_option("--out", gen_out, "Output file")->required();

    std::string config_path;
    std::string out_dir = "out";
    Overrides o;
    const auto accepted_by = [](auto parse, const char* name) {
        return CLI::Validator(
            [parse](std::string& s) {
                try {
                    parse(s);
                } catch (const Error& e) {
                    return std::string(e.what());
                }
                return std::string();
            },
            name);
    };
    const auto policy_check = accepted_by([](const std::string& s) { sim::Policy::parse(s); }, "POLICY");
    const auto pl_set_check = accepted_by([](const std::string& s) { sim::parse_pl_set(s); }, "PL_SET");
    auto add_common = [&](CLI::App* sub, bool with_out) {
        sub->add_option("config", config_path, "Run config JSON")->required();
        sub->add_option("--policy", o.policy, "exact, count or fixed:PLn")->check(policy_check);
        sub->add_option("--pl-set", o.pl_set, "1pl, 2pl, 3pl, 3pl+dfs or 4pl")->check(pl_set_check);
        sub->add_option("--k-max", o.k_max, "Number of simulation cycles");
        sub->add_option_function<std::uint64_t>(
            "--seed",
            [&](std::uint64_t s) {
                o.seed = s;
                o.has_seed = true;
            },
            "Seed for network construction and noise");
        if (with_out) {
            sub->add_option("--out", out_dir, "Output directory");
        }
    };
    auto* run = app.add_subcommand("run", "Simulate and write raster, cycle records, histogram and energy report");
    add_common(run, true);
    std::string variants = "1pl,2pl,3pl,3pl+dfs";
    auto* explore = app.add_subcommand("explore", "Compare PL-set variants against fixed PL3");
    add_common(explore, true);
    explore->add_option("--variants", variants, "Comma-separated PL sets");
    auto* decompose = app.add_subcommand("decompose", "Differential four-run power decomposition");
    add_common(decompose, true);
    auto* thresholds = app.add_subcommand("thresholds", "Print worst-case spike-count thresholds");
    add_common(thresholds, false);
    std::uint64_t cal_seed = 1;
    auto* calibrate = app.add_subcommand("calibrate", "Fit cycle costs to the published thresholds");
    calibrate->add_option("--seed", cal_seed, "Construction seed of the target networks");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kOk : kUsage;
    }

    try {
        if (*generate) {
            return cmd_generate(benchmark, gen_seed, gen_out, out);
        }
        if (*run) {
            return cmd_run(config_path, o, out_dir, out);
        }
        if (*explore) {
            return cmd_explore(config_path, variants, o, out_dir, out);
        }
        if (*decompose) {
            return cmd_decompose(config_path, o, out_dir, out);
        }
        if (*thresholds) {
            return cmd_thresholds(config_path, o, out);
        }
        if (*calibrate) {
            return cmd_calibrate(cal_seed, out);
        }
    } catch (const ConfigError& e) {
        err << "config error: " << e.what() << '\n';
        return kConfig;
    } catch (const EncodingError& e) {
        err << "config error: " << e.what() << '\n';
        return kConfig;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return kRuntime;
    }
    return kUsage;
}

} // namespace neurodvfs::cli
