#include <doctest.h>

#include "neurodvfs/bench/builders.hpp"
#include "neurodvfs/errors.hpp"
#include "neurodvfs/sim/config.hpp"
#include "neurodvfs/sim/explore.hpp"
#include "neurodvfs/sim/harness.hpp"
#include "neurodvfs/sim/histogram.hpp"
#include "neurodvfs/sim/reports.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

using namespace neurodvfs;
using namespace neurodvfs::sim;

namespace {

SimConfig config_for(const std::string& policy, std::int64_t k_max)
{
    SimConfig c;
    c.policy = Policy::parse(policy);
    c.k_max = k_max;
    return c;
}

bench::NetworkSpec silent_local()
{
    bench::LocalOptions o;
    o.firing_fraction = 0.0;
    return bench::build_local(o);
}

} // namespace

TEST_SUITE("sim") {

TEST_CASE("silent network idles at PL1 with neuron-only workload")
{
    const auto net = silent_local();
    const SimConfig cfg = config_for("count", 50);
    const RunResult r = run(net, cfg);
    const auto& costs = cfg.costs;
    const double expected_ms = static_cast<double>(80 * costs.c_neur + costs.c_other) / 125.0e6 * 1000.0;
    REQUIRE(r.records.size() == 200);
    for (const auto& rec : r.records) {
        CHECK(rec.pl == 1);
        CHECK(rec.l_received == 0);
        CHECK(rec.executed_c == 80 * costs.c_neur + costs.c_other);
        CHECK(rec.t_sp_ms == doctest::Approx(expected_ms));
        // Only the per-timestep synapse offset, one core's share of it.
        CHECK(rec.energy.synapse == doctest::Approx(cfg.power_table.points[0].power.e_syn0_nj / 4.0));
        CHECK(rec.energy.n_syn == 0);
    }
    CHECK(r.raster.empty());
    CHECK(r.synaptic_events == 0);
    const auto report = r.component_report();
    CHECK(report.synapse_mw == doctest::Approx(cfg.power_table.points[0].power.e_syn0_nj / 1000.0));
    CHECK(report.baseline_mw > 0.0);
    CHECK(r.pe_power_mw() == doctest::Approx(report.pe_mw));
}

TEST_CASE("spike conservation")
{
    const auto net = bench::build_synfire();
    const auto routing = bench::build_routing(net);
    const RunResult r = run(net, config_for("count", 300));
    CHECK(r.spike_deliveries == r.spikes_processed + r.spikes_pending);

    std::uint64_t expected = 0;
    std::uint64_t emitted = 0;
    auto fanout_cores = [&](snn::NeuronId id) -> std::uint64_t {
        const auto it = routing.targets.find(id);
        return it == routing.targets.end() ? 0 : it->second.size();
    };
    for (const auto& s : r.raster) {
        expected += fanout_cores(s.neuron);
        ++emitted;
    }
    for (const auto& src : net.sources) {
        for (auto step : src.steps) {
            if (step >= 0 && step < 300) {
                expected += fanout_cores(src.id);
                ++emitted;
            }
        }
    }
    CHECK(r.spike_deliveries == expected);
    CHECK(r.spikes_emitted == emitted);
    CHECK(r.raster.size() > 1000);
    CHECK(std::is_sorted(r.raster.begin(), r.raster.end(), [](const SpikeRecord& a, const SpikeRecord& b) {
        return a.step != b.step ? a.step < b.step : a.neuron < b.neuron;
    }));

    std::uint64_t l_sum = 0;
    for (const auto& rec : r.records) {
        l_sum += rec.l_fifo;
    }
    CHECK(l_sum == r.spikes_processed);
}

TEST_CASE("runs are deterministic")
{
    const auto net = bench::build_bursting();
    const auto cfg = config_for("count", 200);
    const RunResult a = run(net, cfg);
    const RunResult b = run(net, cfg);
    CHECK(a.raster == b.raster);
    CHECK(a.chip_energy_nj == b.chip_energy_nj);
    std::ostringstream sa;
    std::ostringstream sb;
    write_records_csv(sa, a);
    write_records_csv(sb, b);
    CHECK(sa.str() == sb.str());
}

TEST_CASE("exact policy never misses a deadline and picks the lowest sufficient level")
{
    const auto net = bench::build_synfire();
    const SimConfig cfg = config_for("exact", 400);
    const RunResult r = run(net, cfg);
    CHECK(r.deadline_violations() == 0);
    const auto caps = cfg.pl_set.capacities(cfg.t_sys_ms);
    for (const auto& rec : r.records) {
        CHECK(rec.executed_c <= caps[rec.pl - 1]);
        if (rec.pl > 1) {
            CHECK(rec.executed_c > caps[rec.pl - 2]);
        }
    }
}

TEST_CASE("DVFS never costs more than fixed PL3 for the same activity")
{
    const auto net = bench::build_synfire();
    const RunResult dvfs = run(net, config_for("count", 400));
    const RunResult pl3 = run(net, config_for("fixed:PL3", 400));
    REQUIRE(dvfs.raster == pl3.raster);
    REQUIRE(dvfs.records.size() == pl3.records.size());
    for (std::size_t i = 0; i < dvfs.records.size(); ++i) {
        CHECK(dvfs.records[i].energy.total <= pl3.records[i].energy.total * (1.0 + 1e-12));
        CHECK(dvfs.records[i].pl <= 3);
        CHECK(pl3.records[i].pl == 3);
    }
    CHECK(dvfs.pe_power_mw() < pl3.pe_power_mw());
    CHECK(dvfs.deadline_violations() == 0);
}

TEST_CASE("count thresholds are the minimum over cores")
{
    const auto net = bench::build_bursting();
    const auto routing = bench::build_routing(net);
    SimConfig cfg = config_for("count", 10);
    const auto chip = network_thresholds(net, routing, cfg);
    REQUIRE(chip.size() == 2);
    CHECK(chip[0] < chip[1]);
    CHECK(run(net, cfg).thresholds == chip);
    cfg.thresholds = std::vector<std::uint64_t>{1, 2};
    CHECK(run(net, cfg).thresholds == std::vector<std::uint64_t>{1, 2});
}

TEST_CASE("decomposition matches the four-run differences and sums to the total")
{
    const auto net = bench::build_synfire();
    const SimConfig cfg = config_for("count", 300);
    const Decomposition d = decompose(net, cfg, "synfire");
    const auto& rep = d.report;
    CHECK(rep.label == "synfire");
    CHECK(rep.baseline_mw + rep.neuron_mw + rep.synapse_mw == doctest::Approx(rep.pe_mw).epsilon(1e-9));
    CHECK(rep.pe_mw == doctest::Approx(d.full.pe_power_mw()).epsilon(1e-9));
    CHECK(rep.total_mw == doctest::Approx(rep.pe_mw + cfg.infrastructure_mw));

    const auto per_cycle = d.full.component_report();
    CHECK(rep.baseline_mw == doctest::Approx(per_cycle.baseline_mw).epsilon(1e-9));
    CHECK(rep.neuron_mw == doctest::Approx(per_cycle.neuron_mw).epsilon(1e-9));
    CHECK(rep.synapse_mw == doctest::Approx(per_cycle.synapse_mw).epsilon(1e-9));

    double sum = 0.0;
    for (double e : d.full.chip_energy_nj) {
        sum += e;
    }
    // nJ per ms is uW.
    CHECK(d.full.pe_power_mw() == doctest::Approx(sum / (300 * cfg.t_sys_ms) / 1000.0).epsilon(1e-12));
    CHECK(rep.synapse_mw > 0.0);
    CHECK(rep.neuron_mw > 0.0);
}

TEST_CASE("reduced runs follow the imposed schedule")
{
    const auto net = bench::build_synfire();
    SimConfig cfg = config_for("count", 100);
    const RunResult full = run(net, cfg);
    cfg.mode = RunMode::NoSpikes;
    cfg.imposed = full.schedule();
    const RunResult ns = run(net, cfg);
    CHECK(ns.schedule() == full.schedule());
    CHECK(ns.synaptic_events == 0);
    CHECK(ns.spike_deliveries == 0);
    cfg.mode = RunMode::CoresOff;
    CHECK(run(net, cfg).pe_power_mw() == doctest::Approx(0.0));
}

TEST_CASE("histogram bins")
{
    std::vector<CycleRecord> recs(4);
    recs[0].pl = 1;
    recs[0].t_sp_ms = 0.0;
    recs[1].pl = 1;
    recs[1].t_sp_ms = 0.049;
    recs[2].pl = 3;
    recs[2].t_sp_ms = 0.05;
    recs[3].pl = 3;
    recs[3].t_sp_ms = 0.97;
    const auto h = pl_time_histogram(recs, 3);
    CHECK(h.bins() == 20);
    CHECK(h.counts[0][0] == 2);
    CHECK(h.counts[2][1] == 1);
    CHECK(h.counts[2][19] == 1);
    CHECK(h.total(1) == 2);
    CHECK(h.total(2) == 0);
    CHECK(h.max_t_sp_ms[2] == doctest::Approx(0.97));

    recs[3].t_sp_ms = 1.2;
    CHECK(pl_time_histogram(recs, 3).bins() >= 25);
    CHECK_THROWS_AS(pl_time_histogram({}, 3), Error);
    CHECK_THROWS_AS(pl_time_histogram(recs, 3, 0.0), Error);
    recs[0].pl = 4;
    CHECK_THROWS_AS(pl_time_histogram(recs, 3), Error);

    std::ostringstream os;
    write_histogram_csv(os, h);
    CHECK(os.str().rfind("pl,bin_start_ms,bin_end_ms,count\n", 0) == 0);
}

TEST_CASE("policy and PL-set parsing")
{
    CHECK(Policy::parse("exact").kind == PolicyKind::Exact);
    CHECK(Policy::parse("count").kind == PolicyKind::CountThreshold);
    CHECK(Policy::parse("fixed:PL2").fixed_pl == 2);
    CHECK(Policy::parse("fixed:PL2").to_string() == "fixed:PL2");
    CHECK_FALSE(Policy::parse("fixed:PL3").is_dvfs());
    CHECK_THROWS_AS(Policy::parse("greedy"), ConfigError);
    CHECK_THROWS_AS(Policy::parse("fixed:PL0"), ConfigError);
    CHECK(parse_pl_set("3pl").size() == 3);
    CHECK(parse_pl_set("3PL+DFS").dfs().has_value());
    CHECK(parse_pl_set("4pl").size() == 4);
    CHECK(parse_pl_set("2pl").top().voltage == dvfs::PlSet::standard().top().voltage);
    CHECK(parse_pl_set("2pl").top().frequency_hz == dvfs::PlSet::standard().top().frequency_hz);
    CHECK_THROWS_AS(parse_pl_set("5pl"), ConfigError);
}

TEST_CASE("config JSON round-trip and validation")
{
    SimConfig c = config_for("exact", 77);
    c.pl_set = parse_pl_set("3pl+dfs");
    c.seed = 9;
    const SimConfig back = sim_config_from_json(to_json(c));
    CHECK(back.k_max == 77);
    CHECK(back.policy == c.policy);
    CHECK(back.seed == 9);
    CHECK(back.costs == c.costs);
    CHECK(back.pl_set.dfs().has_value());

    CHECK_THROWS_AS(sim_config_from_json({{"k_max", 10}, {"bogus", 1}}), ConfigError);
    CHECK_THROWS_AS(sim_config_from_json({{"k_max", 0}}), ConfigError);
    CHECK_THROWS_AS(sim_config_from_json({{"policy", "fixed:PL4"}}), ConfigError);
    CHECK_THROWS_AS(sim_config_from_json({{"t_sys_ms", -1.0}}), ConfigError);
}

TEST_CASE("network and config mismatch is rejected")
{
    auto net = silent_local();
    SimConfig cfg = config_for("count", 10);
    cfg.imposed = Schedule(2, std::vector<ScheduleEntry>(10));
    CHECK_THROWS(run(net, cfg));
}

TEST_CASE("variant lists")
{
    CHECK(default_variants().size() == 4);
    CHECK(parse_variants("1pl, 4pl").size() == 2);
    CHECK_THROWS_AS(parse_variants(""), ConfigError);
    CHECK_THROWS_AS(parse_variants("3pl,9pl"), ConfigError);
    CHECK_THROWS_AS(explore_architectures(silent_local(), SimConfig{}, {}), ConfigError);
}

TEST_CASE("exploration reference row and reductions")
{
    const auto net = bench::build_synfire();
    const Exploration e = explore_architectures(net, config_for("count", 300), default_variants());
    REQUIRE(e.rows.size() == 4);
    CHECK(e.rows[0].levels == 1);
    CHECK(std::abs(e.rows[0].reduction_pct) < 1e-9);
    for (const auto& row : e.rows) {
        CHECK(row.reduction_pct == doctest::Approx(100.0 * (1.0 - row.pe_mw / e.reference_pe_mw)));
        CHECK(row.deadline_violations == 0);
    }
    CHECK(e.rows[3].dfs);
    CHECK(e.rows[3].pe_mw < e.rows[2].pe_mw);
    std::ostringstream os;
    write_exploration_csv(os, e);
    const std::string csv = os.str();
    CHECK(csv.rfind("variant,levels,dfs,thresholds,pe_mw,baseline_mw,neuron_mw,synapse_mw,reduction_pct,"
                    "pl_fractions,deadline_violations\n",
                    0) == 0);
    CHECK(std::count(csv.begin(), csv.end(), '\n') == 6);
}

} // TEST_SUITE
