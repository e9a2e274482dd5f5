#include <doctest.h>

#include "neurodvfs/energy/cycle_energy.hpp"
#include "neurodvfs/energy/decomposition.hpp"
#include "neurodvfs/energy/fit.hpp"
#include "neurodvfs/energy/power_params.hpp"
#include "neurodvfs/errors.hpp"

#include <cmath>
#include <sstream>

using namespace neurodvfs;
using namespace neurodvfs::energy;

namespace {

PowerModelParams standard_params()
{
    return PowerModelParams::for_pl_set(dvfs::PlSet::standard(), ReferencePowerTable::measured());
}

} // namespace

TEST_SUITE("energy") {

TEST_CASE("measured table")
{
    const auto t = ReferencePowerTable::measured();
    REQUIRE(t.points.size() == 3);
    CHECK(t.points[0].power.p_bl_leak_mw == 8.94);
    CHECK(t.points[0].power.p_bl_mw == 14.92);
    CHECK(t.points[1].power.p_bl_mw == 37.44);
    CHECK(t.points[2].power.p_bl_mw == 71.17);
    CHECK(t.points[2].power.e_neur_nj == 3.96);
    CHECK(t.points[2].power.e_syn0_nj == 1490.0);
    CHECK(t.chip_cores == 4);
}

TEST_CASE("V^2 fit of the synapse and neuron energies")
{
    const std::vector<double> v{0.70, 0.85, 1.00};
    const std::vector<double> syn{0.45, 0.65, 0.90};
    const std::vector<double> neur{2.19, 2.88, 3.96};
    const auto fs = fit_vdd_squared(syn, v);
    CHECK(fs.max_abs_residual() < 0.05);
    const auto fn = fit_vdd_squared(neur, v);
    CHECK(fn.max_abs_residual() < 0.15);
    CHECK(fn.max_abs_residual() == doctest::Approx(0.107).epsilon(0.02));

    // Oracle: closed-form least squares through the origin in V^2.
    double num = 0.0;
    double den = 0.0;
    for (std::size_t i = 0; i < 3; ++i) {
        num += syn[i] * v[i] * v[i];
        den += std::pow(v[i], 4);
    }
    CHECK(fs.e_norm == doctest::Approx(num / den));
    for (std::size_t i = 0; i < 3; ++i) {
        const double fit = fs.e_norm * v[i] * v[i];
        CHECK(fs.residuals[i] == doctest::Approx((syn[i] - fit) / fit));
    }
}

TEST_CASE("fit edge cases")
{
    CHECK(fit_vdd_squared_single(0.9, 1.0).e_norm == 0.9);
    CHECK(fit_vdd_squared_single(0.45, 0.7).e_norm == doctest::Approx(0.45 / 0.49));
    const std::vector<double> one{1.0};
    CHECK_THROWS_AS(fit_vdd_squared(one, one), FitError);
    const std::vector<double> two{1.0, 2.0};
    const std::vector<double> same{0.8, 0.8};
    CHECK_THROWS_AS(fit_vdd_squared(two, same), FitError);
    const std::vector<double> three{1.0, 2.0, 3.0};
    CHECK_THROWS_AS(fit_vdd_squared(two, three), FitError);
}

TEST_CASE("interpolation is exact at measured points and monotone between")
{
    const auto t = ReferencePowerTable::measured();
    for (const auto& p : t.points) {
        CHECK(interpolate_power(t, p.voltage, p.frequency_hz) == p.power);
    }
    const auto p08 = interpolate_power(t, 0.80, 300e6);
    const auto p09 = interpolate_power(t, 0.90, 400e6);
    CHECK(p08.p_bl_mw > 14.92);
    CHECK(p08.p_bl_mw < p09.p_bl_mw);
    CHECK(p09.p_bl_mw < 71.17);
    CHECK(p08.p_bl_leak_mw == doctest::Approx(8.94 + (20.03 - 8.94) * (0.10 / 0.15)));
    CHECK(p08.e_syn_nj > 0.45);
    CHECK(p09.e_syn_nj < 0.90);
    CHECK_THROWS_AS(interpolate_power(t, 0.6, 100e6), ConfigError);
    CHECK_THROWS_AS(interpolate_power(t, 1.1, 600e6), ConfigError);
}

TEST_CASE("DFS sublevel baseline")
{
    const auto pl1 = ReferencePowerTable::measured().points[0].power;
    CHECK(dfs_baseline_power(pl1, 125e6, 10e6) == doctest::Approx(8.94 + (14.92 - 8.94) * 10.0 / 125.0));
    CHECK(dfs_baseline_power(pl1, 125e6, 10e6) == doctest::Approx(9.4184));
    CHECK(dfs_baseline_power(pl1, 125e6, 125e6) == doctest::Approx(14.92));
    CHECK(dfs_baseline_power(pl1, 125e6, 0.0) == doctest::Approx(8.94));
}

TEST_CASE("cycle energy examples at chip scale")
{
    const auto params = standard_params();
    const auto idle = cycle_energy(1, 0.0, 0, 0, params, 1.0, {}, {false, false});
    CHECK(idle.total == doctest::Approx(14920.0));
    const auto e = cycle_energy(1, 1.0, 1000, 3030, params, 1.0);
    CHECK(e.total == doctest::Approx(14920.0 + 1000.0 + 2190.0 + 730.0 + 0.45 * 3030));
    CHECK(e.total / 1000.0 == doctest::Approx(20.2).epsilon(0.01));
    const auto twice = cycle_energy(1, 1.0, 1000, 6060, params, 1.0);
    CHECK(twice.total - e.total == doctest::Approx(0.45 * 3030));
}

TEST_CASE("cycle energy splits active and idle baseline per core")
{
    const auto params = standard_params();
    const auto e = cycle_energy(3, 0.4, 250, 100, params, 1.0, {1, false}, {}, 0.25);
    CHECK(e.baseline_active == doctest::Approx(0.25 * 71.17 * 0.4 * 1000.0));
    CHECK(e.baseline_idle == doctest::Approx(0.25 * 14.92 * 0.6 * 1000.0));
    CHECK(e.neuron == doctest::Approx(0.25 * 1540.0 + 3.96 * 250));
    CHECK(e.synapse == doctest::Approx(0.25 * 1490.0 + 0.90 * 100));
    CHECK(e.total == doctest::Approx(e.baseline_active + e.baseline_idle + e.neuron + e.synapse));
    CHECK_FALSE(e.deadline_violation);

    const auto over = cycle_energy(2, 1.3, 250, 100, params, 1.0, {1, false}, {}, 0.25);
    CHECK(over.deadline_violation);
    CHECK(over.baseline_idle == 0.0);

    CHECK_THROWS_AS(cycle_energy(4, 0.1, 0, 0, params, 1.0), ConfigError);
    CHECK_THROWS_AS(cycle_energy(1, 0.1, 0, 0, params, 1.0, {1, true}), ConfigError);
    CHECK_THROWS_AS(cycle_energy(1, -0.1, 0, 0, params, 1.0), ConfigError);
}

TEST_CASE("cycle energy is non-decreasing in the level for fixed activity")
{
    const auto params = standard_params();
    for (double t : {0.0, 0.2, 0.5, 0.9}) {
        double last = 0.0;
        for (unsigned pl = 1; pl <= 3; ++pl) {
            const auto e = cycle_energy(pl, t, 250, 500, params, 1.0, {pl, false}, {}, 0.25);
            CHECK(e.total >= last);
            last = e.total;
        }
    }
}

TEST_CASE("average power")
{
    const std::vector<double> same(100, 20000.0);
    CHECK(average_power(same, 1.0) == doctest::Approx(20.0));
    CHECK_THROWS_AS(average_power(std::vector<double>{}, 1.0), Error);
    std::vector<double> mixed;
    for (int i = 0; i < 1000; ++i) {
        mixed.push_back(i % 2 ? 1e-3 : 1e5);
    }
    CHECK(sum_energy(mixed) == doctest::Approx(500.0 * 1e5 + 500.0 * 1e-3));
}

TEST_CASE("parameter invariants")
{
    PlPower a{8.94, 14.92, 1000, 2.19, 730, 0.45};
    PlPower b{20.03, 37.44, 1410, 2.88, 990, 0.65};
    CHECK_NOTHROW(PowerModelParams({a, b}, std::nullopt, 4));
    PlPower leaky = a;
    leaky.p_bl_leak_mw = 20.0;
    CHECK_THROWS_AS(PowerModelParams({leaky, b}, std::nullopt, 4), ConfigError);
    CHECK_THROWS_AS(PowerModelParams({b, a}, std::nullopt, 4), ConfigError);
    PlPower neg = a;
    neg.e_syn_nj = -1.0;
    CHECK_THROWS_AS(PowerModelParams({neg, b}, std::nullopt, 4), ConfigError);
    const auto p = PowerModelParams::for_pl_set(
        dvfs::PlSet::from_points({{0.7, 125}, {0.85, 333}, {1.0, 500}}, 10.0), ReferencePowerTable::measured());
    REQUIRE(p.dfs_idle_mw());
    CHECK(*p.dfs_idle_mw() == doctest::Approx(9.4184));
    CHECK(p.infrastructure_mw() == 48.2);
}

TEST_CASE("decomposition deltas")
{
    RunPower full{{30000, 32000}, 1.0, 4000};
    RunPower same = full;
    const auto zero = decompose_power(full, same, same, same, 48.2);
    CHECK(zero.baseline_mw == 0.0);
    CHECK(zero.neuron_mw == 0.0);
    CHECK(zero.synapse_mw == 0.0);

    RunPower no_spikes{{25000, 25000}, 1.0, 0};
    RunPower empty{{20000, 20000}, 1.0, 0};
    RunPower off{{0, 0}, 1.0, 0};
    const auto r = decompose_power(full, no_spikes, empty, off, 48.2, "x");
    CHECK(r.synapse_mw == doctest::Approx(6.0));
    CHECK(r.neuron_mw == doctest::Approx(5.0));
    CHECK(r.baseline_mw == doctest::Approx(20.0));
    CHECK(r.pe_mw == doctest::Approx(31.0));
    CHECK(r.pe_mw == doctest::Approx(r.baseline_mw + r.neuron_mw + r.synapse_mw));
    CHECK(r.total_mw == doctest::Approx(79.2));
    CHECK(r.syn_events_per_s == doctest::Approx(2e6));
    CHECK(r.e_per_syn_event_pe_nj == doctest::Approx(31.0 / 2e6 * 1e6));
    RunPower shorter{{1.0}, 1.0, 0};
    CHECK_THROWS_AS(decompose_power(full, shorter, empty, off, 48.2), Error);

    std::ostringstream os;
    write_energy_csv(os, std::span(&r, 1));
    const std::string csv = os.str();
    CHECK(csv.rfind("quantity,x\ntotal_mw,", 0) == 0);
    CHECK(csv.find("e_per_syn_event_pe_nj,") != std::string::npos);
    CHECK(to_json(r)["pe_mw"].get<double>() == doctest::Approx(31.0));
}

TEST_CASE("zero activity leaves the synapse row empty")
{
    RunPower full{{20000, 20000}, 1.0, 0};
    RunPower empty{{17000, 17000}, 1.0, 0};
    RunPower off{{0, 0}, 1.0, 0};
    const auto r = decompose_power(full, full, empty, off, 48.2);
    CHECK(r.synapse_mw == 0.0);
    CHECK(std::isnan(r.e_per_syn_event_nj));
    CHECK(to_json(r)["e_per_syn_event_nj"].is_null());
}

} // TEST_SUITE
