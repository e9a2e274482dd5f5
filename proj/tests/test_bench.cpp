#include <doctest.h>

#include "neurodvfs/bench/builders.hpp"
#include "neurodvfs/errors.hpp"

#include <cmath>
#include <map>
#include <numeric>

using namespace neurodvfs;
using namespace neurodvfs::bench;

namespace {

std::uint64_t neuron_synapses_on(const NetworkSpec& s, std::uint32_t core)
{
    std::uint64_t n = 0;
    for (const auto& c : s.connections) {
        if (s.is_neuron(c.source) && s.core_of(c.target) == core) {
            ++n;
        }
    }
    return n;
}

std::uint64_t synapses_on(const NetworkSpec& s, std::uint32_t core)
{
    std::uint64_t n = 0;
    for (const auto& c : s.connections) {
        n += s.core_of(c.target) == core ? 1 : 0;
    }
    return n;
}

} // namespace

TEST_SUITE("bench") {

TEST_CASE("local network")
{
    const NetworkSpec s = build_local();
    CHECK(s.num_cores == 4);
    CHECK(s.neurons_per_core == 80);
    REQUIRE(s.forced.size() == 4);
    const Routing r = build_routing(s);
    std::uint64_t events = 0;
    for (std::uint32_t c = 0; c < 4; ++c) {
        CHECK(s.forced[c].size() == 50);
        for (auto f : r.fanouts(c)) {
            CHECK(f == 80);
        }
        for (auto local : s.forced[c]) {
            events += r.rows[c].at(c * 80 + local).fan_out();
        }
    }
    CHECK(events == 16000);
    for (const auto& [src, cores] : r.targets) {
        CHECK(cores == std::vector<std::uint32_t>{s.core_of(src)});
    }

    LocalOptions none;
    none.firing_fraction = 0.0;
    const NetworkSpec quiet = build_local(none);
    for (const auto& f : quiet.forced) {
        CHECK(f.empty());
    }
    LocalOptions bad;
    bad.firing_fraction = 1.5;
    CHECK_THROWS_AS(build_local(bad), NetworkError);
}

TEST_CASE("synfire in-degrees, delays and synapse counts")
{
    const auto o = default_synfire_options();
    const NetworkSpec s = build_synfire(o);
    CHECK(s.num_cores == 4);
    CHECK(s.neurons_per_core == 250);
    std::map<NeuronId, int> from_e;
    std::map<NeuronId, int> from_i;
    for (const auto& c : s.connections) {
        if (!s.is_neuron(c.source)) {
            continue;
        }
        const bool src_e = s.local_index(c.source) < 200;
        if (src_e) {
            ++from_e[c.target];
            CHECK(c.delay == 9);
            CHECK(s.core_of(c.target) == (s.core_of(c.source) + 1) % 4);
            CHECK(c.type == snn::SynapseType::Excitatory);
        } else {
            ++from_i[c.target];
            CHECK(c.delay == 7);
            CHECK(s.core_of(c.target) == s.core_of(c.source));
            CHECK(c.type == snn::SynapseType::Inhibitory);
        }
    }
    for (NeuronId n = 0; n < s.neuron_count(); ++n) {
        const bool is_e = s.local_index(n) < 200;
        CHECK(from_e[n] == 60);
        CHECK(from_i[n] == (is_e ? 25 : 0));
    }
    for (std::uint32_t c = 0; c < 4; ++c) {
        CHECK(neuron_synapses_on(s, c) == 20000);
    }
}

TEST_CASE("synfire fan-outs average 80 per core")
{
    const NetworkSpec s = build_synfire(default_synfire_options());
    const Routing r = build_routing(s);
    for (std::uint32_t c = 0; c < 4; ++c) {
        std::uint64_t words = 0;
        std::uint64_t rows = 0;
        for (const auto& [src, row] : r.rows[c]) {
            if (s.is_neuron(src)) {
                words += row.fan_out();
                ++rows;
            }
        }
        CHECK(rows == 250);
        CHECK(static_cast<double>(words) / rows == doctest::Approx(80.0));
        const NeuronId first_i = c * 250 + 200;
        CHECK(r.rows[c].at(first_i).fan_out() == doctest::Approx(100).epsilon(0.3));
    }
}

TEST_CASE("synfire stimulus is a 400-spike packet into group 1")
{
    const auto o = default_synfire_options();
    const NetworkSpec s = build_synfire(o);
    REQUIRE(s.sources.size() == 400);
    double sum = 0.0;
    double sq = 0.0;
    for (const auto& src : s.sources) {
        CHECK(src.via_fifo);
        REQUIRE(src.steps.size() == 1);
        sum += src.steps[0];
        sq += src.steps[0] * static_cast<double>(src.steps[0]);
    }
    const double mean = sum / 400.0;
    const double sd = std::sqrt(sq / 400.0 - mean * mean);
    CHECK(mean == doctest::Approx(o.stimulus_onset_ms).epsilon(0.03));
    // Rounding to whole steps adds 1/12 ms^2 of variance.
    CHECK(sd == doctest::Approx(std::sqrt(2.4 * 2.4 + 1.0 / 12.0)).epsilon(0.15));
    for (const auto& c : s.connections) {
        if (!s.is_neuron(c.source)) {
            CHECK(s.core_of(c.target) == 0);
        }
    }
    SynfireOptions one = o;
    one.groups = 1;
    CHECK_THROWS_AS(build_synfire(one), NetworkError);
}

TEST_CASE("bursting topology within three sigma of the binomial expectation")
{
    const NetworkSpec s = build_bursting();
    REQUIRE(s.sources.size() == 200);
    for (std::uint32_t c = 0; c < 4; ++c) {
        std::uint64_t rec = 0;
        std::uint64_t bg = 0;
        std::uint64_t self = 0;
        for (const auto& x : s.connections) {
            if (s.core_of(x.target) != c) {
                continue;
            }
            if (!s.is_neuron(x.source)) {
                ++bg;
            } else if (x.source == x.target) {
                ++self;
                CHECK(x.type == snn::SynapseType::Inhibitory);
            } else {
                ++rec;
            }
        }
        const double n_rec = 250.0 * 999.0;
        CHECK(std::abs(rec - n_rec * 0.08) < 3.0 * std::sqrt(n_rec * 0.08 * 0.92));
        const double n_bg = 250.0 * 200.0;
        CHECK(std::abs(bg - n_bg * 0.1) < 3.0 * std::sqrt(n_bg * 0.1 * 0.9));
        CHECK(self == 250);
        CHECK(synapses_on(s, c) == doctest::Approx(25000).epsilon(0.03));
    }
    const Routing r = build_routing(s);
    for (std::uint32_t c = 0; c < 4; ++c) {
        const auto f = r.fanouts(c);
        const double avg = std::accumulate(f.begin(), f.end(), 0.0) / f.size();
        CHECK(avg == doctest::Approx(21.0).epsilon(0.05));
    }
    for (const auto& src : s.sources) {
        CHECK_FALSE(src.via_fifo);
        CHECK(src.kind == SourceKind::Poisson);
    }
}

TEST_CASE("async topology")
{
    const NetworkSpec s = build_async();
    const Routing r = build_routing(s);
    for (std::uint32_t c = 0; c < 4; ++c) {
        CHECK(synapses_on(s, c) == doctest::Approx(10000).epsilon(0.05));
        const auto f = r.fanouts(c);
        CHECK(std::accumulate(f.begin(), f.end(), 0.0) / f.size() == doctest::Approx(8.0).epsilon(0.1));
    }
    for (const auto& x : s.connections) {
        CHECK(x.type == snn::SynapseType::Excitatory);
    }
    auto o = default_async_options();
    o.p_rec = 0.0;
    const NetworkSpec none = build_async(o);
    for (const auto& x : none.connections) {
        CHECK_FALSE(none.is_neuron(x.source));
    }
}

TEST_CASE("row fan-outs equal construction-time connection counts")
{
    for (const auto& s : {build_synfire(), build_bursting(), build_local()}) {
        const Routing r = build_routing(s);
        std::map<std::pair<NeuronId, std::uint32_t>, std::size_t> counts;
        for (const auto& c : s.connections) {
            ++counts[{c.source, s.core_of(c.target)}];
        }
        std::size_t rows = 0;
        for (std::uint32_t core = 0; core < s.num_cores; ++core) {
            for (const auto& [src, row] : r.rows[core]) {
                CHECK(row.fan_out() == counts.at({src, core}));
                ++rows;
            }
        }
        CHECK(rows == counts.size());
    }
}

TEST_CASE("builders are deterministic and seed-sensitive")
{
    CHECK(build_named("bursting", 3) == build_named("bursting", 3));
    CHECK(build_named("synfire", 3) == build_named("synfire", 3));
    CHECK_FALSE(build_named("bursting", 3) == build_named("bursting", 4));
    CHECK_THROWS_AS(build_named("vogels-abbott", 1), ConfigError);
}

TEST_CASE("network JSON round-trip")
{
    for (const char* name : {"local", "synfire", "async"}) {
        const NetworkSpec s = build_named(name, 2);
        const NetworkSpec back = network_from_json(to_json(s));
        CHECK(back == s);
    }
    auto j = to_json(build_local());
    j["connections"][0][1] = 100000;
    CHECK_THROWS_AS(network_from_json(j), NetworkError);
}

} // TEST_SUITE
