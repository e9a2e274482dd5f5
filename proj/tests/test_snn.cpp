#include <doctest.h>

#include "neurodvfs/errors.hpp"
#include "neurodvfs/rng.hpp"
#include "neurodvfs/snn/core.hpp"
#include "neurodvfs/snn/neuron.hpp"
#include "neurodvfs/snn/ring_buffer.hpp"
#include "neurodvfs/snn/spike_fifo.hpp"
#include "neurodvfs/snn/synapse_row.hpp"
#include "neurodvfs/snn/synapse_word.hpp"

#include <cmath>
#include <filesystem>
#include <fstream>

using namespace neurodvfs;
using namespace neurodvfs::snn;

TEST_SUITE("snn") {

TEST_CASE("synapse word packs fields at the documented bit positions")
{
    const std::uint32_t w = encode_synapse_word(0x1234, 0xAB, 1, 7);
    CHECK((w & 0xFFFF) == 0x1234);
    CHECK(((w >> 16) & 0xFF) == 0xAB);
    CHECK(((w >> 24) & 1) == 1);
    CHECK(((w >> 25) & 0xF) == 7);
    CHECK((w >> 29) == 0);
    CHECK(encode_synapse_word(0, 0, 0, 0) == 0);
}

TEST_CASE("synapse word hand-packed examples")
{
    CHECK(encode_synapse_word(0, 0, 0, 0) == 0x00000000U);
    CHECK(encode_synapse_word(0xFFFF, 0xFF, 1, 0xF) == 0x1FFFFFFFU);
    CHECK(encode_synapse_word(1, 2, 0, 3) == 0x06020001U);
}

TEST_CASE("synapse word round-trips every field combination sampled")
{
    Rng rng(42);
    for (int i = 0; i < 20000; ++i) {
        SynapseWord s;
        s.weight = static_cast<std::uint16_t>(rng.below(65536));
        s.target = static_cast<std::uint8_t>(rng.below(256));
        s.type = rng.bernoulli(0.5) ? SynapseType::Inhibitory : SynapseType::Excitatory;
        s.delay = static_cast<std::uint8_t>(rng.below(16));
        REQUIRE(decode(encode(s)) == s);
    }
    for (std::uint32_t d = 0; d <= kMaxDelay; ++d) {
        CHECK(decode(encode_synapse_word(65535, 255, 1, d)).delay == d);
    }
}

TEST_CASE("synapse word rejects out-of-range fields")
{
    CHECK_THROWS_AS(encode_synapse_word(65536, 0, 0, 0), EncodingError);
    CHECK_THROWS_AS(encode_synapse_word(0, 256, 0, 0), EncodingError);
    CHECK_THROWS_AS(encode_synapse_word(0, 80, 0, 0, 80), EncodingError);
    CHECK_NOTHROW(encode_synapse_word(0, 79, 0, 0, 80));
    CHECK_THROWS_AS(encode_synapse_word(0, 0, 2, 0), EncodingError);
    CHECK_THROWS_AS(encode_synapse_word(0, 0, 0, 16), EncodingError);
    CHECK_THROWS_AS(decode(1U << 29), EncodingError);
    CHECK_THROWS_AS(decode(0x80000000U), EncodingError);
}

TEST_CASE("synapse rows survive the binary dump")
{
    RowTable rows;
    rows[7] = {7, {encode_synapse_word(10, 1, 0, 2), encode_synapse_word(20, 3, 1, 15)}};
    rows[3] = {3, {}};
    rows[1000] = {1000, {encode_synapse_word(65535, 255, 0, 0)}};
    const auto path = std::filesystem::temp_directory_path() / "neurodvfs_rows_test.bin";
    write_rows(path, rows);
    CHECK(std::filesystem::file_size(path) == 4 * (3 + 2 * 3 + 3));
    {
        std::ifstream in(path, std::ios::binary);
        unsigned char magic[4];
        in.read(reinterpret_cast<char*>(magic), 4);
        CHECK(magic[0] == 'S');
        CHECK(magic[1] == 'R');
        CHECK(magic[2] == 'O');
        CHECK(magic[3] == 'W');
    }
    const RowTable back = read_rows(path);
    REQUIRE(back.size() == rows.size());
    for (const auto& [src, row] : rows) {
        CHECK(back.at(src).source == src);
        CHECK(back.at(src).words == row.words);
    }
    std::filesystem::remove(path);
}

TEST_CASE("ring buffer delivers a weight exactly d steps later")
{
    for (unsigned d = 0; d < kDelaySlots; ++d) {
        InputRingBuffer buf(4);
        for (unsigned warm = 0; warm < d % 5; ++warm) {
            buf.consume();
        }
        buf.add(2, d, SynapseType::Excitatory, 100);
        buf.add(2, d, SynapseType::Inhibitory, 7);
        CHECK(buf.peek(2, d).excitatory == 100);
        for (unsigned step = 0; step <= d; ++step) {
            const auto in = buf.consume();
            if (step == d) {
                CHECK(in[2].excitatory == 100);
                CHECK(in[2].inhibitory == 7);
            } else {
                CHECK(in[2].excitatory == 0);
            }
        }
        CHECK(buf.pending() == 0);
        CHECK(buf.total_consumed() == buf.total_inserted());
    }
}

TEST_CASE("ring buffer saturates instead of wrapping")
{
    InputRingBuffer buf(1);
    for (int i = 0; i < 70000; ++i) {
        buf.add(0, 1, SynapseType::Excitatory, 65535);
    }
    CHECK(buf.peek(0, 1).excitatory == UINT32_MAX);
    CHECK(buf.saturation_events() > 0);
    CHECK_THROWS_AS(buf.add(1, 0, SynapseType::Excitatory, 1), NetworkError);
    CHECK_THROWS_AS(buf.add(0, 16, SynapseType::Excitatory, 1), NetworkError);
}

TEST_CASE("spike FIFO holds a spike for one cycle")
{
    SpikeFifo fifo;
    fifo.push(5, 10);
    fifo.push(6, 10);
    CHECK(fifo.visible(10) == 0);
    CHECK(fifo.drain(10).empty());
    CHECK(fifo.visible(11) == 2);
    fifo.push(7, 11);
    const auto got = fifo.drain(11);
    REQUIRE(got.size() == 2);
    CHECK(got[0].source == 5);
    CHECK(got[1].source == 6);
    CHECK(fifo.size() == 1);
    CHECK_THROWS_AS(fifo.push(8, 10), Error);
}

namespace {

/// Steps from reset to threshold for a conductance g held constant.
std::uint32_t closed_form_steps(const LifParams& p, double g)
{
    const double v_inf = (p.e_leak + g * p.e_exc) / (1.0 + g);
    const double tau_eff = p.tau_m / (1.0 + g);
    return static_cast<std::uint32_t>(std::ceil(tau_eff * std::log((v_inf - p.v_reset) / (v_inf - p.v_threshold))));
}

} // namespace

TEST_CASE("regular firing under a constant conductance matches the closed form")
{
    LifParams p;
    p.tau_exc = 1e12;
    for (double g : {0.37, 0.61, 1.3, 2.9}) {
        for (std::uint32_t refractory : {0U, 2U, 5U}) {
            p.refractory_steps = refractory;
            NeuronState s = resting_state(p);
            SlotInput kick{static_cast<std::uint32_t>(std::lround(g / p.exc_scale)), 0};
            std::vector<int> spikes;
            for (int step = 0; step < 400; ++step) {
                if (step_neuron(s, p, step == 0 ? kick : SlotInput{}, 0.0, 1.0)) {
                    spikes.push_back(step);
                }
            }
            REQUIRE(spikes.size() >= 3);
            const double g_held = std::lround(g / p.exc_scale) * p.exc_scale;
            const auto expected = refractory + closed_form_steps(p, g_held);
            for (std::size_t i = 1; i < spikes.size(); ++i) {
                CHECK(static_cast<std::uint32_t>(spikes[i] - spikes[i - 1]) == expected);
            }
        }
    }
}

TEST_CASE("subthreshold drive settles at the steady-state voltage without firing")
{
    LifParams p;
    p.tau_exc = 1e12;
    NeuronState s = resting_state(p);
    const double g = 0.1;
    step_neuron(s, p, {static_cast<std::uint32_t>(std::lround(g / p.exc_scale)), 0}, 0.0, 1.0);
    bool fired = false;
    for (int i = 0; i < 500; ++i) {
        fired |= step_neuron(s, p, {}, 0.0, 1.0);
    }
    CHECK_FALSE(fired);
    CHECK(s.v == doctest::Approx(steady_state_voltage(p, g, 0.0, 0.0)).epsilon(1e-9));
}

TEST_CASE("forced neurons fire and reset; refractory clamps")
{
    LifParams p;
    p.refractory_steps = 3;
    NeuronState s = resting_state(p);
    CHECK(step_neuron(s, p, {}, 0.0, 1.0, true));
    CHECK(s.refractory == 3);
    SlotInput huge{60000, 0};
    for (int i = 0; i < 3; ++i) {
        CHECK_FALSE(step_neuron(s, p, huge, 0.0, 1.0));
        CHECK(s.v == p.v_reset);
    }
    CHECK(step_neuron(s, p, huge, 0.0, 1.0));
}

TEST_CASE("non-finite state is reported")
{
    LifParams p;
    NeuronState s = resting_state(p);
    CHECK_THROWS_AS(step_neuron(s, p, {}, std::nan(""), 1.0), NumericalError);
}

TEST_CASE("core charges c_pre plus fan-out times c_syn per spike")
{
    RowTable rows;
    rows[100] = {100, {encode_synapse_word(5, 0, 0, 0), encode_synapse_word(5, 1, 0, 3), encode_synapse_word(5, 2, 1, 1)}};
    WorkloadCosts costs{10, 3, 50, 7, 2};
    Core core(0, 0, 4, LifParams{}, rows, costs, 1);
    CHECK(core.fan_out(100) == 3);
    CHECK(core.process_spike_event(100) == 50 + 3 * 3);
    CHECK(core.synaptic_events() == 3);
    CHECK_THROWS_AS(core.process_spike_event(101), RoutingError);
    CHECK_THROWS_AS(core.fan_out(101), RoutingError);
    const auto upd = core.update_neurons(0, 1.0);
    CHECK(upd.cycles == 4 * 10);
    CHECK_THROWS_AS(Core(1, 0, 257, LifParams{}, {}, costs, 1), NetworkError);
}

TEST_CASE("row cost examples")
{
    RowTable rows;
    rows[1] = {1, {}};
    rows[2] = {2, std::vector<std::uint32_t>(80, encode_synapse_word(1, 0, 0, 0))};
    WorkloadCosts costs{0, 30, 200, 0, 0};
    Core core(0, 0, 250, LifParams{}, rows, costs, 1);
    const auto before = core.ring_buffer().total_inserted();
    CHECK(core.process_spike_event(1) == 200);
    CHECK(core.ring_buffer().total_inserted() == before);
    CHECK(core.process_spike_event(2) == 2600);

    WorkloadCosts neur{246, 0, 0, 0, 0};
    Core big(0, 0, 250, LifParams{}, {}, neur, 1);
    CHECK(big.update_neurons(0, 1.0).cycles == 250 * 246);
}

TEST_CASE("zero input at rest stays at rest")
{
    LifParams p;
    NeuronState s = resting_state(p);
    for (int i = 0; i < 1000; ++i) {
        REQUIRE_FALSE(step_neuron(s, p, {}, 0.0, 1.0));
    }
    CHECK(s.v == p.e_leak);
}

TEST_CASE("noise is a pure function of seed, neuron and step")
{
    LifParams p;
    p.noise_std = 30.0;
    Core a(0, 0, 50, p, {}, {}, 99);
    Core b(0, 0, 50, p, {}, {}, 99);
    Core c(0, 0, 50, p, {}, {}, 100);
    bool differs = false;
    for (int step = 0; step < 200; ++step) {
        const auto fa = a.update_neurons(step, 1.0);
        const auto fb = b.update_neurons(step, 1.0);
        c.update_neurons(step, 1.0);
        REQUIRE(fa.fired == fb.fired);
    }
    for (std::size_t i = 0; i < 50; ++i) {
        CHECK(a.states()[i] == b.states()[i]);
        differs |= !(a.states()[i] == c.states()[i]);
    }
    CHECK(differs);
}

} // TEST_SUITE
