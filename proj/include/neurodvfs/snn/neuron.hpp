#pragma once

#include "neurodvfs/snn/ring_buffer.hpp"

#include <cstdint>

namespace neurodvfs::snn {

/// Conductance-based leaky integrate-and-fire parameters. Voltages in mV,
/// time constants in ms, conductances relative to the leak conductance.
/// Defaults follow the usual synfire-with-feedforward-inhibition setup;
/// none of them are normative.
struct LifParams {
    double tau_m = 15.0;
    double e_leak = -70.0;
    double v_threshold = -55.0;
    double v_reset = -70.0;
    double e_exc = 0.0;
    double e_inh = -75.0;
    double e_adapt = -80.0;
    double tau_exc = 1.5;
    double tau_inh = 10.0;
    double tau_adapt = 144.0;
    std::uint32_t refractory_steps = 2;
    /// Conductance per raw weight LSB.
    double exc_scale = 1.0e-4;
    double inh_scale = 1.0e-4;
    /// With SFA the inhibitory channel feeds the slow adaptation conductance.
    bool sfa = false;
    double noise_mean = 0.0;
    double noise_std = 0.0;

    friend bool operator==(const LifParams&, const LifParams&) = default;
};

struct NeuronState {
    double v = -70.0;
    double g_exc = 0.0;
    double g_inh = 0.0;
    double g_adapt = 0.0;
    std::uint32_t refractory = 0;

    friend bool operator==(const NeuronState&, const NeuronState&) = default;
};

NeuronState resting_state(const LifParams& p) noexcept;

/// Advances one neuron by one timestep of length dt_ms. `noise_current`
/// is the already-drawn noise drive in mV. Returns true if the neuron
/// fired. Throws NumericalError on a non-finite state.
bool step_neuron(NeuronState& state, const LifParams& p, const SlotInput& input, double noise_current,
                 double dt_ms, bool forced = false);

/// Membrane fixed point for constant conductances and current (no adaptation).
double steady_state_voltage(const LifParams& p, double g_exc, double g_inh, double current) noexcept;

} // namespace neurodvfs::snn
