#include "neurodvfs/snn/neuron.hpp"

#include "neurodvfs/errors.hpp"

#include <cmath>

namespace neurodvfs::snn {

NeuronState resting_state(const LifParams& p) noexcept
{
    NeuronState s;
    s.v = p.e_leak;
    return s;
}

double steady_state_voltage(const LifParams& p, double g_exc, double g_inh, double current) noexcept
{
    return (p.e_leak + g_exc * p.e_exc + g_inh * p.e_inh + current) / (1.0 + g_exc + g_inh);
}

bool step_neuron(NeuronState& s, const LifParams& p, const SlotInput& input, double noise_current, double dt_ms,
                 bool forced)
{
    s.g_exc += input.excitatory * p.exc_scale;
    if (p.sfa) {
        s.g_adapt += input.inhibitory * p.inh_scale;
    } else {
        s.g_inh += input.inhibitory * p.inh_scale;
    }

    bool fired = false;
    if (forced) {
        fired = true;
    } else if (s.refractory > 0) {
        --s.refractory;
        s.v = p.v_reset;
    } else {
        // Exponential update, exact for conductances held over the step.
        const double g_total = 1.0 + s.g_exc + s.g_inh + s.g_adapt;
        const double v_inf =
            (p.e_leak + s.g_exc * p.e_exc + s.g_inh * p.e_inh + s.g_adapt * p.e_adapt + noise_current) / g_total;
        s.v = v_inf + (s.v - v_inf) * std::exp(-dt_ms * g_total / p.tau_m);
        fired = s.v >= p.v_threshold;
    }
    if (fired) {
        s.v = p.v_reset;
        s.refractory = p.refractory_steps;
    }

    s.g_exc *= std::exp(-dt_ms / p.tau_exc);
    s.g_inh *= std::exp(-dt_ms / p.tau_inh);
    s.g_adapt *= std::exp(-dt_ms / p.tau_adapt);

    if (!std::isfinite(s.v) || !std::isfinite(s.g_exc) || !std::isfinite(s.g_inh) || !std::isfinite(s.g_adapt)) {
        throw NumericalError("non-finite neuron state");
    }
    return fired;
}

} // namespace neurodvfs::snn
