#include "soen/synapse.hpp"

#include <algorithm>
#include <cmath>

namespace soen {

long long fluxon_yield(const FluxonYieldTable& table, double bias) {
    table.validate();
    if (bias < table.min_bias() * (1.0 - 1e-9) || bias > table.max_bias() * (1.0 + 1e-9))
        throw std::out_of_range("fluxon_yield: bias outside the calibrated range");
    bias = std::clamp(bias, table.min_bias(), table.max_bias());
    for (std::size_t i = 1; i < table.anchors.size(); ++i) {
        const auto& [b0, n0] = table.anchors[i - 1];
        const auto& [b1, n1] = table.anchors[i];
        if (bias <= b1) {
            const double frac = (bias - b0) / (b1 - b0);
            return std::llround(n0 + frac * (n1 - n0));
        }
    }
    return std::llround(table.anchors.back().second);
}

void SynapseParams::validate(const FluxonYieldTable* table) const {
    spd.validate();
    junction.validate();
    if (si_inductance <= 0.0) throw std::invalid_argument("synapse: si_inductance must be > 0");
    if (si_resistance < 0.0) throw std::invalid_argument("synapse: si_resistance must be >= 0");
    if (coupling_sign != 1 && coupling_sign != -1)
        throw std::invalid_argument("synapse: coupling_sign must be +1 or -1");
    if (weight_levels < 2) throw std::invalid_argument("synapse: weight_levels must be >= 2");
    if (bias_min >= bias_max) throw std::invalid_argument("synapse: bias_min must be < bias_max");
    if (stdp_window <= 0.0) throw std::invalid_argument("synapse: stdp_window must be > 0");
    if (weight_step < 1) throw std::invalid_argument("synapse: weight_step must be >= 1");
    if (chain_junctions < 1) throw std::invalid_argument("synapse: chain_junctions must be >= 1");
    if (table != nullptr) {
        table->validate();
        if (bias_min < table->min_bias() * (1.0 - 1e-9) ||
            bias_max > table->max_bias() * (1.0 + 1e-9))
            throw std::invalid_argument("synapse: weight biases leave the calibrated yield range");
        if (storage_capacity() < table->anchors.back().second)
            throw std::invalid_argument("synapse: storage capacity below the strongest event yield");
    }
}

double weight_to_bias(const SynapseParams& params, int weight) {
    if (weight < 0 || weight >= params.weight_levels)
        throw std::out_of_range("weight_to_bias: weight index outside [0, n_levels)");
    return params.bias_min + static_cast<double>(weight) * (params.bias_max - params.bias_min) /
                                 static_cast<double>(params.weight_levels - 1);
}

std::pair<SynapseState, SynapticFiringEvent> synaptic_fire(SynapseState state,
                                                           const SynapseParams& params,
                                                           const FluxonYieldTable& table,
                                                           double t) {
    SynapticFiringEvent event;
    event.time = t;

    state.spd = spd_advance(params.spd, state.spd, t);
    if (state.spd.mode != SpdMode::Superconducting) return {state, event};

    event.detected = true;
    state.spd.mode = SpdMode::Hotspot;
    state.spd.last_detection_time = t;
    state.spd.diverted_current = params.spd.bias_current;

    state = si_decay(state, params, t - state.stored_current_time);
    state.stored_current_time = t;

    event.n_fluxons = fluxon_yield(table, weight_to_bias(params, state.weight));
    const double raw = state.stored_current +
                       static_cast<double>(event.n_fluxons) * params.current_per_fluxon();
    const double cap = params.max_stored_current();
    const double next = std::min(raw, cap);
    event.saturated = raw > cap;
    event.delta_stored_current = next - state.stored_current;
    state.stored_current = next;

    event.energy = params.spd.stored_energy() +
                   static_cast<double>(params.chain_junctions) *
                       static_cast<double>(event.n_fluxons) *
                       params.junction.critical_current * kFluxQuantum;
    return {state, event};
}

SynapseState si_decay(SynapseState state, const SynapseParams& params, double dt) {
    if (dt < 0.0) throw std::domain_error("si_decay: negative time step");
    if (dt == 0.0 || params.si_resistance == 0.0) return state;
    state.stored_current *= std::exp(-dt / params.si_time_constant());
    return state;
}

SynapseState weight_write(SynapseState state, const SynapseParams& params, WritePolarity polarity) {
    const int delta = polarity == WritePolarity::Potentiate ? 1 : -1;
    state.weight = std::clamp(state.weight + delta, 0, params.weight_levels - 1);
    return state;
}

int stdp_step_magnitude(const SynapseParams& params, double dt) {
    if (dt < 0.0) throw std::domain_error("stdp_update: negative pair separation");
    const double x = dt / params.stdp_window;
    double shape = 0.0;
    if (params.stdp_kernel == StdpKernel::Linear)
        shape = std::max(0.0, 1.0 - x);
    else
        shape = x >= 1.0 ? 0.0 : std::exp(-x);
    return static_cast<int>(std::lround(static_cast<double>(params.weight_step) * shape));
}

SynapseState stdp_update(SynapseState state, const SynapseParams& params, double dt,
                         SpikeOrder order) {
    const int magnitude = stdp_step_magnitude(params, dt);
    const int delta = order == SpikeOrder::PreThenPost ? magnitude : -magnitude;
    state.weight = std::clamp(state.weight + delta, 0, params.weight_levels - 1);
    return state;
}

double stdp_event_energy(const SynapseParams& params, int weight_change) {
    return 2.0 * params.spd.stored_energy() +
           std::abs(weight_change) * params.junction.critical_current * kFluxQuantum;
}

double ni_contribution(const SynapseState& state, const SynapseParams& params,
                       double ni_inductance) {
    const double bound = std::sqrt(params.si_inductance * ni_inductance);
    if (std::abs(params.mutual_inductance) > bound * (1.0 + 1e-12))
        throw std::invalid_argument("ni_contribution: |M| exceeds sqrt(L_si * L_ni)");
    return static_cast<double>(params.coupling_sign) * params.mutual_inductance / ni_inductance *
           state.stored_current;
}

} // namespace soen
