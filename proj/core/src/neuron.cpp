#include "soen/neuron.hpp"

namespace soen {

NeuronState integrate_ni(NeuronState state,
                         std::span<const std::pair<SynapseState, SynapseParams>> synapses,
                         const NeuronParams& params, double t) {
    double total = 0.0;
    for (const auto& [syn_state, syn_params] : synapses) {
        SynapseState decayed = si_decay(syn_state, syn_params, t - syn_state.stored_current_time);
        total += ni_contribution(decayed, syn_params, params.ni_inductance);
    }
    state.integrated_current = total;
    return state;
}

std::pair<NeuronState, NeuronalFiringEvent> fire(NeuronState state, const NeuronParams& params,
                                                 double t, RandomStream* rng) {
    const TransmitterParams& tx = params.transmitter;
    const LedParams& led = tx.led;

    const double target =
        static_cast<double>(params.fanout) * static_cast<double>(params.photons_per_synapse);
    const double duration = led_pulse_duration_for_photons(led, target);
    const PhotonPulse pulse = led_emit(led, duration, params.emission_mode, rng);

    NeuronalFiringEvent event;
    event.time = t;
    event.n_photons = pulse.n_photons;

    const double capacitor = 0.5 * led.capacitance * led.drive_voltage * led.drive_voltage;
    event.stages.htron_switch = tx.htron.switch_energy;
    event.stages.ntron_gate = tx.ntron_gate_energy;
    event.stages.led_capacitor = capacitor;
    event.stages.led_injection = pulse.electrical_energy - capacitor;
    event.stages.joule_overhead = tx.joule_overhead * event.stages.led_injection;
    event.amplifier_energy = event.stages.total();
    event.efficiency = event.n_photons > 0
                           ? static_cast<double>(event.n_photons) * led.photon_energy() /
                                 event.amplifier_energy
                           : 0.0;

    state.energy_ledger.htron_switch += event.stages.htron_switch;
    state.energy_ledger.ntron_gate += event.stages.ntron_gate;
    state.energy_ledger.led_capacitor += event.stages.led_capacitor;
    state.energy_ledger.led_injection += event.stages.led_injection;
    state.energy_ledger.joule_overhead += event.stages.joule_overhead;

    state.integrated_current = 0.0;
    state.refractory_until = t + params.refractory;
    ++state.firing_count;
    return {state, event};
}

} // namespace soen
