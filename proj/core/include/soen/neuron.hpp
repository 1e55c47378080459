#pragma once

#include <limits>
#include <span>
#include <utility>
#include <vector>

#include "soen/devices.hpp"
#include "soen/junction.hpp"
#include "soen/synapse.hpp"

namespace soen {

// The amplifier chain behind a threshold crossing: the latched oscillator
// junction dumps its bias into the nTron gate, the nTron channel switches the
// hTron, and the hTron puts the drive voltage across the LED.
struct TransmitterParams {
    NtronParams ntron;
    HtronParams htron;
    LedParams led;
    double oscillator_bias = 60e-6;     // A, diverted into the nTron gate on latch
    double ntron_gate_energy = 0.0;     // J per firing, folded into the fixed energy
    double joule_overhead = 9.34;       // kappa
    double htron_channel_bias = 1.25e-6; // A across the switched meander

    AmplifierEfficiencyModel amplifier() const {
        return make_amplifier_model(htron, led, ntron_gate_energy, joule_overhead);
    }

    // Chain compatibility is a construction-time property; firing never
    // re-checks it.
    void validate() const {
        ntron.validate();
        htron.validate();
        led.validate();
        if (oscillator_bias < ntron.gate_threshold)
            throw std::invalid_argument(
                "transmitter: oscillator bias cannot switch the nTron gate");
        if (ntron.channel_current < htron.gate_threshold)
            throw std::invalid_argument(
                "transmitter: nTron channel current cannot switch the hTron gate");
        if (htron_channel_bias * htron.on_resistance < led.drive_voltage)
            throw std::invalid_argument(
                "transmitter: switched hTron cannot reach the LED drive voltage");
    }
};

struct NeuronParams {
    double ni_inductance = 100e-9; // H
    JunctionParams threshold_junction;
    double threshold_bias = 7e-6;  // A, static bias toward the critical current
    int fanout = 1;
    int photons_per_synapse = 10;
    double refractory = 50e-9;     // s
    bool purge_si_on_fire = false; // config switch: clear all storage loops on firing
    TransmitterParams transmitter;
    EmissionMode emission_mode = EmissionMode::ExpectedValue;

    void validate() const {
        threshold_junction.validate();
        transmitter.validate();
        if (ni_inductance <= 0.0) throw std::invalid_argument("neuron: ni_inductance must be > 0");
        if (threshold_bias < 0.0 || threshold_bias >= threshold_junction.critical_current)
            throw std::invalid_argument("neuron: threshold bias must lie in [0, Ic)");
        if (fanout < 1) throw std::invalid_argument("neuron: fanout must be >= 1");
        if (photons_per_synapse < 1)
            throw std::invalid_argument("neuron: photons_per_synapse must be >= 1");
        if (refractory < 0.0) throw std::invalid_argument("neuron: refractory must be >= 0");
    }
};

// Per-stage transmitter energies of one firing event (J).
struct EnergyLedger {
    double htron_switch = 0.0;
    double ntron_gate = 0.0;
    double led_capacitor = 0.0;
    double led_injection = 0.0;
    double joule_overhead = 0.0;

    double total() const {
        return htron_switch + ntron_gate + led_capacitor + led_injection + joule_overhead;
    }
};

struct NeuronState {
    double integrated_current = 0.0; // A, signed sum of synapse contributions
    double refractory_until = -std::numeric_limits<double>::infinity();
    long long firing_count = 0;
    EnergyLedger energy_ledger; // accumulated over all firings
};

struct NeuronalFiringEvent {
    double time = 0.0;
    long long n_photons = 0;
    double amplifier_energy = 0.0; // J
    double efficiency = 0.0;       // eta_amp at this pulse size
    EnergyLedger stages;
};

// Pure recomputation of the integration-loop current from the synapse states
// (each decayed to time t first).
NeuronState integrate_ni(NeuronState state,
                         std::span<const std::pair<SynapseState, SynapseParams>> synapses,
                         const NeuronParams& params, double t);

inline bool threshold_check(const NeuronState& state, const NeuronParams& params, double t) {
    return params.threshold_bias + state.integrated_current >=
               params.threshold_junction.critical_current &&
           t >= state.refractory_until;
}

// Threshold crossing: runs the amplifier chain, produces the photon pulse,
// books per-stage energies, clears the integration loop and starts the
// refractory window. Storage loops are the caller's to purge when
// purge_si_on_fire is set.
std::pair<NeuronState, NeuronalFiringEvent> fire(NeuronState state, const NeuronParams& params,
                                                 double t, RandomStream* rng = nullptr);

} // namespace soen
