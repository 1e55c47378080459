#pragma once

#include <cmath>
#include <cstdint>
#include <limits>
#include <stdexcept>

#include "soen/constants.hpp"
#include "soen/rng.hpp"

namespace soen {

// Single-photon detector: nanowire kinetic inductance in series with a
// transient hotspot resistance, recovering through the shunt resistor.
struct SpdParams {
    double inductance = 72e-9;          // H
    double recovery_resistance = 2.0;   // ohm
    double hotspot_resistance = 5e3;    // ohm
    double hotspot_duration = 200e-12;  // s
    double bias_current = 10e-6;        // A
    double detection_efficiency = 1.0;  // probability per incident photon bundle

    // Fraction of the bias below which the detector counts as recovered.
    static constexpr double kLiveFraction = 0.1;

    double recovery_time() const { return inductance / recovery_resistance; }
    double dead_time() const {
        return hotspot_duration - recovery_time() * std::log(kLiveFraction);
    }
    double stored_energy() const { return 0.5 * inductance * bias_current * bias_current; }

    void validate() const {
        if (inductance <= 0.0 || recovery_resistance <= 0.0 || hotspot_resistance <= 0.0)
            throw std::invalid_argument("spd: inductances and resistances must be > 0");
        if (hotspot_duration <= 0.0 || bias_current <= 0.0)
            throw std::invalid_argument("spd: hotspot duration and bias must be > 0");
        if (recovery_time() <= hotspot_duration)
            throw std::invalid_argument("spd: recovery time constant must exceed hotspot duration");
        if (detection_efficiency < 0.0 || detection_efficiency > 1.0)
            throw std::invalid_argument("spd: detection efficiency must lie in [0, 1]");
    }
};

enum class SpdMode { Superconducting, Hotspot, Recovering };

struct SpdState {
    SpdMode mode = SpdMode::Superconducting;
    double last_detection_time = -std::numeric_limits<double>::infinity();
    double diverted_current = 0.0;
};

// Bias current diverted out of the nanowire a given time after a detection:
// full diversion while the hotspot lives, then exponential return.
inline double spd_diverted_current(const SpdParams& params, double dt_since_detection) {
    if (dt_since_detection < 0.0)
        throw std::domain_error("spd_diverted_current: negative time since detection");
    if (dt_since_detection <= params.hotspot_duration) return params.bias_current;
    return params.bias_current *
           std::exp(-(dt_since_detection - params.hotspot_duration) / params.recovery_time());
}

// Refresh the mode for the wall-clock time t.
inline SpdState spd_advance(const SpdParams& params, SpdState state, double t) {
    const double dt = t - state.last_detection_time;
    if (!(dt >= 0.0) || dt >= params.dead_time()) {
        state.mode = SpdMode::Superconducting;
        state.diverted_current = 0.0;
    } else if (dt <= params.hotspot_duration) {
        state.mode = SpdMode::Hotspot;
        state.diverted_current = params.bias_current;
    } else {
        state.mode = SpdMode::Recovering;
        state.diverted_current = spd_diverted_current(params, dt);
    }
    return state;
}

// Photon arrival at time t. The detector is dead during the hotspot and
// until the diverted current has fallen below kLiveFraction of the bias.
inline SpdState spd_detect(const SpdParams& params, SpdState state, double t, double rng_draw) {
    state = spd_advance(params, state, t);
    if (state.mode != SpdMode::Superconducting) return state;
    if (rng_draw < params.detection_efficiency) {
        state.mode = SpdMode::Hotspot;
        state.last_detection_time = t;
        state.diverted_current = params.bias_current;
    }
    return state;
}

struct LedParams {
    double capacitance = 10e-15;       // F
    double quantum_efficiency = 1e-3;  // photons per injected carrier
    double drive_voltage = 1.0;        // V
    double photon_frequency = 250e12;  // Hz
    double drive_current = 10e-6;      // A

    double photon_energy() const { return kPlanck * photon_frequency; }

    void validate() const {
        if (quantum_efficiency <= 0.0 || quantum_efficiency > 1.0)
            throw std::invalid_argument("led: quantum efficiency must lie in (0, 1]");
        if (photon_frequency <= 0.0) throw std::invalid_argument("led: photon frequency must be > 0");
        if (drive_voltage <= 0.5)
            throw std::invalid_argument("led: drive voltage below semiconductor gap scale (> 0.5 V)");
        if (capacitance < 0.0 || drive_current <= 0.0)
            throw std::invalid_argument("led: capacitance must be >= 0 and drive current > 0");
    }
};

struct PhotonPulse {
    long long n_photons = 0;
    double electrical_energy = 0.0; // J
};

enum class EmissionMode { ExpectedValue, Stochastic };

PhotonPulse led_emit(const LedParams& params, double pulse_duration,
                     EmissionMode mode = EmissionMode::ExpectedValue,
                     RandomStream* rng = nullptr);

// Pulse duration that injects enough carriers for the target photon number
// in expected-value mode.
double led_pulse_duration_for_photons(const LedParams& params, double target_photons);

struct NtronParams {
    double gate_threshold = 60e-6;   // A
    double channel_current = 1.2e-3; // A
    double on_resistance = 1e3;      // ohm

    void validate() const {
        if (gate_threshold <= 0.0 || channel_current <= 0.0 || on_resistance <= 0.0)
            throw std::invalid_argument("ntron: all parameters must be > 0");
    }
};

// Hard-threshold channel resistance: zero below the gate threshold, the
// plateau value at or above it.
inline double ntron_response(const NtronParams& params, double gate_current) {
    return gate_current >= params.gate_threshold ? params.on_resistance : 0.0;
}

struct HtronParams {
    double gate_threshold = 1.2e-3; // A
    double on_resistance = 800e3;   // ohm
    double switch_time = 1e-9;      // s
    double switch_energy = 20e-15;  // J

    void validate() const {
        if (gate_threshold <= 0.0 || on_resistance <= 0.0 || switch_time <= 0.0 ||
            switch_energy <= 0.0)
            throw std::invalid_argument("htron: all parameters must be > 0");
    }
};

struct HtronResponse {
    double resistance = 0.0; // ohm
    double delay = 0.0;      // s
    double energy = 0.0;     // J
};

inline HtronResponse htron_response(const HtronParams& params, double gate_current) {
    if (gate_current >= params.gate_threshold)
        return {params.on_resistance, params.switch_time, params.switch_energy};
    return {};
}

// Total transmitter efficiency eta_amp, defined through
// E_amp = N_ph h nu / eta_amp.
struct AmplifierEfficiencyModel {
    double fixed_energy = 0.0;    // J: hTron switch + nTron gate + LED capacitor
    double joule_overhead = 9.34; // dimensionless kappa

    void validate() const {
        if (fixed_energy <= 0.0) throw std::invalid_argument("amplifier: fixed energy must be > 0");
        if (joule_overhead < 0.0) throw std::invalid_argument("amplifier: joule overhead must be >= 0");
    }
};

inline AmplifierEfficiencyModel make_amplifier_model(const HtronParams& htron,
                                                     const LedParams& led,
                                                     double ntron_gate_energy = 0.0,
                                                     double joule_overhead = 9.34) {
    AmplifierEfficiencyModel m;
    m.fixed_energy = htron.switch_energy + ntron_gate_energy +
                     0.5 * led.capacitance * led.drive_voltage * led.drive_voltage;
    m.joule_overhead = joule_overhead;
    return m;
}

double amplifier_energy(const AmplifierEfficiencyModel& model, const LedParams& led,
                        double n_photons);
double amplifier_efficiency(const AmplifierEfficiencyModel& model, const LedParams& led,
                            double n_photons);

// Large-pulse limit of the efficiency, eta_qe (h nu / e V) / (1 + kappa).
inline double amplifier_efficiency_limit(const AmplifierEfficiencyModel& model,
                                         const LedParams& led) {
    return led.quantum_efficiency * led.photon_energy() /
           (kElectronCharge * led.drive_voltage) / (1.0 + model.joule_overhead);
}

} // namespace soen
