#pragma once

#include <cmath>
#include <stdexcept>

#include "soen/constants.hpp"

namespace soen {

// Resistively-and-capacitively-shunted junction with sinusoidal
// current-phase relation.
struct JunctionParams {
    double critical_current = 10e-6; // A
    double shunt_resistance = 2.0;   // ohm
    double capacitance = 0.0;        // F
    bool hysteretic = false;

    // Stewart-McCumber parameter beta_c = 2 pi Ic R^2 C / Phi0.
    double stewart_mccumber() const {
        return kTwoPi * critical_current * shunt_resistance * shunt_resistance * capacitance /
               kFluxQuantum;
    }

    void validate() const {
        if (critical_current <= 0.0) throw std::invalid_argument("junction: critical_current must be > 0");
        if (shunt_resistance <= 0.0) throw std::invalid_argument("junction: shunt_resistance must be > 0");
        if (capacitance < 0.0) throw std::invalid_argument("junction: capacitance must be >= 0");
        if (hysteretic && stewart_mccumber() <= 1.0)
            throw std::invalid_argument("junction: hysteretic flag requires beta_c > 1");
    }

    // Capacitance that realizes a target beta_c at the current Ic and R.
    static double capacitance_for_beta_c(double beta_c, double critical_current,
                                         double shunt_resistance) {
        return beta_c * kFluxQuantum /
               (kTwoPi * critical_current * shunt_resistance * shunt_resistance);
    }
};

struct JunctionState {
    double phase = 0.0;      // rad
    double phase_rate = 0.0; // rad/s
    bool latched = false;
    long long fluxon_count = 0;

    double voltage() const { return kFluxQuantum / kTwoPi * phase_rate; }
};

// Time-averaged voltage of an overdamped junction under constant bias.
// Zero below Ic, R sqrt(I^2 - Ic^2) above; used as the analytic oracle for
// the transient solver.
inline double rsj_mean_voltage(const JunctionParams& params, double bias_current) {
    params.validate();
    if (params.capacitance != 0.0)
        throw std::invalid_argument("rsj_mean_voltage: requires overdamped junction (C = 0)");
    if (bias_current < 0.0)
        throw std::domain_error("rsj_mean_voltage: bias current must be >= 0");
    const double ic = params.critical_current;
    if (bias_current <= ic) return 0.0;
    return params.shunt_resistance * std::sqrt(bias_current * bias_current - ic * ic);
}

// Fluxon storage capacity of a superconducting loop, beta_L / 2 pi = L Ic / Phi0.
inline double loop_storage_capacity(double inductance, double critical_current) {
    if (inductance <= 0.0 || critical_current <= 0.0)
        throw std::invalid_argument("loop_storage_capacity: inputs must be > 0");
    return inductance * critical_current / kFluxQuantum;
}

} // namespace soen
