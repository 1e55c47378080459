#pragma once

#include <utility>
#include <vector>

#include "soen/templates.hpp"

namespace soen {

// One-parameter calibration of the synaptic receiver template: sweep the
// shared junction shunt resistance until one photon at the weak-weight bias
// stores the target fluxon count, then record the yield at each anchor bias.
// Junction capacitance tracks the resistance so beta_c stays fixed.
struct CalibrationSettings {
    double target_bias = 1e-6;  // A
    long long target_count = 33;
    double resistance_min = 2.0;   // ohm
    double resistance_max = 400.0; // ohm
    int max_bisections = 36;
    std::vector<double> anchor_biases = {0.8e-6, 1.0e-6, 1.5e-6, 2.0e-6,
                                         2.5e-6, 3.0e-6, 3.5e-6, 4.0e-6};
};

struct CalibrationOutcome {
    double shunt_resistance = 0.0;
    std::vector<std::pair<double, long long>> anchors; // bias (A) -> fluxons
};

// Template copy with the junction shunt replaced, capacitance rescaled to
// preserve beta_c.
SynapseCircuitParams with_shunt_resistance(SynapseCircuitParams params, double resistance);

long long synapse_event_fluxons(const SynapseCircuitParams& params, double bias);

CalibrationOutcome calibrate_synapse_template(const SynapseCircuitParams& base,
                                              const CalibrationSettings& settings = {});

std::vector<std::pair<double, long long>> build_anchor_table(
    const SynapseCircuitParams& params, const std::vector<double>& biases);

} // namespace soen
