#include "soen/calibration.hpp"

#include <cmath>
#include <stdexcept>

namespace soen {

SynapseCircuitParams with_shunt_resistance(SynapseCircuitParams params, double resistance) {
    const double beta_c = params.junction.stewart_mccumber();
    params.junction.shunt_resistance = resistance;
    params.junction.capacitance = beta_c > 0.0
                                      ? JunctionParams::capacitance_for_beta_c(
                                            beta_c, params.junction.critical_current, resistance)
                                      : 0.0;
    return params;
}

long long synapse_event_fluxons(const SynapseCircuitParams& params, double bias) {
    return run_synapse_event(params, bias).fluxons_stored;
}

CalibrationOutcome calibrate_synapse_template(const SynapseCircuitParams& base,
                                              const CalibrationSettings& settings) {
    double lo = settings.resistance_min;
    double hi = settings.resistance_max;
    long long n_lo = synapse_event_fluxons(with_shunt_resistance(base, lo), settings.target_bias);
    long long n_hi = synapse_event_fluxons(with_shunt_resistance(base, hi), settings.target_bias);
    if (n_lo > settings.target_count || n_hi < settings.target_count)
        throw std::runtime_error(
            "calibration: target fluxon count is not bracketed by the resistance range");

    double best_r = lo;
    long long best_err = std::llabs(n_lo - settings.target_count);
    for (int it = 0; it < settings.max_bisections && hi / lo > 1.0 + 1e-4; ++it) {
        const double mid = std::sqrt(lo * hi);
        const long long n = synapse_event_fluxons(with_shunt_resistance(base, mid),
                                                  settings.target_bias);
        if (std::llabs(n - settings.target_count) < best_err) {
            best_err = std::llabs(n - settings.target_count);
            best_r = mid;
        }
        if (n == settings.target_count) {
            best_r = mid;
            break;
        }
        if (n < settings.target_count)
            lo = mid;
        else
            hi = mid;
    }

    CalibrationOutcome out;
    out.shunt_resistance = best_r;
    out.anchors = build_anchor_table(with_shunt_resistance(base, best_r), settings.anchor_biases);
    return out;
}

std::vector<std::pair<double, long long>> build_anchor_table(
    const SynapseCircuitParams& params, const std::vector<double>& biases) {
    std::vector<std::pair<double, long long>> table;
    table.reserve(biases.size());
    for (double b : biases) table.push_back({b, synapse_event_fluxons(params, b)});
    return table;
}

} // namespace soen
