#pragma once

#include <cstdint>
#include <limits>
#include <stdexcept>
#include <utility>
#include <vector>

#include "soen/constants.hpp"
#include "soen/devices.hpp"
#include "soen/junction.hpp"

namespace soen {

// Fluxon yield of one photon detection versus synaptic bias, tabulated from
// the device-tier calibration sweep. Piecewise-linear between anchors.
struct FluxonYieldTable {
    std::vector<std::pair<double, double>> anchors; // bias (A) -> fluxon count

    void validate() const {
        if (anchors.size() < 2) throw std::invalid_argument("yield table: needs >= 2 anchors");
        for (std::size_t i = 1; i < anchors.size(); ++i) {
            if (anchors[i].first <= anchors[i - 1].first)
                throw std::invalid_argument("yield table: biases must increase");
            if (anchors[i].second < anchors[i - 1].second)
                throw std::invalid_argument("yield table: counts must be monotone non-decreasing");
        }
    }

    double min_bias() const { return anchors.front().first; }
    double max_bias() const { return anchors.back().first; }
};

// Fluxons stored per synaptic firing event at the given bias.
long long fluxon_yield(const FluxonYieldTable& table, double bias);

enum class StdpKernel { Linear, Exponential };
enum class SpikeOrder { PreThenPost, PostThenPre };
enum class WritePolarity { Potentiate, Depress };

struct SynapseParams {
    SpdParams spd;
    JunctionParams junction;             // firing-junction scale, for energy bookkeeping
    double si_inductance = 10e-6;        // H
    double si_resistance = 0.0;          // ohm; 0 means lossless storage
    double mutual_inductance = 97.3e-9;  // H, coupling into the integration loop
    int coupling_sign = +1;              // +1 excitatory, -1 inhibitory
    int weight_levels = 2;
    double bias_min = 1e-6;              // A
    double bias_max = 3e-6;              // A
    double stdp_window = 50e-9;          // s
    StdpKernel stdp_kernel = StdpKernel::Linear;
    int weight_step = 1;
    int chain_junctions = 3;             // receiver chain length, for event energy

    double si_time_constant() const {
        return si_resistance == 0.0 ? std::numeric_limits<double>::infinity()
                                    : si_inductance / si_resistance;
    }
    double storage_capacity() const {
        return loop_storage_capacity(si_inductance, junction.critical_current);
    }
    // capacity * Phi0 / L_si, which is just the junction critical current.
    double max_stored_current() const {
        return storage_capacity() * kFluxQuantum / si_inductance;
    }
    double current_per_fluxon() const { return kFluxQuantum / si_inductance; }

    void validate(const FluxonYieldTable* table = nullptr) const;
};

struct SynapseState {
    double stored_current = 0.0; // A, valid at stored_current_time
    double stored_current_time = 0.0;
    int weight = 0;
    SpdState spd;
    double last_pre_time = -std::numeric_limits<double>::infinity();
    double last_post_time = -std::numeric_limits<double>::infinity();
};

struct SynapticFiringEvent {
    double time = 0.0;
    long long n_fluxons = 0;
    double delta_stored_current = 0.0; // A
    double energy = 0.0;               // J
    bool detected = false;             // false when the detector was dead
    bool saturated = false;            // clamped at the storage capacity
};

// Synaptic bias at a stored weight index, linear between bias_min and bias_max.
double weight_to_bias(const SynapseParams& params, int weight);

// One photon detection: detector enters its hotspot, fluxons are added to the
// storage loop (saturating at capacity), and the event energy is booked.
std::pair<SynapseState, SynapticFiringEvent> synaptic_fire(SynapseState state,
                                                           const SynapseParams& params,
                                                           const FluxonYieldTable& table,
                                                           double t);

// Storage-loop decay over dt.
SynapseState si_decay(SynapseState state, const SynapseParams& params, double dt);

// Supervised weight write, clamped at the range ends.
SynapseState weight_write(SynapseState state, const SynapseParams& params, WritePolarity polarity);

// Timing-dependent weight update. dt is the (non-negative) separation of the
// pre/post photon pair; order selects potentiation or depression.
SynapseState stdp_update(SynapseState state, const SynapseParams& params, double dt,
                         SpikeOrder order);

// Magnitude of the weight step for a pair separation dt (before clamping).
int stdp_step_magnitude(const SynapseParams& params, double dt);

// Energy booked for one weight-update event (two detector firings plus the
// written fluxons).
double stdp_event_energy(const SynapseParams& params, int weight_change);

// Current contributed to the integration loop of the parent neuron.
double ni_contribution(const SynapseState& state, const SynapseParams& params,
                       double ni_inductance);

} // namespace soen
