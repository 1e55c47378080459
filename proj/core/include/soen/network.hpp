#pragma once

#include <cstdint>
#include <iosfwd>
#include <limits>
#include <string>
#include <vector>

#include "soen/neuron.hpp"
#include "soen/synapse.hpp"
#include "soen/templates.hpp"

namespace soen {

struct SynapseSpec {
    int params_index = 0;
    int initial_weight = 0;
    bool plastic = false;
};

struct NeuronSpec {
    NeuronParams params;
    std::vector<SynapseSpec> synapses;
};

struct EdgeSpec {
    int source = 0;
    int target_neuron = 0;
    int target_synapse = 0;
    double path_length = 1e-3; // m
    double transmission = 1.0; // survival probability per photon
};

// External Poisson photon source aimed at one synapse.
struct DriveSpec {
    int neuron = 0;
    int synapse = 0;
    double rate = 0.0; // Hz
    double t_start = 0.0;
    double t_stop = std::numeric_limits<double>::infinity();
};

struct NetworkConfig {
    std::vector<SynapseParams> synapse_params; // shared parameter sets
    FluxonYieldTable yield_table;
    std::vector<NeuronSpec> neurons;
    std::vector<EdgeSpec> edges;
    std::vector<DriveSpec> drives;
    double die_area = 1e-4;   // m^2
    double group_index = 2.0; // waveguide group index for edge delays
    std::uint64_t seed = 1;
    std::uint64_t max_events = 400000000; // queue overflow bound
    SynapseCircuitParams device_template;  // device-mode synaptic receiver

    double edge_delay(const EdgeSpec& e) const {
        return e.path_length * group_index / kSpeedOfLight;
    }
    void validate() const;
};

struct SpikeRecordEntry {
    int neuron = 0;
    double time = 0.0;
    long long n_photons = 0;
    double amplifier_energy = 0.0;
};

struct SynapseLogEntry {
    int neuron = 0;
    int synapse = 0;
    double time = 0.0;
    long long n_fluxons = 0;
    double delta_stored_current = 0.0;
    double energy = 0.0;
    int weight = 0;
};

struct UpdateLogEntry {
    int neuron = 0;
    int synapse = 0;
    double time = 0.0;
    double pair_separation = 0.0;
    int weight_change = 0;
    double energy = 0.0;
};

struct SpikeRecord {
    std::vector<SpikeRecordEntry> firings;        // chronological
    std::vector<SynapseLogEntry> synapse_events;  // when logging is enabled
    std::vector<UpdateLogEntry> update_events;
    std::uint64_t photon_events = 0;   // deliveries that reached a synapse
    std::uint64_t detected_events = 0; // deliveries the detector converted
    double transmitter_energy = 0.0;   // J
    double receiver_energy = 0.0;
    double update_energy = 0.0;
    double t_end = 0.0;
    bool truncated = false; // event budget exceeded, record is partial

    void write_firings_csv(std::ostream& os) const;
    void write_synapse_csv(std::ostream& os) const;
};

struct PowerReport {
    double transmitter_power = 0.0; // W
    double receiver_power = 0.0;
    double update_power = 0.0;
    double total = 0.0;
    double power_density = 0.0; // W/m^2
};

enum class SimMode { Behavioral, Device };

struct RunOptions {
    SimMode mode = SimMode::Behavioral;
    int parallelism = 1;
    bool log_synapse_events = true;
    bool log_update_events = true;
};

// Mean firing rates sampled from p(f) proportional to 1/f on [f_min, f_max],
// by inverse CDF f = f_min (f_max/f_min)^u.
std::vector<double> one_over_f_rates(int n, double f_min, double f_max, std::uint64_t seed);

// Event-driven network simulation. Deterministic for a fixed seed at any
// parallelism: random draws are counter-based per entity, events are ordered
// by (time, source id, edge id), and neurons only interact through photon
// events delayed by at least the shortest edge delay.
SpikeRecord run(const NetworkConfig& config, double t_end, const RunOptions& options = {});

PowerReport power_report(const SpikeRecord& record, const NetworkConfig& config, double duration);

// Closed-form power extrapolation for populations too large to simulate
// event by event.
struct ExtrapolationAssumptions {
    long long neurons = 1000000;
    long long total_synapses = 200000000;
    double mean_rate = 300e3;       // Hz per neuron
    double area = 0.070686;         // m^2 (300 mm wafer)
    int photons_per_synapse = 10;
    double receiver_event_energy = 20e-18; // J per synaptic firing event
    double update_event_energy = 7.3e-18;  // J per weight update
    double update_fraction = 0.01;  // updates per delivered synaptic event
};

PowerReport extrapolate_power(const ExtrapolationAssumptions& assumptions, const LedParams& led,
                              const AmplifierEfficiencyModel& amplifier);

} // namespace soen
