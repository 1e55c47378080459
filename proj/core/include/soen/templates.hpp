#pragma once

#include "soen/circuit.hpp"
#include "soen/devices.hpp"
#include "soen/integrator.hpp"
#include "soen/junction.hpp"
#include "soen/trace.hpp"

namespace soen {

// --- Photon-to-fluxon transducer (synaptic receiver) ------------------------
//
// Firing junction in parallel with the detector's diverted-current drive,
// a one-junction transmission line, and a storage junction closing the
// integration loop. The detector branch is solved in closed form and applied
// as its Norton-equivalent current drive.
struct SynapseCircuitParams {
    SpdParams spd;
    JunctionParams junction;          // all three junctions share these values
    double line_inductance = 200e-12; // H, between the junctions
    double line_bias = 7e-6;          // A, transmission-line junction bias
    double storage_bias = 4.5e-6;     // A, storage junction bias (pulse forwarding)
    double si_inductance = 10e-6;     // H, storage loop
    double si_resistance = 0.0;       // ohm, storage loop leak
    double bias_ramp = 2e-9;          // s, source turn-on
    double photon_time = 5e-9;        // s, detection instant
    double settle_window = 80e-9;     // s, simulated span after the photon

    void validate() const {
        spd.validate();
        junction.validate();
        if (line_inductance <= 0.0 || si_inductance <= 0.0)
            throw std::invalid_argument("synapse template: inductances must be > 0");
        if (si_resistance < 0.0)
            throw std::invalid_argument("synapse template: negative storage resistance");
    }
};

// Branch names used by the synapse template.
namespace synapse_branches {
inline constexpr const char* kFiringJunction = "j_fire";
inline constexpr const char* kLineJunction = "j_line";
inline constexpr const char* kStorageJunction = "j_store";
inline constexpr const char* kStorageInductor = "l_store";
inline constexpr const char* kDetectorDrive = "i_detector";
inline constexpr const char* kSynapticBias = "i_bias";
inline constexpr const char* kLineBias = "i_line_bias";
} // namespace synapse_branches

// Norton drive of the detector branch: diversion rise while the hotspot is
// resistive, then L/r recovery.
SourceWaveform spd_norton_drive(const SpdParams& spd, double detection_time);

LoopCircuit build_synapse_template(const SynapseCircuitParams& params, double synaptic_bias,
                                   bool with_photon);

struct SynapseEventResult {
    long long fluxons_stored = 0;      // net windings of the storage junction
    long long total_slips = 0;         // all junctions, for the energy ledger
    double initial_stored_current = 0; // A
    double final_stored_current = 0;   // A
    double energy = 0.0;               // J, detector + fluxon production
    Trace trace;
};

SynapseEventResult run_synapse_event(const SynapseCircuitParams& params, double synaptic_bias,
                                     double initial_stored_current = 0.0,
                                     const SolverConfig* solver = nullptr);

// --- Single biased junction --------------------------------------------------
LoopCircuit build_single_junction(const JunctionParams& params, SourceWaveform bias,
                                  const char* name = "j0");

// --- Binary weight cell (set/reset flux flip-flop) ---------------------------
//
// Two-junction storage loop holding zero or one fluxon, read out through a
// transformer into the bias loop that feeds the synapse.
struct BinaryCellParams {
    JunctionParams junction;       // both junctions; Ic = 40 uA scale
    double loop_inductance = 90e-12;  // H, total storage loop inductance
    double set_bias = 38e-6;       // A
    double reset_bias = 20e-6;     // A
    double drive_amplitude = 5e-6; // A, write pulse height
    double drive_width = 2e-10;    // s
    double output_primary = 18e-12;  // H, loop section coupled to the bias loop
    double output_secondary = 18e-12;// H
    double output_coupling = 0.95;   // dimensionless k
    double output_loop_wiring = 50e-12; // H, rest of the bias loop
    double bias_ramp = 2e-9;       // s

    void validate() const {
        junction.validate();
        if (loop_inductance <= output_primary)
            throw std::invalid_argument("binary cell: loop inductance must exceed coupled section");
    }
};

namespace binary_branches {
inline constexpr const char* kSetJunction = "j_set";
inline constexpr const char* kResetJunction = "j_reset";
inline constexpr const char* kOutputInductor = "l_readout";
} // namespace binary_branches

// Drive schedule: alternating potentiate/depress pulses at the given period.
LoopCircuit build_binary_cell(const BinaryCellParams& params,
                              const std::vector<double>& potentiate_times,
                              const std::vector<double>& depress_times);

// --- Timing-correlation weight update (two SPD pairs on a storage loop) ------
struct StdpCircuitParams {
    JunctionParams junction;           // update junctions, Ic = 40 uA scale
    double storage_inductance = 125e-9;   // H, between the update junctions
    double junction_bias = 38e-6;      // A, each update junction
    double slow_inductance = 1.25e-6;  // H, pre-photon detector branch
    double slow_resistance = 25.0;     // ohm -> 50 ns window
    double fast_inductance = 12.5e-9;  // H, post-photon detector branch
    double fast_resistance = 6.25;     // ohm -> 2 ns pulse
    double slow_fraction = 0.10;       // share of diverted current reaching the junction
    double fast_fraction = 0.15;
    double spd_bias = 10e-6;           // A
    double bias_ramp = 2e-9;           // s

    double window() const { return slow_inductance / slow_resistance; }
};

namespace stdp_branches {
inline constexpr const char* kPotentiateJunction = "j_pot";
inline constexpr const char* kDepressJunction = "j_dep";
inline constexpr const char* kStorageInductor = "l_storage";
} // namespace stdp_branches

// Photon arrival schedule for the update circuit. Times < 0 mean "no photon".
struct StdpSchedule {
    std::vector<double> pre_times;
    std::vector<double> post_times;
};

LoopCircuit build_stdp_cell(const StdpCircuitParams& params, const StdpSchedule& schedule);

struct StdpEventResult {
    double delta_storage_current = 0.0; // A, signed change of the loop current
    long long potentiate_slips = 0;
    long long depress_slips = 0;
    Trace trace;
};

StdpEventResult run_stdp_sequence(const StdpCircuitParams& params, const StdpSchedule& schedule,
                                  double t_end, const SolverConfig* solver = nullptr);

} // namespace soen
