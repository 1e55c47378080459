#include "soen/templates.hpp"

#include <cmath>

namespace soen {

namespace {

// Norton drive for one detection: diversion rise against the hotspot
// resistance, then recovery through the shunt.
struct NortonShape {
    double bias;
    double t_detect;
    double t_hotspot;
    double tau_rise;
    double tau_recover;
    double hotspot_end_current;

    double value(double t) const {
        const double u = t - t_detect;
        if (u <= 0.0) return 0.0;
        if (u <= t_hotspot) return bias * (1.0 - std::exp(-u / tau_rise));
        return hotspot_end_current * std::exp(-(u - t_hotspot) / tau_recover);
    }
    double rate(double t) const {
        const double u = t - t_detect;
        if (u <= 0.0) return 0.0;
        if (u <= t_hotspot) return bias / tau_rise * std::exp(-u / tau_rise);
        return -value(t) / tau_recover;
    }
};

NortonShape make_norton(const SpdParams& spd, double detection_time) {
    NortonShape n;
    n.bias = spd.bias_current;
    n.t_detect = detection_time;
    n.t_hotspot = spd.hotspot_duration;
    n.tau_rise = spd.inductance / (spd.hotspot_resistance + spd.recovery_resistance);
    n.tau_recover = spd.recovery_time();
    n.hotspot_end_current = n.bias * (1.0 - std::exp(-n.t_hotspot / n.tau_rise));
    return n;
}

SourceWaveform norton_train(const SpdParams& spd, std::vector<double> times, double scale) {
    std::vector<NortonShape> shapes;
    for (double t : times)
        if (t >= 0.0) shapes.push_back(make_norton(spd, t));
    SourceWaveform w;
    w.value = [shapes, scale](double t) {
        double v = 0.0;
        for (const auto& s : shapes) v += s.value(t);
        return scale * v;
    };
    w.rate = [shapes, scale](double t) {
        double v = 0.0;
        for (const auto& s : shapes) v += s.rate(t);
        return scale * v;
    };
    return w;
}

long long total_slip_magnitude(const Trace& trace) {
    long long total = 0;
    for (double w : trace.winding_magnitude) total += std::llround(w / kTwoPi);
    return total;
}

} // namespace

SourceWaveform spd_norton_drive(const SpdParams& spd, double detection_time) {
    return norton_train(spd, {detection_time}, 1.0);
}

LoopCircuit build_synapse_template(const SynapseCircuitParams& params, double synaptic_bias,
                                   bool with_photon) {
    params.validate();
    using namespace synapse_branches;
    LoopCircuit c;
    // Nodes: 0 ground, 1 firing junction, 2 line junction, 3 storage loop.
    c.branches.push_back(Branch::junction_branch(kFiringJunction, 1, 0, params.junction));
    c.branches.push_back(Branch::inductor("l_line_a", 1, 2, params.line_inductance));
    c.branches.push_back(Branch::junction_branch(kLineJunction, 2, 0, params.junction));
    c.branches.push_back(Branch::inductor("l_line_b", 2, 3, params.line_inductance));
    c.branches.push_back(Branch::junction_branch(kStorageJunction, 3, 0, params.junction));
    c.branches.push_back(
        Branch::inductor(kStorageInductor, 3, 0, params.si_inductance, params.si_resistance));
    c.branches.push_back(Branch::current_source(
        kSynapticBias, 0, 1, SourceWaveform::dc(synaptic_bias, params.bias_ramp)));
    c.branches.push_back(Branch::current_source(
        kLineBias, 0, 2, SourceWaveform::dc(params.line_bias, params.bias_ramp)));
    if (params.storage_bias != 0.0)
        c.branches.push_back(Branch::current_source(
            "i_store_bias", 0, 3, SourceWaveform::dc(params.storage_bias, params.bias_ramp)));
    if (with_photon)
        c.branches.push_back(Branch::current_source(
            kDetectorDrive, 0, 1, spd_norton_drive(params.spd, params.photon_time)));
    return c;
}

SynapseEventResult run_synapse_event(const SynapseCircuitParams& params, double synaptic_bias,
                                     double initial_stored_current, const SolverConfig* solver) {
    using namespace synapse_branches;
    LoopCircuit circuit = build_synapse_template(params, synaptic_bias, true);

    SolverConfig cfg;
    if (solver) cfg = *solver;
    cfg.t_end = params.photon_time + params.settle_window;

    InitialConditions init;
    if (initial_stored_current != 0.0)
        init.loop_currents.push_back({kStorageInductor, initial_stored_current});

    SynapseEventResult result;
    result.initial_stored_current = initial_stored_current;
    result.trace = integrate_transient(circuit, cfg, init);
    result.fluxons_stored = count_fluxons(result.trace, kStorageJunction);
    result.total_slips = total_slip_magnitude(result.trace);
    result.final_stored_current = result.trace.final_branch_current(kStorageInductor);
    result.energy = params.spd.stored_energy() +
                    static_cast<double>(result.total_slips) *
                        params.junction.critical_current * kFluxQuantum;
    return result;
}

LoopCircuit build_single_junction(const JunctionParams& params, SourceWaveform bias,
                                  const char* name) {
    LoopCircuit c;
    c.branches.push_back(Branch::junction_branch(name, 1, 0, params));
    c.branches.push_back(Branch::current_source("i_bias", 0, 1, std::move(bias)));
    return c;
}

LoopCircuit build_binary_cell(const BinaryCellParams& params,
                              const std::vector<double>& potentiate_times,
                              const std::vector<double>& depress_times) {
    params.validate();
    using namespace binary_branches;
    const double drive_section = 45e-12;
    const double wiring = params.loop_inductance - drive_section - params.output_primary;
    if (wiring <= 0.0) throw std::invalid_argument("binary cell: loop sections exceed total inductance");

    LoopCircuit c;
    // Nodes: 0 ground, 1 set, 2/3 interior loop, 4 reset, 5 readout loop.
    c.branches.push_back(Branch::junction_branch(kSetJunction, 1, 0, params.junction));
    c.branches.push_back(Branch::inductor("l_drive_section", 1, 2, drive_section));
    c.branches.push_back(Branch::inductor("l_output_section", 2, 3, params.output_primary));
    c.branches.push_back(Branch::inductor("l_wiring", 3, 4, wiring));
    c.branches.push_back(Branch::junction_branch(kResetJunction, 4, 0, params.junction));
    c.branches.push_back(Branch::inductor(kOutputInductor, 5, 0, params.output_loop_wiring));
    c.branches.push_back(Branch::inductor("l_output_secondary", 5, 0, params.output_secondary));
    c.mutual_couplings.push_back(
        {"l_output_section", "l_output_secondary",
         params.output_coupling * std::sqrt(params.output_primary * params.output_secondary)});

    c.branches.push_back(Branch::current_source(
        "i_set_bias", 0, 1, SourceWaveform::dc(params.set_bias, params.bias_ramp)));
    c.branches.push_back(Branch::current_source(
        "i_reset_bias", 0, 4, SourceWaveform::dc(params.reset_bias, params.bias_ramp)));

    auto pulses = [&](const std::vector<double>& times) {
        SourceWaveform w = SourceWaveform::dc(0.0);
        for (double t : times)
            w = SourceWaveform::sum(
                w, SourceWaveform::pulse(params.drive_amplitude, t, t + params.drive_width,
                                         params.drive_width / 4.0));
        return w;
    };
    c.branches.push_back(Branch::current_source("i_drive_set", 0, 1, pulses(potentiate_times)));
    c.branches.push_back(Branch::current_source("i_drive_reset", 0, 4, pulses(depress_times)));
    return c;
}

LoopCircuit build_stdp_cell(const StdpCircuitParams& params, const StdpSchedule& schedule) {
    using namespace stdp_branches;
    params.junction.validate();

    SpdParams slow;
    slow.inductance = params.slow_inductance;
    slow.recovery_resistance = params.slow_resistance;
    slow.bias_current = params.spd_bias;
    SpdParams fast;
    fast.inductance = params.fast_inductance;
    fast.recovery_resistance = params.fast_resistance;
    fast.bias_current = params.spd_bias;

    LoopCircuit c;
    // Nodes: 0 ground, 1 potentiate junction, 2 depress junction.
    c.branches.push_back(Branch::junction_branch(kPotentiateJunction, 1, 0, params.junction));
    c.branches.push_back(Branch::inductor(kStorageInductor, 1, 2, params.storage_inductance));
    c.branches.push_back(Branch::junction_branch(kDepressJunction, 2, 0, params.junction));

    c.branches.push_back(Branch::current_source(
        "i_bias_pot", 0, 1, SourceWaveform::dc(params.junction_bias, params.bias_ramp)));
    c.branches.push_back(Branch::current_source(
        "i_bias_dep", 0, 2, SourceWaveform::dc(params.junction_bias, params.bias_ramp)));

    // Potentiation pair: slow trace of the pre photon, fast pulse of the post.
    c.branches.push_back(Branch::current_source(
        "i_pre_slow", 0, 1, norton_train(slow, schedule.pre_times, params.slow_fraction)));
    c.branches.push_back(Branch::current_source(
        "i_post_fast", 0, 1, norton_train(fast, schedule.post_times, params.fast_fraction)));
    // Depression pair: slow trace of the post photon, fast pulse of the pre.
    c.branches.push_back(Branch::current_source(
        "i_post_slow", 0, 2, norton_train(slow, schedule.post_times, params.slow_fraction)));
    c.branches.push_back(Branch::current_source(
        "i_pre_fast", 0, 2, norton_train(fast, schedule.pre_times, params.fast_fraction)));
    return c;
}

StdpEventResult run_stdp_sequence(const StdpCircuitParams& params, const StdpSchedule& schedule,
                                  double t_end, const SolverConfig* solver) {
    using namespace stdp_branches;
    LoopCircuit circuit = build_stdp_cell(params, schedule);
    SolverConfig cfg;
    if (solver) cfg = *solver;
    cfg.t_end = t_end;

    StdpEventResult result;
    result.trace = integrate_transient(circuit, cfg);
    const auto& trace = result.trace;
    result.potentiate_slips = count_fluxons(trace, kPotentiateJunction);
    result.depress_slips = count_fluxons(trace, kDepressJunction);
    result.delta_storage_current = trace.final_branch_current(kStorageInductor) -
                                   trace.branch_current[static_cast<std::size_t>(
                                       trace.branch_index(kStorageInductor))][0];
    return result;
}

} // namespace soen
