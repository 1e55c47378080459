#include "soen/devices.hpp"

namespace soen {

PhotonPulse led_emit(const LedParams& params, double pulse_duration, EmissionMode mode,
                     RandomStream* rng) {
    params.validate();
    if (pulse_duration <= 0.0) throw std::invalid_argument("led_emit: pulse duration must be > 0");

    const double injected = (params.drive_current * pulse_duration +
                             params.capacitance * params.drive_voltage) /
                            kElectronCharge;
    if (!(injected < 1e18)) throw std::overflow_error("led_emit: pulse duration is absurdly long");

    PhotonPulse pulse;
    if (mode == EmissionMode::Stochastic) {
        if (rng == nullptr) throw std::invalid_argument("led_emit: stochastic mode needs a stream");
        pulse.n_photons = static_cast<long long>(
            rng->binomial(static_cast<std::uint64_t>(std::llround(injected)),
                          params.quantum_efficiency));
    } else {
        pulse.n_photons = std::llround(injected * params.quantum_efficiency);
    }
    pulse.electrical_energy = injected * kElectronCharge * params.drive_voltage +
                              0.5 * params.capacitance * params.drive_voltage * params.drive_voltage;
    return pulse;
}

double led_pulse_duration_for_photons(const LedParams& params, double target_photons) {
    params.validate();
    if (target_photons <= 0.0)
        throw std::invalid_argument("led_pulse_duration_for_photons: target must be > 0");
    const double injected_needed = target_photons / params.quantum_efficiency;
    const double charge = injected_needed * kElectronCharge -
                          params.capacitance * params.drive_voltage;
    const double duration = charge / params.drive_current;
    if (duration <= 0.0)
        throw std::invalid_argument(
            "led_pulse_duration_for_photons: capacitive charge alone exceeds the target");
    return duration;
}

double amplifier_energy(const AmplifierEfficiencyModel& model, const LedParams& led,
                        double n_photons) {
    model.validate();
    led.validate();
    if (n_photons < 0.0) throw std::invalid_argument("amplifier_energy: n_photons must be >= 0");
    const double injection = n_photons * kElectronCharge * led.drive_voltage *
                             (1.0 + model.joule_overhead) / led.quantum_efficiency;
    return model.fixed_energy + injection;
}

double amplifier_efficiency(const AmplifierEfficiencyModel& model, const LedParams& led,
                            double n_photons) {
    if (n_photons == 0.0) return 0.0;
    return n_photons * led.photon_energy() / amplifier_energy(model, led, n_photons);
}

} // namespace soen
