#pragma once

namespace soen {

// 2019 SI exact values.
inline constexpr double kPlanck = 6.62607015e-34;          // J s
inline constexpr double kElectronCharge = 1.602176634e-19; // C
inline constexpr double kFluxQuantum = kPlanck / (2.0 * kElectronCharge); // Wb, h/2e
inline constexpr double kSpeedOfLight = 299792458.0;       // m/s
inline constexpr double kTwoPi = 6.283185307179586476925286766559;

struct PhysicalConstants {
    double flux_quantum = kFluxQuantum;
    double electron_charge = kElectronCharge;
    double planck = kPlanck;

    bool consistent() const {
        if (flux_quantum <= 0.0 || electron_charge <= 0.0 || planck <= 0.0) return false;
        const double derived = planck / (2.0 * electron_charge);
        return derived != 0.0 &&
               (flux_quantum > derived ? flux_quantum / derived : derived / flux_quantum) < 1.0 + 5e-7;
    }
};

} // namespace soen
