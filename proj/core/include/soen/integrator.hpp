#pragma once

#include <stdexcept>
#include <string>

#include "soen/circuit.hpp"
#include "soen/trace.hpp"

namespace soen {

class IntegrationError : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

// Transient solve of a loop circuit. Adaptive TR-BDF2 with per-step Newton
// iteration by default; fixed-step RK4 when cfg.method == "rk4" serves as an
// independent cross-check on short windows.
Trace integrate_transient(const LoopCircuit& circuit, const SolverConfig& cfg,
                          const InitialConditions& init = {});

} // namespace soen
