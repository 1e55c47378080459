#pragma once

#include <cstdint>
#include <functional>
#include <memory>
#include <stdexcept>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "soen/junction.hpp"

namespace soen {

class CircuitError : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

enum class ElementKind { Junction, Inductor, Resistor, CurrentSource };

// Time-dependent current drive. rate() is d(value)/dt, needed because source
// currents threading an inductive mesh contribute L dI/dt terms.
struct SourceWaveform {
    std::function<double(double)> value;
    std::function<double(double)> rate;

    static SourceWaveform dc(double amplitude, double ramp_time = 0.0);
    static SourceWaveform sum(SourceWaveform a, SourceWaveform b);
    static SourceWaveform scaled(SourceWaveform inner, double factor);
    // Rectangular pulse with smooth (cubic) edges of the given rise time.
    static SourceWaveform pulse(double amplitude, double t_on, double t_off, double rise_time);
};

// One two-terminal element. Positive branch current flows node_from -> node_to.
struct Branch {
    ElementKind kind = ElementKind::Inductor;
    std::string name;
    int node_from = 0;
    int node_to = 0;

    JunctionParams junction;        // Junction
    double inductance = 0.0;        // Inductor
    double series_resistance = 0.0; // Inductor: optional series resistance (leaky loop)
    double resistance = 0.0;        // Resistor
    std::function<double(double)> resistance_fn; // Resistor: optional time-varying value
    SourceWaveform source;          // CurrentSource

    static Branch junction_branch(std::string name, int from, int to, JunctionParams params);
    static Branch inductor(std::string name, int from, int to, double inductance,
                           double series_resistance = 0.0);
    static Branch resistor(std::string name, int from, int to, double resistance);
    static Branch current_source(std::string name, int from, int to, SourceWaveform waveform);
};

// Transformer coupling between two inductor branches, |mutual| <= sqrt(L1 L2).
struct MutualCoupling {
    std::string inductor_a;
    std::string inductor_b;
    double mutual = 0.0; // H, signed
};

// Loop circuit built from junctions, inductors, resistors, mutual inductors
// and current sources on a small node graph. Node 0 is ground by convention.
struct LoopCircuit {
    std::vector<Branch> branches;
    std::vector<MutualCoupling> mutual_couplings;

    int node_count() const;
    const Branch& branch(const std::string& name) const;
    int branch_index(const std::string& name) const;
    std::vector<std::string> junction_names() const;

    // Checks connectivity, coupling bounds, junction parameters and name
    // uniqueness; throws CircuitError with a description of the violation.
    void validate() const;
};

struct SolverConfig {
    std::string method = "trbdf2"; // "trbdf2" or "rk4"
    double dt_max = 1e-10;         // s; also the coarsest trace sampling interval
    double dt_init = 1e-13;        // s
    double rel_tol = 1e-6;
    double abs_tol = 1e-12;        // A, applied to loop currents
    double t_end = 1e-7;           // s
    std::uint64_t max_steps = 400000000;
    int trace_stride = 1;          // record every k-th accepted step

    void validate() const {
        if (dt_max <= 0.0) throw std::invalid_argument("solver: dt_max must be > 0");
        if (dt_init <= 0.0) throw std::invalid_argument("solver: dt_init must be > 0");
        if (rel_tol <= 0.0 || abs_tol <= 0.0) throw std::invalid_argument("solver: tolerances must be > 0");
        if (t_end <= 0.0) throw std::invalid_argument("solver: t_end must be > 0");
        if (method != "trbdf2" && method != "rk4")
            throw std::invalid_argument("solver: unknown method '" + method + "'");
        if (trace_stride < 1) throw std::invalid_argument("solver: trace_stride must be >= 1");
    }
};

// Optional starting point: loop currents keyed by a branch that closes the
// loop (an inductor link), junction phases keyed by junction name. Anything
// unspecified starts at zero / static equilibrium.
struct InitialConditions {
    std::vector<std::pair<std::string, double>> loop_currents;
    std::vector<std::pair<std::string, double>> junction_phases;
};

// Mesh (loop-current) assembly of a LoopCircuit. State vector layout:
// [junction phases | junction phase rates (C > 0 only) | unknown mesh currents].
class MeshSystem {
  public:
    explicit MeshSystem(const LoopCircuit& circuit);

    int state_size() const { return state_size_; }
    int mesh_count() const { return static_cast<int>(unknown_meshes_.size()); }
    int junction_count() const { return static_cast<int>(junctions_.size()); }

    const LoopCircuit& circuit() const { return circuit_; }

    // dy = f(t, y) for the assembled ODE system.
    void derivative(double t, const Eigen::VectorXd& y, Eigen::VectorXd& dy) const;

    // Instantaneous phase rate of each junction (algebraic for C = 0).
    void phase_rates(double t, const Eigen::VectorXd& y, Eigen::VectorXd& rates) const;

    double branch_current(int branch_index, double t, const Eigen::VectorXd& y) const;
    Eigen::VectorXd initial_state(const InitialConditions& init) const;

    int phase_offset(int junction) const { return junction; }
    int junction_branch_index(int junction) const { return junctions_[junction]; }
    int mesh_current_offset() const { return mesh_offset_; }
    int mesh_index_for_link(const std::string& branch_name) const;

    // Component-wise absolute tolerances and typical magnitudes, used by the
    // integrator for error weighting and Jacobian perturbations.
    void error_scales(const SolverConfig& cfg, Eigen::VectorXd& abs_tol,
                      Eigen::VectorXd& typical) const;

    // Largest node current residual, for Kirchhoff checks on a trace sample.
    double kcl_residual(double t, const Eigen::VectorXd& y) const;

  private:
    struct Mesh {
        int link_branch;            // branch whose current defines this mesh
        std::vector<int> branches;  // branches traversed by the mesh
        std::vector<double> signs;  // +1 along branch direction, -1 against
    };

    void build_meshes();
    void assemble_matrices();
    std::vector<std::pair<std::pair<int, int>, double>> mutual_couplings_impl() const;

    LoopCircuit circuit_;
    std::vector<int> junctions_;       // branch index per junction
    std::vector<int> dynamic_;         // junction indices with C > 0
    std::vector<int> sources_;         // branch index per source
    std::vector<Mesh> unknown_meshes_; // meshes with unknown loop current
    std::vector<Mesh> source_meshes_;  // meshes carrying a known source current

    // incidence[b] lists (mesh, sign) pairs for unknown meshes, and
    // source_incidence[b] the same for source meshes.
    std::vector<std::vector<std::pair<int, double>>> incidence_;
    std::vector<std::vector<std::pair<int, double>>> source_incidence_;

    Eigen::MatrixXd mesh_inductance_;        // unknown x unknown
    Eigen::MatrixXd source_inductance_;      // unknown x sources
    Eigen::PartialPivLU<Eigen::MatrixXd> mesh_lu_;

    int mesh_offset_ = 0;
    int state_size_ = 0;
    mutable Eigen::VectorXd scratch_rhs_;
    mutable Eigen::VectorXd scratch_rates_;
};

} // namespace soen
