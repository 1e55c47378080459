#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace soen {

class LoopCircuit;

// Time series of junction states and branch currents from one transient run.
struct Trace {
    std::vector<double> time;

    std::vector<std::string> junction_names;
    std::vector<std::vector<double>> phase;   // [junction][sample], rad
    std::vector<std::vector<double>> voltage; // [junction][sample], V

    std::vector<std::string> branch_names;
    std::vector<std::vector<double>> branch_current; // [branch][sample], A

    // Phase-slip bookkeeping accumulated during integration (not from the
    // recorded samples, so it is exact even for a decimated trace).
    std::vector<long long> slip_count;            // net 2 pi windings per junction
    std::vector<std::vector<double>> slip_times;  // per junction, interpolated

    // Flux dissipated across each junction, sum of |dphi|, for energy audits.
    std::vector<double> winding_magnitude; // rad

    double max_kcl_residual = 0.0; // A, worst node residual over all samples
    std::uint64_t accepted_steps = 0;
    std::uint64_t rejected_steps = 0;

    std::size_t size() const { return time.size(); }
    int junction_index(const std::string& name) const;
    int branch_index(const std::string& name) const;

    double final_branch_current(const std::string& name) const;

    // Mean junction voltage between the first and last full winding, which
    // cancels partial-period truncation; falls back to the whole window when
    // fewer than two slips occurred.
    double winding_aligned_mean_voltage(const std::string& junction) const;

    // CSV with one header row: time, then phase/voltage per junction, then
    // branch currents. SI units throughout.
    void write_csv(std::ostream& os) const;
};

// Net fluxon count of a junction over the trace window, round(dphi / 2 pi).
long long count_fluxons(const Trace& trace, const std::string& junction);

} // namespace soen
