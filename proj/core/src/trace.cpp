#include "soen/trace.hpp"

#include <charconv>
#include <cmath>
#include <ostream>
#include <stdexcept>

#include "soen/constants.hpp"

namespace soen {

namespace {

// Locale-independent shortest round-trip formatting, so identical runs
// produce byte-identical files.
void append_double(std::string& out, double v) {
    char buf[32];
    auto res = std::to_chars(buf, buf + sizeof(buf), v);
    out.append(buf, res.ptr);
}

} // namespace

int Trace::junction_index(const std::string& name) const {
    for (std::size_t i = 0; i < junction_names.size(); ++i)
        if (junction_names[i] == name) return static_cast<int>(i);
    throw std::out_of_range("trace: no junction named '" + name + "'");
}

int Trace::branch_index(const std::string& name) const {
    for (std::size_t i = 0; i < branch_names.size(); ++i)
        if (branch_names[i] == name) return static_cast<int>(i);
    throw std::out_of_range("trace: no branch named '" + name + "'");
}

double Trace::final_branch_current(const std::string& name) const {
    const auto& column = branch_current[static_cast<std::size_t>(branch_index(name))];
    if (column.empty()) throw std::out_of_range("trace: empty");
    return column.back();
}

double Trace::winding_aligned_mean_voltage(const std::string& junction) const {
    const int j = junction_index(junction);
    const auto& slips = slip_times[static_cast<std::size_t>(j)];
    if (slips.size() >= 2) {
        const double dt = slips.back() - slips.front();
        if (dt > 0.0)
            return static_cast<double>(slips.size() - 1) * kFluxQuantum / dt;
    }
    if (time.size() < 2) return 0.0;
    const auto& ph = phase[static_cast<std::size_t>(j)];
    return (ph.back() - ph.front()) / kTwoPi * kFluxQuantum / (time.back() - time.front());
}

void Trace::write_csv(std::ostream& os) const {
    std::string line = "time_s";
    for (const auto& name : junction_names) {
        line += ",phase_" + name + "_rad";
        line += ",v_" + name + "_V";
    }
    for (const auto& name : branch_names) line += ",i_" + name + "_A";
    line += "\n";
    os << line;

    for (std::size_t s = 0; s < time.size(); ++s) {
        line.clear();
        append_double(line, time[s]);
        for (std::size_t j = 0; j < junction_names.size(); ++j) {
            line += ',';
            append_double(line, phase[j][s]);
            line += ',';
            append_double(line, voltage[j][s]);
        }
        for (std::size_t b = 0; b < branch_names.size(); ++b) {
            line += ',';
            append_double(line, branch_current[b][s]);
        }
        line += '\n';
        os << line;
    }
}

long long count_fluxons(const Trace& trace, const std::string& junction) {
    const int j = trace.junction_index(junction);
    const auto& ph = trace.phase[static_cast<std::size_t>(j)];
    if (ph.empty()) return 0;
    return std::llround((ph.back() - ph.front()) / kTwoPi);
}

} // namespace soen
