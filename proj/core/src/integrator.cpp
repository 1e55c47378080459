#include "soen/integrator.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace soen {

namespace {

constexpr double kGamma = 0.58578643762690495; // 2 - sqrt(2)
constexpr double kD = kGamma / 2.0;            // implicit coefficient of both stages

struct SlipTracker {
    std::vector<double> base;      // starting phase per junction
    std::vector<double> last;      // previous accepted phase
    std::vector<long long> next_up;   // index of next threshold above
    std::vector<long long> count;
    std::vector<std::vector<double>> times;
    std::vector<double> winding_mag;

    void init(const Eigen::VectorXd& y, int junction_count) {
        base.assign(static_cast<std::size_t>(junction_count), 0.0);
        last.assign(static_cast<std::size_t>(junction_count), 0.0);
        next_up.assign(static_cast<std::size_t>(junction_count), 0);
        count.assign(static_cast<std::size_t>(junction_count), 0);
        times.assign(static_cast<std::size_t>(junction_count), {});
        winding_mag.assign(static_cast<std::size_t>(junction_count), 0.0);
        for (int j = 0; j < junction_count; ++j) {
            base[static_cast<std::size_t>(j)] = y[j];
            last[static_cast<std::size_t>(j)] = y[j];
        }
    }

    // Thresholds sit at base + pi + 2 pi k; crossing one upward is one fluxon.
    void update(double t_prev, double t_now, const Eigen::VectorXd& y, int junction_count) {
        for (int j = 0; j < junction_count; ++j) {
            const auto ju = static_cast<std::size_t>(j);
            const double prev = last[ju];
            const double now = y[j];
            winding_mag[ju] += std::abs(now - prev);
            double thresh = base[ju] + kPi + kTwoPi * static_cast<double>(next_up[ju]);
            while (now >= thresh) {
                const double frac = (thresh - prev) / (now - prev);
                times[ju].push_back(t_prev + frac * (t_now - t_prev));
                ++count[ju];
                ++next_up[ju];
                thresh += kTwoPi;
            }
            double lower = base[ju] + kPi + kTwoPi * static_cast<double>(next_up[ju] - 1);
            while (now < lower) {
                const double frac = (lower - prev) / (now - prev);
                times[ju].push_back(t_prev + frac * (t_now - t_prev));
                --count[ju];
                --next_up[ju];
                lower -= kTwoPi;
            }
            last[ju] = now;
        }
    }

    static constexpr double kPi = 3.14159265358979323846;
};

class Recorder {
  public:
    Recorder(const MeshSystem& sys, const SolverConfig& cfg) : sys_(sys), cfg_(cfg) {
        const LoopCircuit& c = sys.circuit();
        trace_.junction_names = c.junction_names();
        for (const auto& b : c.branches) trace_.branch_names.push_back(b.name);
        trace_.phase.resize(trace_.junction_names.size());
        trace_.voltage.resize(trace_.junction_names.size());
        trace_.branch_current.resize(trace_.branch_names.size());
    }

    void sample(double t, const Eigen::VectorXd& y, bool force) {
        ++since_last_;
        if (!force && since_last_ < cfg_.trace_stride &&
            t - last_recorded_t_ < cfg_.dt_max * (1.0 - 1e-9))
            return;
        since_last_ = 0;
        last_recorded_t_ = t;
        trace_.time.push_back(t);
        sys_.phase_rates(t, y, rates_);
        for (int j = 0; j < sys_.junction_count(); ++j) {
            trace_.phase[static_cast<std::size_t>(j)].push_back(y[j]);
            trace_.voltage[static_cast<std::size_t>(j)].push_back(kFluxQuantum / kTwoPi * rates_[j]);
        }
        for (std::size_t b = 0; b < trace_.branch_names.size(); ++b)
            trace_.branch_current[b].push_back(sys_.branch_current(static_cast<int>(b), t, y));
        trace_.max_kcl_residual = std::max(trace_.max_kcl_residual, sys_.kcl_residual(t, y));
    }

    Trace finish(SlipTracker&& slips) {
        trace_.slip_count = std::move(slips.count);
        trace_.slip_times = std::move(slips.times);
        trace_.winding_magnitude = std::move(slips.winding_mag);
        return std::move(trace_);
    }

  private:
    const MeshSystem& sys_;
    const SolverConfig& cfg_;
    Trace trace_;
    Eigen::VectorXd rates_;
    int since_last_ = 0;
    double last_recorded_t_ = -1e300;
};

double wrms_norm(const Eigen::VectorXd& v, const Eigen::VectorXd& y, const Eigen::VectorXd& atol,
                 double rtol) {
    double acc = 0.0;
    for (int i = 0; i < v.size(); ++i) {
        const double w = atol[i] + rtol * std::abs(y[i]);
        const double e = v[i] / w;
        acc += e * e;
    }
    return std::sqrt(acc / static_cast<double>(v.size()));
}

[[noreturn]] void fail(const char* what, double t, double h) {
    std::ostringstream os;
    os << "integration failure: " << what << " at t = " << t << " s with step " << h << " s";
    throw IntegrationError(os.str());
}

} // namespace

Trace integrate_transient(const LoopCircuit& circuit, const SolverConfig& cfg,
                          const InitialConditions& init) {
    cfg.validate();
    MeshSystem sys(circuit);
    const int n = sys.state_size();
    const int nj = sys.junction_count();

    Eigen::VectorXd y = sys.initial_state(init);
    Eigen::VectorXd atol, typical;
    sys.error_scales(cfg, atol, typical);

    Recorder recorder(sys, cfg);
    SlipTracker slips;
    slips.init(y, nj);
    recorder.sample(0.0, y, true);

    Eigen::VectorXd k1(n), k2(n), k3(n), err(n), ferr(n);
    Eigen::VectorXd u(n), g(n), du(n), rhs(n), fu(n), ypert(n), fpert(n);
    Eigen::MatrixXd jac(n, n), G(n, n);
    Eigen::PartialPivLU<Eigen::MatrixXd> lu;

    double t = 0.0;
    std::uint64_t accepted = 0, rejected = 0;

    if (cfg.method == "rk4") {
        const double h = cfg.dt_init;
        while (t < cfg.t_end * (1.0 - 1e-12)) {
            const double step = std::min(h, cfg.t_end - t);
            sys.derivative(t, y, k1);
            u = y + 0.5 * step * k1;
            sys.derivative(t + 0.5 * step, u, k2);
            u = y + 0.5 * step * k2;
            sys.derivative(t + 0.5 * step, u, k3);
            u = y + step * k3;
            sys.derivative(t + step, u, fu);
            y += step / 6.0 * (k1 + 2.0 * k2 + 2.0 * k3 + fu);
            if (!y.allFinite()) fail("non-finite state (rk4)", t, step);
            const double t_prev = t;
            t += step;
            ++accepted;
            if (accepted > cfg.max_steps) fail("step budget exceeded (rk4)", t, step);
            slips.update(t_prev, t, y, nj);
            recorder.sample(t, y, t >= cfg.t_end * (1.0 - 1e-12));
        }
        Trace trace = recorder.finish(std::move(slips));
        trace.accepted_steps = accepted;
        trace.rejected_steps = 0;
        return trace;
    }

    // Embedded third-order weights for the error estimate.
    const double w2 = 1.0 / (6.0 * kGamma * (1.0 - kGamma));
    const double w3 = 0.5 - kGamma * w2;
    const double w1 = 1.0 - w2 - w3;
    const double b1 = std::sqrt(2.0) / 4.0, b2 = b1, b3 = kD;
    const double c1 = 1.0 / (kGamma * (2.0 - kGamma));
    const double c2 = (1.0 - kGamma) * (1.0 - kGamma) / (kGamma * (2.0 - kGamma));

    auto newton_solve = [&](double ts, const Eigen::VectorXd& rhs_fixed, double h,
                            Eigen::VectorXd& state) -> bool {
        for (int it = 0; it < 8; ++it) {
            sys.derivative(ts, state, fu);
            g = state - kD * h * fu - rhs_fixed;
            du = lu.solve(g);
            state -= du;
            if (!state.allFinite()) return false;
            if (wrms_norm(du, state, atol, cfg.rel_tol) < 0.1) return true;
        }
        return false;
    };

    double h = std::min(cfg.dt_init, cfg.dt_max);
    while (t < cfg.t_end * (1.0 - 1e-12)) {
        h = std::min({h, cfg.dt_max, cfg.t_end - t});
        if (h < 1e-19) fail("step size underflow", t, h);
        if (accepted + rejected > cfg.max_steps) fail("step budget exceeded", t, h);

        sys.derivative(t, y, k1);
        // Resolve individual phase slips: limit the phase advance per step.
        double rate_max = 0.0;
        for (int j = 0; j < nj; ++j) rate_max = std::max(rate_max, std::abs(k1[j]));
        if (rate_max > 0.0) h = std::min(h, 0.8 / rate_max);

        // Finite-difference Jacobian at the step start, shared by both stages.
        for (int col = 0; col < n; ++col) {
            const double delta = 1.5e-8 * std::max(std::abs(y[col]), typical[col]);
            ypert = y;
            ypert[col] += delta;
            sys.derivative(t, ypert, fpert);
            jac.col(col) = (fpert - k1) / delta;
        }
        G = Eigen::MatrixXd::Identity(n, n) - kD * h * jac;
        lu.compute(G);

        // TR stage to t + gamma h.
        rhs = y + kD * h * k1;
        u = y + kGamma * h * k1;
        if (!newton_solve(t + kGamma * h, rhs, h, u)) {
            h *= 0.25;
            ++rejected;
            continue;
        }
        const Eigen::VectorXd y_gamma = u;
        sys.derivative(t + kGamma * h, y_gamma, k2);

        // BDF2 stage to t + h.
        rhs = c1 * y_gamma - c2 * y;
        u = rhs + kD * h * k2;
        if (!newton_solve(t + h, rhs, h, u)) {
            h *= 0.25;
            ++rejected;
            continue;
        }
        sys.derivative(t + h, u, k3);

        err = h * ((w1 - b1) * k1 + (w2 - b2) * k2 + (w3 - b3) * k3);
        ferr = lu.solve(err); // stiff-filtered estimate
        const double eps = wrms_norm(ferr, u, atol, cfg.rel_tol);

        if (eps <= 1.0 && u.allFinite()) {
            const double t_prev = t;
            t += h;
            y = u;
            ++accepted;
            slips.update(t_prev, t, y, nj);
            recorder.sample(t, y, t >= cfg.t_end * (1.0 - 1e-12));
            const double fac = std::clamp(0.9 * std::pow(std::max(eps, 1e-10), -1.0 / 3.0), 0.3, 5.0);
            h *= fac;
        } else {
            ++rejected;
            const double fac = std::clamp(0.9 * std::pow(std::max(eps, 1e-10), -1.0 / 3.0), 0.1, 0.5);
            h *= fac;
        }
    }

    Trace trace = recorder.finish(std::move(slips));
    trace.accepted_steps = accepted;
    trace.rejected_steps = rejected;
    return trace;
}

} // namespace soen
