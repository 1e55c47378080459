#include "soen/circuit.hpp"

#include <algorithm>
#include <cmath>
#include <deque>
#include <set>

namespace soen {

namespace {

double smoothstep(double x) {
    if (x <= 0.0) return 0.0;
    if (x >= 1.0) return 1.0;
    return x * x * (3.0 - 2.0 * x);
}

double smoothstep_rate(double x) {
    if (x <= 0.0 || x >= 1.0) return 0.0;
    return 6.0 * x * (1.0 - x);
}

} // namespace

SourceWaveform SourceWaveform::dc(double amplitude, double ramp_time) {
    SourceWaveform w;
    if (ramp_time <= 0.0) {
        w.value = [amplitude](double) { return amplitude; };
        w.rate = [](double) { return 0.0; };
    } else {
        w.value = [amplitude, ramp_time](double t) { return amplitude * smoothstep(t / ramp_time); };
        w.rate = [amplitude, ramp_time](double t) {
            return amplitude * smoothstep_rate(t / ramp_time) / ramp_time;
        };
    }
    return w;
}

SourceWaveform SourceWaveform::sum(SourceWaveform a, SourceWaveform b) {
    SourceWaveform w;
    w.value = [a, b](double t) { return a.value(t) + b.value(t); };
    w.rate = [a, b](double t) { return a.rate(t) + b.rate(t); };
    return w;
}

SourceWaveform SourceWaveform::scaled(SourceWaveform inner, double factor) {
    SourceWaveform w;
    w.value = [inner, factor](double t) { return factor * inner.value(t); };
    w.rate = [inner, factor](double t) { return factor * inner.rate(t); };
    return w;
}

SourceWaveform SourceWaveform::pulse(double amplitude, double t_on, double t_off, double rise_time) {
    SourceWaveform w;
    const double rise = std::max(rise_time, 1e-15);
    w.value = [=](double t) {
        return amplitude * (smoothstep((t - t_on) / rise) - smoothstep((t - t_off) / rise));
    };
    w.rate = [=](double t) {
        return amplitude *
               (smoothstep_rate((t - t_on) / rise) - smoothstep_rate((t - t_off) / rise)) / rise;
    };
    return w;
}

Branch Branch::junction_branch(std::string name, int from, int to, JunctionParams params) {
    Branch b;
    b.kind = ElementKind::Junction;
    b.name = std::move(name);
    b.node_from = from;
    b.node_to = to;
    b.junction = params;
    return b;
}

Branch Branch::inductor(std::string name, int from, int to, double inductance,
                        double series_resistance) {
    Branch b;
    b.kind = ElementKind::Inductor;
    b.name = std::move(name);
    b.node_from = from;
    b.node_to = to;
    b.inductance = inductance;
    b.series_resistance = series_resistance;
    return b;
}

Branch Branch::resistor(std::string name, int from, int to, double resistance) {
    Branch b;
    b.kind = ElementKind::Resistor;
    b.name = std::move(name);
    b.node_from = from;
    b.node_to = to;
    b.resistance = resistance;
    return b;
}

Branch Branch::current_source(std::string name, int from, int to, SourceWaveform waveform) {
    Branch b;
    b.kind = ElementKind::CurrentSource;
    b.name = std::move(name);
    b.node_from = from;
    b.node_to = to;
    b.source = std::move(waveform);
    return b;
}

int LoopCircuit::node_count() const {
    int n = 0;
    for (const auto& b : branches) n = std::max({n, b.node_from + 1, b.node_to + 1});
    return n;
}

int LoopCircuit::branch_index(const std::string& name) const {
    for (std::size_t i = 0; i < branches.size(); ++i)
        if (branches[i].name == name) return static_cast<int>(i);
    throw CircuitError("circuit: no branch named '" + name + "'");
}

const Branch& LoopCircuit::branch(const std::string& name) const {
    return branches[static_cast<std::size_t>(branch_index(name))];
}

std::vector<std::string> LoopCircuit::junction_names() const {
    std::vector<std::string> names;
    for (const auto& b : branches)
        if (b.kind == ElementKind::Junction) names.push_back(b.name);
    return names;
}

void LoopCircuit::validate() const {
    if (branches.empty()) throw CircuitError("circuit: no branches");
    std::set<std::string> names;
    for (const auto& b : branches) {
        if (b.name.empty()) throw CircuitError("circuit: branch with empty name");
        if (!names.insert(b.name).second)
            throw CircuitError("circuit: duplicate branch name '" + b.name + "'");
        if (b.node_from < 0 || b.node_to < 0)
            throw CircuitError("circuit: negative node index on '" + b.name + "'");
        if (b.node_from == b.node_to)
            throw CircuitError("circuit: branch '" + b.name + "' shorts a node to itself");
        switch (b.kind) {
            case ElementKind::Junction:
                try {
                    b.junction.validate();
                } catch (const std::exception& e) {
                    throw CircuitError("circuit: '" + b.name + "': " + e.what());
                }
                break;
            case ElementKind::Inductor:
                if (b.inductance <= 0.0)
                    throw CircuitError("circuit: inductor '" + b.name + "' must have L > 0");
                if (b.series_resistance < 0.0)
                    throw CircuitError("circuit: inductor '" + b.name + "' has negative series resistance");
                break;
            case ElementKind::Resistor:
                if (!b.resistance_fn && b.resistance <= 0.0)
                    throw CircuitError("circuit: resistor '" + b.name + "' must have R > 0");
                break;
            case ElementKind::CurrentSource:
                if (!b.source.value || !b.source.rate)
                    throw CircuitError("circuit: source '" + b.name + "' missing waveform");
                break;
        }
    }

    for (const auto& m : mutual_couplings) {
        const Branch& a = branch(m.inductor_a);
        const Branch& b = branch(m.inductor_b);
        if (a.kind != ElementKind::Inductor || b.kind != ElementKind::Inductor)
            throw CircuitError("circuit: mutual coupling must join two inductors");
        const double bound = std::sqrt(a.inductance * b.inductance);
        if (std::abs(m.mutual) > bound * (1.0 + 1e-12))
            throw CircuitError("circuit: |M| > sqrt(L1*L2) for coupling '" + m.inductor_a + "'/'" +
                               m.inductor_b + "'");
    }

    // Whole graph connected.
    const int n = node_count();
    std::vector<char> seen(static_cast<std::size_t>(n), 0);
    std::deque<int> queue{branches.front().node_from};
    seen[static_cast<std::size_t>(branches.front().node_from)] = 1;
    while (!queue.empty()) {
        int u = queue.front();
        queue.pop_front();
        for (const auto& b : branches) {
            int v = -1;
            if (b.node_from == u) v = b.node_to;
            else if (b.node_to == u) v = b.node_from;
            if (v >= 0 && !seen[static_cast<std::size_t>(v)]) {
                seen[static_cast<std::size_t>(v)] = 1;
                queue.push_back(v);
            }
        }
    }
    for (int u = 0; u < n; ++u)
        if (!seen[static_cast<std::size_t>(u)])
            throw CircuitError("circuit: node graph is not connected");

    // Every source must be shunted by a conductive path (sources become mesh
    // links, so the non-source subgraph must already span all nodes).
    std::fill(seen.begin(), seen.end(), 0);
    int start = -1;
    for (const auto& b : branches)
        if (b.kind != ElementKind::CurrentSource) {
            start = b.node_from;
            break;
        }
    if (start < 0) throw CircuitError("circuit: only current sources present");
    seen[static_cast<std::size_t>(start)] = 1;
    queue.push_back(start);
    while (!queue.empty()) {
        int u = queue.front();
        queue.pop_front();
        for (const auto& b : branches) {
            if (b.kind == ElementKind::CurrentSource) continue;
            int v = -1;
            if (b.node_from == u) v = b.node_to;
            else if (b.node_to == u) v = b.node_from;
            if (v >= 0 && !seen[static_cast<std::size_t>(v)]) {
                seen[static_cast<std::size_t>(v)] = 1;
                queue.push_back(v);
            }
        }
    }
    for (int u = 0; u < n; ++u)
        if (!seen[static_cast<std::size_t>(u)])
            throw CircuitError("circuit: a current source is not shunted by a conductive path");
}

MeshSystem::MeshSystem(const LoopCircuit& circuit) : circuit_(circuit) {
    circuit_.validate();
    for (std::size_t i = 0; i < circuit_.branches.size(); ++i) {
        const Branch& b = circuit_.branches[i];
        if (b.kind == ElementKind::Junction) junctions_.push_back(static_cast<int>(i));
        if (b.kind == ElementKind::CurrentSource) sources_.push_back(static_cast<int>(i));
    }
    build_meshes();
    assemble_matrices();

    for (std::size_t j = 0; j < junctions_.size(); ++j) {
        const Branch& b = circuit_.branches[static_cast<std::size_t>(junctions_[j])];
        if (b.junction.capacitance > 0.0) dynamic_.push_back(static_cast<int>(j));
    }
    mesh_offset_ = junction_count() + static_cast<int>(dynamic_.size());
    state_size_ = mesh_offset_ + mesh_count();
    scratch_rhs_.resize(mesh_count());
    scratch_rates_.resize(junction_count());
}

void MeshSystem::build_meshes() {
    const int n = circuit_.node_count();
    const int nb = static_cast<int>(circuit_.branches.size());

    // BFS spanning tree over non-source branches.
    std::vector<int> parent_branch(static_cast<std::size_t>(n), -1);
    std::vector<int> parent_node(static_cast<std::size_t>(n), -1);
    std::vector<char> visited(static_cast<std::size_t>(n), 0);
    std::vector<char> in_tree(static_cast<std::size_t>(nb), 0);

    int root = 0;
    visited[static_cast<std::size_t>(root)] = 1;
    std::deque<int> queue{root};
    while (!queue.empty()) {
        int u = queue.front();
        queue.pop_front();
        for (int bi = 0; bi < nb; ++bi) {
            const Branch& b = circuit_.branches[static_cast<std::size_t>(bi)];
            if (b.kind == ElementKind::CurrentSource) continue;
            int v = -1;
            if (b.node_from == u) v = b.node_to;
            else if (b.node_to == u) v = b.node_from;
            if (v < 0 || visited[static_cast<std::size_t>(v)]) continue;
            visited[static_cast<std::size_t>(v)] = 1;
            parent_branch[static_cast<std::size_t>(v)] = bi;
            parent_node[static_cast<std::size_t>(v)] = u;
            in_tree[static_cast<std::size_t>(bi)] = 1;
            queue.push_back(v);
        }
    }

    std::vector<int> depth(static_cast<std::size_t>(n), 0);
    // Depth by walking to root (graphs here are tiny).
    for (int u = 0; u < n; ++u) {
        int d = 0, v = u;
        while (parent_node[static_cast<std::size_t>(v)] >= 0) {
            v = parent_node[static_cast<std::size_t>(v)];
            ++d;
        }
        depth[static_cast<std::size_t>(u)] = d;
    }

    auto tree_path = [&](int from, int to, Mesh& mesh) {
        // Append tree branches along the path from -> to.
        int a = from, b = to;
        std::vector<std::pair<int, double>> up;   // from 'a' toward ancestor
        std::vector<std::pair<int, double>> down; // from 'b' toward ancestor
        while (depth[static_cast<std::size_t>(a)] > depth[static_cast<std::size_t>(b)]) {
            int pb = parent_branch[static_cast<std::size_t>(a)];
            const Branch& br = circuit_.branches[static_cast<std::size_t>(pb)];
            up.emplace_back(pb, br.node_from == a ? 1.0 : -1.0);
            a = parent_node[static_cast<std::size_t>(a)];
        }
        while (depth[static_cast<std::size_t>(b)] > depth[static_cast<std::size_t>(a)]) {
            int pb = parent_branch[static_cast<std::size_t>(b)];
            const Branch& br = circuit_.branches[static_cast<std::size_t>(pb)];
            down.emplace_back(pb, br.node_to == b ? 1.0 : -1.0);
            b = parent_node[static_cast<std::size_t>(b)];
        }
        while (a != b) {
            int pa = parent_branch[static_cast<std::size_t>(a)];
            const Branch& bra = circuit_.branches[static_cast<std::size_t>(pa)];
            up.emplace_back(pa, bra.node_from == a ? 1.0 : -1.0);
            a = parent_node[static_cast<std::size_t>(a)];
            int pb = parent_branch[static_cast<std::size_t>(b)];
            const Branch& brb = circuit_.branches[static_cast<std::size_t>(pb)];
            down.emplace_back(pb, brb.node_to == b ? 1.0 : -1.0);
            b = parent_node[static_cast<std::size_t>(b)];
        }
        for (const auto& [bi, sign] : up) {
            mesh.branches.push_back(bi);
            mesh.signs.push_back(sign);
        }
        for (auto it = down.rbegin(); it != down.rend(); ++it) {
            mesh.branches.push_back(it->first);
            mesh.signs.push_back(it->second);
        }
    };

    for (int bi = 0; bi < nb; ++bi) {
        const Branch& b = circuit_.branches[static_cast<std::size_t>(bi)];
        if (in_tree[static_cast<std::size_t>(bi)]) continue;
        Mesh mesh;
        mesh.link_branch = bi;
        mesh.branches.push_back(bi);
        mesh.signs.push_back(1.0);
        // Close the loop through the tree: node_to back to node_from.
        tree_path(b.node_to, b.node_from, mesh);
        if (b.kind == ElementKind::CurrentSource)
            source_meshes_.push_back(std::move(mesh));
        else
            unknown_meshes_.push_back(std::move(mesh));
    }

    incidence_.assign(static_cast<std::size_t>(nb), {});
    source_incidence_.assign(static_cast<std::size_t>(nb), {});
    for (std::size_t m = 0; m < unknown_meshes_.size(); ++m)
        for (std::size_t k = 0; k < unknown_meshes_[m].branches.size(); ++k)
            incidence_[static_cast<std::size_t>(unknown_meshes_[m].branches[k])].emplace_back(
                static_cast<int>(m), unknown_meshes_[m].signs[k]);
    for (std::size_t s = 0; s < source_meshes_.size(); ++s)
        for (std::size_t k = 0; k < source_meshes_[s].branches.size(); ++k)
            source_incidence_[static_cast<std::size_t>(source_meshes_[s].branches[k])].emplace_back(
                static_cast<int>(s), source_meshes_[s].signs[k]);
}

void MeshSystem::assemble_matrices() {
    const int m = mesh_count();
    const int s = static_cast<int>(source_meshes_.size());
    mesh_inductance_ = Eigen::MatrixXd::Zero(m, m);
    source_inductance_ = Eigen::MatrixXd::Zero(m, s);

    auto sign_in_unknown = [&](int branch, int mesh) {
        for (const auto& [mm, sg] : incidence_[static_cast<std::size_t>(branch)])
            if (mm == mesh) return sg;
        return 0.0;
    };
    auto sign_in_source = [&](int branch, int mesh) {
        for (const auto& [mm, sg] : source_incidence_[static_cast<std::size_t>(branch)])
            if (mm == mesh) return sg;
        return 0.0;
    };

    for (std::size_t bi = 0; bi < circuit_.branches.size(); ++bi) {
        const Branch& b = circuit_.branches[bi];
        if (b.kind != ElementKind::Inductor) continue;
        for (int i = 0; i < m; ++i) {
            const double si = sign_in_unknown(static_cast<int>(bi), i);
            if (si == 0.0) continue;
            for (int k = 0; k < m; ++k) {
                const double sk = sign_in_unknown(static_cast<int>(bi), k);
                if (sk != 0.0) mesh_inductance_(i, k) += b.inductance * si * sk;
            }
            for (int k = 0; k < s; ++k) {
                const double sk = sign_in_source(static_cast<int>(bi), k);
                if (sk != 0.0) source_inductance_(i, k) += b.inductance * si * sk;
            }
        }
    }

    for (const auto& cpl : mutual_couplings_impl()) {
        const int pa = cpl.first.first;
        const int pb = cpl.first.second;
        const double mv = cpl.second;
        for (int i = 0; i < m; ++i) {
            const double sa_i = sign_in_unknown(pa, i);
            const double sb_i = sign_in_unknown(pb, i);
            for (int k = 0; k < m; ++k) {
                const double sa_k = sign_in_unknown(pa, k);
                const double sb_k = sign_in_unknown(pb, k);
                mesh_inductance_(i, k) += mv * (sa_i * sb_k + sb_i * sa_k);
            }
            for (int k = 0; k < s; ++k) {
                const double sa_k = sign_in_source(pa, k);
                const double sb_k = sign_in_source(pb, k);
                source_inductance_(i, k) += mv * (sa_i * sb_k + sb_i * sa_k);
            }
        }
    }

    if (m > 0) {
        Eigen::FullPivLU<Eigen::MatrixXd> rank_check(mesh_inductance_);
        if (rank_check.rank() < m)
            throw CircuitError(
                "circuit: a loop (containing a junction or resistor) has no inductance; "
                "the mesh inductance matrix is singular");
        mesh_lu_.compute(mesh_inductance_);
    }
}

std::vector<std::pair<std::pair<int, int>, double>> MeshSystem::mutual_couplings_impl() const {
    std::vector<std::pair<std::pair<int, int>, double>> out;
    for (const auto& mcl : circuit_.mutual_couplings)
        out.push_back({{circuit_.branch_index(mcl.inductor_a), circuit_.branch_index(mcl.inductor_b)},
                       mcl.mutual});
    return out;
}

double MeshSystem::branch_current(int branch_index, double t, const Eigen::VectorXd& y) const {
    const Branch& b = circuit_.branches[static_cast<std::size_t>(branch_index)];
    if (b.kind == ElementKind::CurrentSource) return b.source.value(t);
    double current = 0.0;
    for (const auto& [m, sg] : incidence_[static_cast<std::size_t>(branch_index)])
        current += sg * y[mesh_offset_ + m];
    for (const auto& [s, sg] : source_incidence_[static_cast<std::size_t>(branch_index)])
        current += sg * circuit_.branches[static_cast<std::size_t>(sources_[static_cast<std::size_t>(s)])]
                            .source.value(t);
    return current;
}

void MeshSystem::phase_rates(double t, const Eigen::VectorXd& y, Eigen::VectorXd& rates) const {
    rates.resize(junction_count());
    int dyn = 0;
    for (int j = 0; j < junction_count(); ++j) {
        const Branch& b = circuit_.branches[static_cast<std::size_t>(junctions_[static_cast<std::size_t>(j)])];
        const JunctionParams& p = b.junction;
        if (p.capacitance > 0.0) {
            rates[j] = y[junction_count() + dyn];
            ++dyn;
        } else {
            const double ij = branch_current(junctions_[static_cast<std::size_t>(j)], t, y);
            rates[j] = kTwoPi / kFluxQuantum * p.shunt_resistance *
                       (ij - p.critical_current * std::sin(y[j]));
        }
    }
}

void MeshSystem::derivative(double t, const Eigen::VectorXd& y, Eigen::VectorXd& dy) const {
    dy.resize(state_size_);
    phase_rates(t, y, scratch_rates_);

    int dyn = 0;
    for (int j = 0; j < junction_count(); ++j) {
        dy[j] = scratch_rates_[j];
        const Branch& b = circuit_.branches[static_cast<std::size_t>(junctions_[static_cast<std::size_t>(j)])];
        const JunctionParams& p = b.junction;
        if (p.capacitance > 0.0) {
            const double ij = branch_current(junctions_[static_cast<std::size_t>(j)], t, y);
            const double omega = y[junction_count() + dyn];
            dy[junction_count() + dyn] =
                kTwoPi / (kFluxQuantum * p.capacitance) *
                (ij - p.critical_current * std::sin(y[j]) -
                 kFluxQuantum / kTwoPi * omega / p.shunt_resistance);
            ++dyn;
        }
    }

    const int m = mesh_count();
    if (m == 0) return;
    scratch_rhs_.setZero(m);

    // Junction and resistive voltage drops around each unknown mesh.
    for (int j = 0; j < junction_count(); ++j) {
        const int bi = junctions_[static_cast<std::size_t>(j)];
        const double v = kFluxQuantum / kTwoPi * scratch_rates_[j];
        for (const auto& [mm, sg] : incidence_[static_cast<std::size_t>(bi)]) scratch_rhs_[mm] -= sg * v;
    }
    for (std::size_t bi = 0; bi < circuit_.branches.size(); ++bi) {
        const Branch& b = circuit_.branches[bi];
        double r = 0.0;
        if (b.kind == ElementKind::Resistor)
            r = b.resistance_fn ? b.resistance_fn(t) : b.resistance;
        else if (b.kind == ElementKind::Inductor && b.series_resistance > 0.0)
            r = b.series_resistance;
        else
            continue;
        if (r == 0.0) continue;
        const double v = r * branch_current(static_cast<int>(bi), t, y);
        for (const auto& [mm, sg] : incidence_[bi]) scratch_rhs_[mm] -= sg * v;
    }
    // Source-current derivatives threading inductive meshes.
    for (std::size_t s = 0; s < sources_.size(); ++s) {
        const Branch& b = circuit_.branches[static_cast<std::size_t>(sources_[s])];
        const double didt = b.source.rate(t);
        if (didt == 0.0) continue;
        for (int i = 0; i < m; ++i) scratch_rhs_[i] -= source_inductance_(i, static_cast<int>(s)) * didt;
    }

    dy.segment(mesh_offset_, m) = mesh_lu_.solve(scratch_rhs_);
}

Eigen::VectorXd MeshSystem::initial_state(const InitialConditions& init) const {
    Eigen::VectorXd y = Eigen::VectorXd::Zero(state_size_);
    for (const auto& [name, current] : init.loop_currents) {
        const int mesh = mesh_index_for_link(name);
        y[mesh_offset_ + mesh] = current;
    }
    // Static-consistent junction phases for t = 0 currents.
    for (int j = 0; j < junction_count(); ++j) {
        const int bi = junctions_[static_cast<std::size_t>(j)];
        const JunctionParams& p = circuit_.branches[static_cast<std::size_t>(bi)].junction;
        const double ij = branch_current(bi, 0.0, y);
        const double ratio = std::clamp(ij / p.critical_current, -1.0, 1.0);
        y[j] = std::asin(ratio);
    }
    for (const auto& [name, phase] : init.junction_phases) {
        bool found = false;
        for (int j = 0; j < junction_count(); ++j) {
            if (circuit_.branches[static_cast<std::size_t>(junctions_[static_cast<std::size_t>(j)])].name ==
                name) {
                y[j] = phase;
                found = true;
                break;
            }
        }
        if (!found) throw CircuitError("initial conditions: no junction named '" + name + "'");
    }
    return y;
}

int MeshSystem::mesh_index_for_link(const std::string& branch_name) const {
    const int bi = circuit_.branch_index(branch_name);
    for (std::size_t m = 0; m < unknown_meshes_.size(); ++m)
        if (unknown_meshes_[m].link_branch == bi) return static_cast<int>(m);
    throw CircuitError("circuit: branch '" + branch_name +
                       "' does not define a loop current (it is a spanning-tree branch)");
}

void MeshSystem::error_scales(const SolverConfig& cfg, Eigen::VectorXd& abs_tol,
                              Eigen::VectorXd& typical) const {
    abs_tol.resize(state_size_);
    typical.resize(state_size_);
    double ic_max = 1e-6;
    for (int j = 0; j < junction_count(); ++j)
        ic_max = std::max(ic_max,
                          circuit_.branches[static_cast<std::size_t>(junctions_[static_cast<std::size_t>(j)])]
                              .junction.critical_current);
    int dyn = 0;
    for (int j = 0; j < junction_count(); ++j) {
        abs_tol[j] = 1e-8;
        typical[j] = 1.0;
        const JunctionParams& p =
            circuit_.branches[static_cast<std::size_t>(junctions_[static_cast<std::size_t>(j)])].junction;
        if (p.capacitance > 0.0) {
            const double omega_typ = kTwoPi / kFluxQuantum * p.shunt_resistance * p.critical_current;
            abs_tol[junction_count() + dyn] = kTwoPi / kFluxQuantum * p.shunt_resistance * cfg.abs_tol;
            typical[junction_count() + dyn] = omega_typ;
            ++dyn;
        }
    }
    for (int m = 0; m < mesh_count(); ++m) {
        abs_tol[mesh_offset_ + m] = cfg.abs_tol;
        typical[mesh_offset_ + m] = ic_max;
    }
}

double MeshSystem::kcl_residual(double t, const Eigen::VectorXd& y) const {
    const int n = circuit_.node_count();
    std::vector<double> residual(static_cast<std::size_t>(n), 0.0);
    for (std::size_t bi = 0; bi < circuit_.branches.size(); ++bi) {
        const double i = branch_current(static_cast<int>(bi), t, y);
        residual[static_cast<std::size_t>(circuit_.branches[bi].node_from)] -= i;
        residual[static_cast<std::size_t>(circuit_.branches[bi].node_to)] += i;
    }
    double worst = 0.0;
    for (double r : residual) worst = std::max(worst, std::abs(r));
    return worst;
}

} // namespace soen
