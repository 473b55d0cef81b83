#include "antisymq/antisym.hpp"

#include <cmath>

#include "antisymq/dicke.hpp"
#include "antisymq/passes.hpp"

namespace antisymq {

namespace {

Circuit swap_stage_circuit(const SwapSchedule& schedule, const Layout& layout) {
    Circuit stage;
    stage.num_qubits = layout.total_qubits;
    stage.qubit_names = layout.qubit_names();
    for (const SwapOp& op : schedule.ops) {
        std::vector<Control> controls;
        for (const PredicateLiteral& lit : op.predicate)
            controls.push_back({layout.dicke_ancilla(lit.ancilla),
                                lit.value ? Polarity::Closed : Polarity::Open});
        stage.append(make_block_swap(std::move(controls), layout.slot_block(op.slot_a),
                                     layout.slot_block(op.slot_b),
                                     "swap#" + std::to_string(op.order + 1)));
    }
    return stage;
}

}  // namespace

Circuit build_full_circuit(const AntisymConfig& cfg, ScheduleVariant variant,
                           const BuildOptions& options) {
    cfg.validate();
    Layout layout = build_layout(cfg);
    const int m = cfg.total_slots();

    SwapSchedule schedule = (variant == ScheduleVariant::Reference)
                                ? generate_reference_schedule(cfg)
                                : generate_shared_schedule(cfg);
    Circuit swaps = swap_stage_circuit(schedule, layout);
    if (options.collapse) {
        DickeConstraint constraint{layout.dicke_ancillae(), cfg.n_projectile};
        swaps = peephole_collapse(swaps, constraint, options.collapse_flag_ancillae);
    }
    if (variant == ScheduleVariant::Parallel || options.parallel_ancillae > 0) {
        int budget = options.parallel_ancillae > 0 ? options.parallel_ancillae
                                                   : cfg.n_projectile;
        std::vector<int> work = layout.work_ancillae();
        if (static_cast<int>(work.size()) >= budget)
            swaps = parallelize(swaps, budget, work);
        else
            swaps = parallelize(swaps, budget);
    }

    Circuit full;
    full.num_qubits = std::max(layout.total_qubits, swaps.num_qubits);
    full.qubit_names = swaps.qubit_names.empty() ? layout.qubit_names() : swaps.qubit_names;
    while (static_cast<int>(full.qubit_names.size()) < full.num_qubits)
        full.qubit_names.push_back("w" + std::to_string(full.qubit_names.size()));

    if (options.use_gate_dicke) {
        Circuit dicke = dicke_circuit(DickeSpec{m, cfg.n_projectile});
        int base = layout.dicke_ancilla(1);
        for (Gate g : dicke.gates) {
            for (Control& c : g.controls) c.qubit += base;
            for (int& t : g.targets) t += base;
            g.label = g.label.empty() ? "dicke" : "dicke-" + g.label;
            full.append(std::move(g));
        }
    }
    for (const Gate& g : swaps.gates) full.append(g);
    for (int i = 1; i <= cfg.n_target; ++i)
        full.append(make_z(layout.dicke_ancilla(i), "phase"));
    for (int i = 1; i <= m; ++i)
        full.append(make_mcx({{layout.side_qubit(i), Polarity::Closed}},
                             layout.dicke_ancilla(i), "uncompute"));
    return full;
}

bool RunDiagnostics::passed(double tol) const {
    return std::abs(norm - 1.0) <= tol && ancilla_ground_weight >= 1.0 - tol &&
           fidelity_vs_oracle >= 1.0 - tol && antisymmetry_residual <= tol;
}

RunResult run_antisymmetrization(const SubsystemState& target,
                                 const SubsystemState& projectile,
                                 const AntisymConfig& cfg, ScheduleVariant variant,
                                 const BuildOptions& options) {
    cfg.validate();
    target.validate(cfg);
    projectile.validate(cfg);
    const int n = cfg.qubits_per_particle, m = cfg.total_slots();
    Layout layout = build_layout(cfg);

    StateVector t_state = subsystem_state(target, cfg);
    StateVector p_state = subsystem_state(projectile, cfg);
    if (antisymmetry_residual(t_state, cfg.n_target, n) > 1e-10)
        throw std::invalid_argument("run_antisymmetrization: target input is not antisymmetric");
    if (antisymmetry_residual(p_state, cfg.n_projectile, n) > 1e-10)
        throw std::invalid_argument("run_antisymmetrization: projectile input is not antisymmetric");

    Circuit circuit = build_full_circuit(cfg, variant, options);

    StateVector ancillae = options.use_gate_dicke
                               ? StateVector(m)  // |0...0>, circuit prepares the Dicke state
                               : dicke_amplitudes(DickeSpec{m, cfg.n_projectile});
    StateVector full = t_state.tensor(p_state).tensor(ancillae);
    if (layout.total_qubits > full.num_qubits())
        full = full.tensor(StateVector(layout.total_qubits - full.num_qubits()));
    if (!side_convention_check(full, layout))
        throw std::invalid_argument("run_antisymmetrization: side-qubit convention violated");
    if (circuit.num_qubits > full.num_qubits())
        full = full.tensor(StateVector(circuit.num_qubits - full.num_qubits()));

    apply_circuit(circuit, full);

    std::vector<int> ancilla_qubits;
    for (int q = m * n; q < circuit.num_qubits; ++q) ancilla_qubits.push_back(q);

    RunResult result{std::move(full), StateVector(1), {}};
    result.diagnostics.total_qubits = circuit.num_qubits;
    result.diagnostics.norm = std::sqrt(result.state.norm_squared());
    result.diagnostics.ancilla_ground_weight = ancilla_ground_weight(result.state, ancilla_qubits);

    StateVector particles = project_qubits_zero(result.state, ancilla_qubits);
    double sector_norm = std::sqrt(particles.norm_squared());
    if (sector_norm > 0.0)
        for (std::uint64_t i = 0; i < particles.size(); ++i) particles[i] /= sector_norm;
    StateVector oracle = oracle_antisymmetrize(target, projectile, cfg);
    result.diagnostics.fidelity_vs_oracle = fidelity(particles, oracle);
    result.diagnostics.antisymmetry_residual = antisymmetry_residual(particles, m, n);
    result.particles = std::move(particles);
    return result;
}

}  // namespace antisymq
