#include <pybind11/complex.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "antisymq/antisym.hpp"
#include "antisymq/dicke.hpp"

namespace py = pybind11;
using namespace antisymq;

namespace {

ScheduleVariant variant_from_string(const std::string& v) {
    if (v == "reference") return ScheduleVariant::Reference;
    if (v == "shared") return ScheduleVariant::Shared;
    if (v == "parallel") return ScheduleVariant::Parallel;
    throw std::invalid_argument("unknown variant: " + v);
}

AntisymConfig make_config(int nt, int np, int n, int extra) {
    AntisymConfig cfg{nt, np, n, extra};
    cfg.validate();
    return cfg;
}

py::dict diagnostics_dict(const RunDiagnostics& d) {
    py::dict out;
    out["norm"] = d.norm;
    out["ancilla_ground_weight"] = d.ancilla_ground_weight;
    out["fidelity_vs_oracle"] = d.fidelity_vs_oracle;
    out["antisymmetry_residual"] = d.antisymmetry_residual;
    out["total_qubits"] = d.total_qubits;
    out["passed"] = d.passed();
    return out;
}

SubsystemState determinant(const std::vector<int>& orbitals, int side) {
    SlaterSpec spec{orbitals, side};
    SubsystemState s;
    s.side = side;
    s.particle_count = static_cast<int>(orbitals.size());
    s.terms = {{Complex{1.0, 0.0}, spec}};
    return s;
}

}  // namespace

PYBIND11_MODULE(_antisymq, mod) {
    mod.doc() = "antisymmetrization circuit toolkit";

    mod.def("n_perm_binomial", &n_perm_binomial, py::arg("n_target"), py::arg("n_projectile"));
    mod.def("n_perm_sum", &n_perm_sum, py::arg("n_target"), py::arg("n_projectile"));

    mod.def(
        "dicke_amplitudes",
        [](int m, int k) {
            StateVector s = dicke_amplitudes({m, k});
            return std::vector<Complex>(s.amps().begin(), s.amps().end());
        },
        py::arg("m"), py::arg("k"));

    mod.def(
        "dicke_circuit_qasm",
        [](int m, int k) { return emit_qasm(dicke_circuit({m, k})); }, py::arg("m"),
        py::arg("k"));

    mod.def(
        "shared_schedule",
        [](int nt, int np, int n) {
            if (n == 0) {
                n = 2;
                while ((1 << (n - 1)) < nt) ++n;
            }
            SwapSchedule s = generate_shared_schedule(make_config(nt, np, n, 0));
            py::list ops;
            for (const SwapOp& op : s.ops) {
                py::dict d;
                d["slot_a"] = op.slot_a;
                d["slot_b"] = op.slot_b;
                py::list pred;
                for (const PredicateLiteral& lit : op.predicate)
                    pred.append(py::make_tuple(lit.ancilla, lit.value));
                d["predicate"] = pred;
                d["order"] = op.order;
                ops.append(d);
            }
            return ops;
        },
        py::arg("n_target"), py::arg("n_projectile"), py::arg("qubits_per_particle") = 0,
        "Swap schedule shared across ancilla patterns; qubits_per_particle 0 "
        "picks the smallest admissible value.");

    mod.def(
        "schedule_is_valid",
        [](int nt, int np, const std::string& variant) {
            int n = 2;
            while ((1 << (n - 1)) < nt) ++n;
            AntisymConfig cfg = make_config(nt, np, n, 0);
            SwapSchedule s = (variant == "reference") ? generate_reference_schedule(cfg)
                                                      : generate_shared_schedule(cfg);
            return schedule_valid(s);
        },
        py::arg("n_target"), py::arg("n_projectile"), py::arg("variant") = "shared");

    mod.def(
        "circuit_qasm",
        [](int nt, int np, int n, const std::string& variant, bool collapse, bool gate_dicke) {
            BuildOptions options;
            options.collapse = collapse;
            options.use_gate_dicke = gate_dicke;
            return emit_qasm(
                build_full_circuit(make_config(nt, np, n, 0), variant_from_string(variant), options));
        },
        py::arg("n_target"), py::arg("n_projectile"), py::arg("qubits_per_particle"),
        py::arg("variant") = "shared", py::arg("collapse") = false,
        py::arg("gate_dicke") = false);

    mod.def(
        "circuit_metrics",
        [](int nt, int np, int n, const std::string& variant) {
            ResourceReport r = metrics(
                build_full_circuit(make_config(nt, np, n, 0), variant_from_string(variant), {}));
            py::dict out;
            out["swap_count"] = r.swap_count;
            out["depth"] = r.depth;
            out["cnot_equivalent"] = r.cnot_equivalent;
            py::dict kinds;
            for (const auto& [k, v] : r.gate_count_by_kind) kinds[py::str(k)] = v;
            out["gate_count_by_kind"] = kinds;
            py::dict hist;
            for (const auto& [k, v] : r.multicontrol_histogram)
                hist[py::int_(k)] = v;
            out["multicontrol_histogram"] = hist;
            return out;
        },
        py::arg("n_target"), py::arg("n_projectile"), py::arg("qubits_per_particle"),
        py::arg("variant") = "shared");

    mod.def(
        "run_determinants",
        [](const std::vector<int>& target_orbitals, const std::vector<int>& projectile_orbitals,
           int n, const std::string& variant) {
            AntisymConfig cfg = make_config(static_cast<int>(target_orbitals.size()),
                                            static_cast<int>(projectile_orbitals.size()), n, 0);
            RunResult r = run_antisymmetrization(determinant(target_orbitals, 0),
                                                 determinant(projectile_orbitals, 1), cfg,
                                                 variant_from_string(variant), {});
            return diagnostics_dict(r.diagnostics);
        },
        py::arg("target_orbitals"), py::arg("projectile_orbitals"),
        py::arg("qubits_per_particle"), py::arg("variant") = "shared");

    mod.def(
        "run_random",
        [](int nt, int np, int n, std::uint64_t seed, const std::string& variant) {
            AntisymConfig cfg = make_config(nt, np, n, 0);
            std::mt19937_64 rng(seed);
            SubsystemState t = random_subsystem(rng, nt, 0, cfg);
            SubsystemState p = random_subsystem(rng, np, 1, cfg);
            RunResult r =
                run_antisymmetrization(t, p, cfg, variant_from_string(variant), {});
            return diagnostics_dict(r.diagnostics);
        },
        py::arg("n_target"), py::arg("n_projectile"), py::arg("qubits_per_particle"),
        py::arg("seed") = 1, py::arg("variant") = "shared");
}
