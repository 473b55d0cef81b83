#pragma once

#include "antisymq/circuit.hpp"
#include "antisymq/layout.hpp"
#include "antisymq/oracle.hpp"
#include "antisymq/schedule.hpp"

namespace antisymq {

struct BuildOptions {
    bool use_gate_dicke = false;  // gate-prepare the Dicke state inside the circuit
    int parallel_ancillae = 0;    // work ancillae for the parallelized swap stage
    bool collapse = false;        // run the peephole collapse on the swap stage
    int collapse_flag_ancillae = 1;
};

/// Four-stage circuit on build_layout(cfg): Dicke preparation (optional),
/// predicate-controlled swap stage, Z phase gates on the first N_T ancillae,
/// and side-qubit-controlled CNOT uncomputation of all ancillae. Passes may
/// append flag qubits above the layout's range.
Circuit build_full_circuit(const AntisymConfig& cfg, ScheduleVariant variant,
                           const BuildOptions& options = {});

struct RunDiagnostics {
    double norm = 0.0;
    double ancilla_ground_weight = 0.0;
    double fidelity_vs_oracle = 0.0;
    double antisymmetry_residual = 0.0;
    int total_qubits = 0;
    bool passed(double tol = 1e-10) const;
};

struct RunResult {
    StateVector state;        // full register after the circuit
    StateVector particles;    // ancilla-|0> sector, normalized
    RunDiagnostics diagnostics;
};

/// Composes the product input with the Dicke ancillae, simulates the chosen
/// circuit variant, and compares the ancilla-|0> sector against the classical
/// oracle. Rejects inputs violating the side convention or internal
/// antisymmetry of either subsystem.
RunResult run_antisymmetrization(const SubsystemState& target,
                                 const SubsystemState& projectile,
                                 const AntisymConfig& cfg, ScheduleVariant variant,
                                 const BuildOptions& options = {});

}  // namespace antisymq
