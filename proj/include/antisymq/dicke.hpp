#pragma once

#include "antisymq/circuit.hpp"
#include "antisymq/state.hpp"

namespace antisymq {

struct DickeSpec {
    int m = 1;  // qubit count
    int k = 1;  // excitation count
    void validate() const;
};

/// Uniform superposition of all weight-k basis states: amplitude 1/sqrt(C(m,k))
/// on each, 0 elsewhere.
StateVector dicke_amplitudes(const DickeSpec& spec);

/// Gate-based preparation from |0...0>: X gates load |0^{m-k} 1^k> (ones on the
/// top qubits), then an inductive split-and-cyclic-shift cascade of controlled
/// Ry rotations distributes the excitations uniformly.
Circuit dicke_circuit(const DickeSpec& spec);

}  // namespace antisymq
