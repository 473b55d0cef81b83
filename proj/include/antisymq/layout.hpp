#pragma once

#include <string>
#include <vector>

#include "antisymq/state.hpp"

namespace antisymq {

struct AntisymConfig {
    int n_target = 1;             // N_T
    int n_projectile = 1;         // N_p <= N_T
    int qubits_per_particle = 2;  // n, including the side qubit
    int extra_work_ancillae = 0;

    int total_slots() const { return n_target + n_projectile; }
    void validate() const;
};

/// Global qubit indices for the full register. Slots are numbered 1..N_T+N_p
/// (targets first); each slot owns a contiguous n-qubit block whose last qubit
/// is the side qubit (0 = target side, 1 = projectile side). Dicke ancillae
/// a_1..a_{N_T+N_p} follow the slot blocks, then any work ancillae.
struct Layout {
    AntisymConfig config;
    int total_qubits = 0;

    int slot_base(int slot) const;                // slot in [1, total_slots]
    std::vector<int> slot_block(int slot) const;  // all n qubits, side last
    std::vector<int> internal_qubits(int slot) const;
    int side_qubit(int slot) const;
    int dicke_ancilla(int i) const;  // i in [1, total_slots]
    std::vector<int> dicke_ancillae() const;
    std::vector<int> work_ancillae() const;
    std::vector<int> all_ancillae() const;  // dicke + work
    std::vector<std::string> qubit_names() const;
};

Layout build_layout(const AntisymConfig& cfg);

/// True iff every nonzero amplitude (magnitude > 1e-12) has side bit 0 on all
/// target slots and side bit 1 on all projectile slots.
bool side_convention_check(const StateVector& state, const Layout& layout);

std::string layout_to_json(const Layout& layout);

}  // namespace antisymq
