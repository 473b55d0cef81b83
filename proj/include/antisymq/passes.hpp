#pragma once

#include <vector>

#include "antisymq/circuit.hpp"

namespace antisymq {

struct DickeConstraint {
    std::vector<int> ancilla_qubits;  // global qubit ids carrying the Dicke state
    int weight = 0;                   // declared Hamming weight of their joint state
};

/// Merges adjacent pairs of BlockSwap gates that act on identical target
/// blocks and whose control predicates share all but one literal, provided no
/// ancilla bitstring of the declared Dicke weight satisfies both predicates at
/// once. Each merged pair becomes: MCX computing "neither differing literal
/// holds" into a flag ancilla, one BlockSwap open-controlled on the flag plus
/// the shared literals, and the MCX uncompute. Flag ancillae are appended at
/// the top of the qubit range and cycled per flag_ancillae; returns the input
/// unchanged when no valid pair exists.
Circuit peephole_collapse(const Circuit& c, const DickeConstraint& constraint,
                          int flag_ancillae = 1);

/// Rewrites runs of up to extra_ancillae consecutive controlled BlockSwaps
/// with pairwise-disjoint target blocks: predicates are precomputed into work
/// ancillae by MCX gates, the swaps fire singly controlled on those flags (one
/// swap layer per run), and the MCXs uncompute. Work qubits are taken from
/// work_qubits if provided, else appended at the top of the qubit range.
/// Returns the input unchanged when extra_ancillae is 0 or when the rewrite
/// would not reduce the swap-region depth.
Circuit parallelize(const Circuit& c, int extra_ancillae,
                    const std::vector<int>& work_qubits = {});

}  // namespace antisymq
