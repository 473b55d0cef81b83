#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "antisymq/state.hpp"

namespace antisymq {

enum class GateKind { X, Z, H, Ry, MCX, BlockSwap };

std::string gate_kind_name(GateKind k);

struct Gate {
    GateKind kind = GateKind::X;
    std::vector<Control> controls;
    // One target for X/Z/H/Ry/MCX. For BlockSwap: block_a qubits followed by
    // block_b qubits, each of length `width`, swapped rank-by-rank.
    std::vector<int> targets;
    int width = 0;       // BlockSwap only
    double angle = 0.0;  // Ry only
    std::string label;

    std::vector<int> qubits() const;  // controls + targets, for layering
    void validate(int num_qubits) const;
};

Gate make_x(int q, std::string label = {});
Gate make_z(int q, std::string label = {});
Gate make_h(int q, std::string label = {});
Gate make_ry(int q, double angle, std::vector<Control> controls = {}, std::string label = {});
Gate make_mcx(std::vector<Control> controls, int target, std::string label = {});
Gate make_block_swap(std::vector<Control> controls, std::vector<int> block_a,
                     std::vector<int> block_b, std::string label = {});

struct Circuit {
    int num_qubits = 0;
    std::vector<Gate> gates;
    std::vector<std::string> qubit_names;  // optional; empty or size num_qubits

    void append(Gate g);
    void validate() const;
};

struct ResourceReport {
    std::map<std::string, int> gate_count_by_kind;
    std::map<int, int> multicontrol_histogram;  // controls >= 2 on an X-type gate
    int swap_count = 0;
    int ancilla_count = 0;
    int depth = 0;
    long long cnot_equivalent = 0;
};

/// Cost model: plain width-w BlockSwap = 3w CNOT-equivalents; controlled
/// width-w BlockSwap = 2w CNOTs plus w multi-controlled NOTs (tallied in the
/// histogram, not decomposed). Depth is greedy earliest-layer assignment where
/// gates sharing any qubit cannot share a layer.
ResourceReport metrics(const Circuit& c);

/// Greedy depth restricted to the circuit's BlockSwap gates (the swap region),
/// used for parallelization comparisons.
int swap_region_depth(const Circuit& c);

/// OpenQASM 3.0 text. BlockSwaps are expanded rank-by-rank into (possibly
/// controlled) swap gates; open controls use the negctrl modifier.
std::string emit_qasm(const Circuit& c);

/// Applies every gate of the circuit to the state, in order.
void apply_circuit(const Circuit& c, StateVector& state);

std::string circuit_to_json(const Circuit& c);
Circuit circuit_from_json(const std::string& text);
std::string report_to_json(const ResourceReport& r);

}  // namespace antisymq
