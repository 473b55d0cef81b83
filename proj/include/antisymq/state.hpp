#pragma once

#include <complex>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace antisymq {

using Complex = std::complex<double>;

struct QubitId {
    int index = 0;
};

enum class Polarity { Open, Closed };  // Open fires on |0>, Closed on |1>

struct Control {
    int qubit = 0;
    Polarity polarity = Polarity::Closed;
};

/// Dense statevector over `num_qubits` qubits. Qubit 0 is the least
/// significant bit of the amplitude index.
class StateVector {
  public:
    static int max_qubits();  // default 26, override via ANTISYMQ_MAX_QUBITS

    explicit StateVector(int num_qubits);
    StateVector(int num_qubits, std::vector<Complex> amps);

    static StateVector basis_state(int num_qubits, std::uint64_t index);

    int num_qubits() const { return num_qubits_; }
    std::uint64_t size() const { return std::uint64_t{1} << num_qubits_; }
    std::span<const Complex> amps() const { return amps_; }
    std::span<Complex> amps() { return amps_; }
    Complex& operator[](std::uint64_t i) { return amps_[i]; }
    const Complex& operator[](std::uint64_t i) const { return amps_[i]; }

    void apply_x(int q);
    void apply_z(int q);
    void apply_h(int q);
    void apply_ry(int q, double angle);
    void apply_mcx(std::span<const Control> controls, int target);
    // Exchanges the bit groups block_a and block_b rank-by-rank on every
    // amplitude satisfying the controls.
    void apply_cswap_block(std::span<const Control> controls,
                           std::span<const int> block_a,
                           std::span<const int> block_b);
    // Controlled single-qubit gates used by the Dicke preparation circuit.
    void apply_cry(std::span<const Control> controls, int target, double angle);
    void apply_cx(std::span<const Control> controls, int target) {
        apply_mcx(controls, target);
    }

    double norm_squared() const;
    void normalize();

    /// Tensor product: `other`'s qubits become the high-order qubits.
    StateVector tensor(const StateVector& other) const;

    friend double fidelity(const StateVector& a, const StateVector& b);
    friend Complex inner_product(const StateVector& a, const StateVector& b);

  private:
    void check_qubit(int q) const;
    std::uint64_t control_mask_ones(std::span<const Control> controls) const;

    int num_qubits_;
    std::vector<Complex> amps_;
};

/// |<a|b>|^2
double fidelity(const StateVector& a, const StateVector& b);
Complex inner_product(const StateVector& a, const StateVector& b);

/// Probability mass on amplitudes with every listed qubit in |0>.
double ancilla_ground_weight(const StateVector& state, std::span<const int> ancillae);

/// Projects onto the subspace where every listed qubit is |0>, dropping those
/// qubits from the register. Not normalized.
StateVector project_qubits_zero(const StateVector& state, std::span<const int> qubits);

}  // namespace antisymq
