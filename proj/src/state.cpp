#include "antisymq/state.hpp"

#include <cmath>
#include <cstdlib>

namespace antisymq {

int StateVector::max_qubits() {
    if (const char* env = std::getenv("ANTISYMQ_MAX_QUBITS")) {
        int v = std::atoi(env);
        if (v > 0) return v;
    }
    return 26;
}

StateVector::StateVector(int num_qubits) : num_qubits_(num_qubits) {
    if (num_qubits < 1) throw std::invalid_argument("StateVector: need at least one qubit");
    if (num_qubits > max_qubits())
        throw std::runtime_error("StateVector: " + std::to_string(num_qubits) +
                                 " qubits exceeds capacity limit of " +
                                 std::to_string(max_qubits()));
    amps_.assign(std::uint64_t{1} << num_qubits, Complex{0.0, 0.0});
    amps_[0] = Complex{1.0, 0.0};
}

StateVector::StateVector(int num_qubits, std::vector<Complex> amps) : num_qubits_(num_qubits) {
    if (num_qubits < 1 || num_qubits > max_qubits())
        throw std::runtime_error("StateVector: qubit count out of range");
    if (amps.size() != (std::uint64_t{1} << num_qubits))
        throw std::invalid_argument("StateVector: amplitude count must be 2^num_qubits");
    amps_ = std::move(amps);
}

StateVector StateVector::basis_state(int num_qubits, std::uint64_t index) {
    StateVector s(num_qubits);
    if (index >= s.size()) throw std::invalid_argument("basis_state: index out of range");
    s.amps_[0] = Complex{0.0, 0.0};
    s.amps_[index] = Complex{1.0, 0.0};
    return s;
}

void StateVector::check_qubit(int q) const {
    if (q < 0 || q >= num_qubits_)
        throw std::invalid_argument("qubit index " + std::to_string(q) + " out of range");
}

std::uint64_t StateVector::control_mask_ones(std::span<const Control> controls) const {
    std::uint64_t ones = 0;
    for (const Control& c : controls) {
        check_qubit(c.qubit);
        if (c.polarity == Polarity::Closed) ones |= std::uint64_t{1} << c.qubit;
    }
    return ones;
}

namespace {
std::uint64_t control_mask_all(std::span<const Control> controls) {
    std::uint64_t all = 0;
    for (const Control& c : controls) all |= std::uint64_t{1} << c.qubit;
    return all;
}
}  // namespace

void StateVector::apply_x(int q) {
    check_qubit(q);
    const std::uint64_t bit = std::uint64_t{1} << q;
    for (std::uint64_t i = 0; i < size(); ++i)
        if (!(i & bit)) std::swap(amps_[i], amps_[i | bit]);
}

void StateVector::apply_z(int q) {
    check_qubit(q);
    const std::uint64_t bit = std::uint64_t{1} << q;
    for (std::uint64_t i = 0; i < size(); ++i)
        if (i & bit) amps_[i] = -amps_[i];
}

void StateVector::apply_h(int q) {
    check_qubit(q);
    const std::uint64_t bit = std::uint64_t{1} << q;
    const double inv_sqrt2 = 1.0 / std::sqrt(2.0);
    for (std::uint64_t i = 0; i < size(); ++i) {
        if (i & bit) continue;
        Complex a0 = amps_[i], a1 = amps_[i | bit];
        amps_[i] = (a0 + a1) * inv_sqrt2;
        amps_[i | bit] = (a0 - a1) * inv_sqrt2;
    }
}

void StateVector::apply_ry(int q, double angle) {
    check_qubit(q);
    const std::uint64_t bit = std::uint64_t{1} << q;
    const double c = std::cos(angle / 2.0), s = std::sin(angle / 2.0);
    for (std::uint64_t i = 0; i < size(); ++i) {
        if (i & bit) continue;
        Complex a0 = amps_[i], a1 = amps_[i | bit];
        amps_[i] = c * a0 - s * a1;
        amps_[i | bit] = s * a0 + c * a1;
    }
}

void StateVector::apply_mcx(std::span<const Control> controls, int target) {
    check_qubit(target);
    const std::uint64_t tbit = std::uint64_t{1} << target;
    const std::uint64_t all = control_mask_all(controls);
    const std::uint64_t ones = control_mask_ones(controls);
    if (all & tbit) throw std::invalid_argument("apply_mcx: target overlaps a control");
    for (std::uint64_t i = 0; i < size(); ++i)
        if (!(i & tbit) && (i & all) == ones) std::swap(amps_[i], amps_[i | tbit]);
}

void StateVector::apply_cry(std::span<const Control> controls, int target, double angle) {
    check_qubit(target);
    const std::uint64_t tbit = std::uint64_t{1} << target;
    const std::uint64_t all = control_mask_all(controls);
    const std::uint64_t ones = control_mask_ones(controls);
    if (all & tbit) throw std::invalid_argument("apply_cry: target overlaps a control");
    const double c = std::cos(angle / 2.0), s = std::sin(angle / 2.0);
    for (std::uint64_t i = 0; i < size(); ++i) {
        if ((i & tbit) || (i & all) != ones) continue;
        Complex a0 = amps_[i], a1 = amps_[i | tbit];
        amps_[i] = c * a0 - s * a1;
        amps_[i | tbit] = s * a0 + c * a1;
    }
}

void StateVector::apply_cswap_block(std::span<const Control> controls,
                                    std::span<const int> block_a,
                                    std::span<const int> block_b) {
    if (block_a.size() != block_b.size())
        throw std::invalid_argument("apply_cswap_block: block length mismatch");
    std::uint64_t seen = control_mask_all(controls);
    for (size_t r = 0; r < block_a.size(); ++r) {
        check_qubit(block_a[r]);
        check_qubit(block_b[r]);
        std::uint64_t ba = std::uint64_t{1} << block_a[r];
        std::uint64_t bb = std::uint64_t{1} << block_b[r];
        if ((seen & ba) || (seen & bb) || (ba == bb))
            throw std::invalid_argument("apply_cswap_block: overlapping qubits");
        seen |= ba | bb;
    }
    const std::uint64_t all = control_mask_all(controls);
    const std::uint64_t ones = control_mask_ones(controls);
    for (std::uint64_t i = 0; i < size(); ++i) {
        if ((i & all) != ones) continue;
        // Compute the partner index with the two bit groups exchanged rank-wise.
        std::uint64_t j = i;
        for (size_t r = 0; r < block_a.size(); ++r) {
            std::uint64_t ba = std::uint64_t{1} << block_a[r];
            std::uint64_t bb = std::uint64_t{1} << block_b[r];
            std::uint64_t va = (i & ba) ? 1 : 0, vb = (i & bb) ? 1 : 0;
            j = (j & ~ba & ~bb) | (vb ? ba : 0) | (va ? bb : 0);
        }
        if (j > i) std::swap(amps_[i], amps_[j]);
    }
}

double StateVector::norm_squared() const {
    double n = 0.0;
    for (const Complex& a : amps_) n += std::norm(a);
    return n;
}

void StateVector::normalize() {
    double n = std::sqrt(norm_squared());
    if (n == 0.0) throw std::runtime_error("normalize: zero state");
    for (Complex& a : amps_) a /= n;
}

StateVector StateVector::tensor(const StateVector& other) const {
    int nq = num_qubits_ + other.num_qubits_;
    if (nq > max_qubits())
        throw std::runtime_error("tensor: combined qubit count exceeds capacity limit");
    std::vector<Complex> out(std::uint64_t{1} << nq);
    for (std::uint64_t hi = 0; hi < other.size(); ++hi)
        for (std::uint64_t lo = 0; lo < size(); ++lo)
            out[(hi << num_qubits_) | lo] = other.amps_[hi] * amps_[lo];
    return StateVector(nq, std::move(out));
}

Complex inner_product(const StateVector& a, const StateVector& b) {
    if (a.num_qubits_ != b.num_qubits_)
        throw std::invalid_argument("inner_product: size mismatch");
    Complex acc{0.0, 0.0};
    for (std::uint64_t i = 0; i < a.size(); ++i) acc += std::conj(a.amps_[i]) * b.amps_[i];
    return acc;
}

double fidelity(const StateVector& a, const StateVector& b) {
    return std::norm(inner_product(a, b));
}

double ancilla_ground_weight(const StateVector& state, std::span<const int> ancillae) {
    std::uint64_t mask = 0;
    for (int q : ancillae) {
        if (q < 0 || q >= state.num_qubits())
            throw std::invalid_argument("ancilla_ground_weight: qubit out of range");
        mask |= std::uint64_t{1} << q;
    }
    double w = 0.0;
    for (std::uint64_t i = 0; i < state.size(); ++i)
        if ((i & mask) == 0) w += std::norm(state[i]);
    return w;
}

StateVector project_qubits_zero(const StateVector& state, std::span<const int> qubits) {
    std::uint64_t mask = 0;
    for (int q : qubits) {
        if (q < 0 || q >= state.num_qubits())
            throw std::invalid_argument("project_qubits_zero: qubit out of range");
        mask |= std::uint64_t{1} << q;
    }
    int kept = state.num_qubits() - static_cast<int>(qubits.size());
    if (kept < 1) throw std::invalid_argument("project_qubits_zero: nothing left");
    std::vector<Complex> out(std::uint64_t{1} << kept, Complex{0.0, 0.0});
    for (std::uint64_t i = 0; i < state.size(); ++i) {
        if ((i & mask) != 0) continue;
        // Compact the surviving bits into a contiguous index.
        std::uint64_t j = 0;
        int pos = 0;
        for (int q = 0; q < state.num_qubits(); ++q) {
            if (mask & (std::uint64_t{1} << q)) continue;
            if (i & (std::uint64_t{1} << q)) j |= std::uint64_t{1} << pos;
            ++pos;
        }
        out[j] = state[i];
    }
    return StateVector(kept, std::move(out));
}

}  // namespace antisymq
