#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "antisymq/layout.hpp"
#include "antisymq/state.hpp"

namespace antisymq {

struct SlaterSpec {
    std::vector<int> orbital_indices;  // pairwise distinct, each < 2^(n-1)
    int side = 0;                      // 0 = target, 1 = projectile
    void validate(const AntisymConfig& cfg) const;
};

struct SubsystemState {
    std::vector<std::pair<Complex, SlaterSpec>> terms;
    int particle_count = 1;
    int side = 0;
    void validate(const AntisymConfig& cfg) const;
};

/// Basis index of a single-particle state within one slot block: orbital on
/// the internal qubits, side flag on the top (side) qubit.
std::uint64_t particle_code(int orbital, int side, const AntisymConfig& cfg);

/// Normalized Slater determinant over P contiguous slots of n qubits each:
/// (1/sqrt(P!)) * sum over permutations pi of sgn(pi) |phi_pi(1) ... phi_pi(P)>.
StateVector slater_state(const SlaterSpec& spec, const AntisymConfig& cfg);

/// Coefficient-weighted superposition of the per-term determinants.
StateVector subsystem_state(const SubsystemState& sub, const AntisymConfig& cfg);

/// Max over slot pairs (i,j) of || P_ij |psi> + |psi> || for a state over
/// num_slots blocks of block_width qubits; 0 for antisymmetric states.
double antisymmetry_residual(const StateVector& state, int num_slots, int block_width);

/// Exact antisymmetrized merge of the two subsystem states over all
/// N_T + N_p slots: sum over weight-N_p slot assignments of the signed,
/// canonically matched rearrangement of the product state.
StateVector oracle_antisymmetrize(const SubsystemState& target,
                                  const SubsystemState& projectile,
                                  const AntisymConfig& cfg);

/// Independent second oracle: the full (N_T+N_p)-particle Slater determinant
/// over the combined orbital list (single-determinant inputs only).
StateVector oracle_full_permutation_check(const SlaterSpec& target,
                                          const SlaterSpec& projectile,
                                          const AntisymConfig& cfg);

SubsystemState subsystem_from_json(const std::string& text, const AntisymConfig& cfg,
                                   int expected_side);
std::string subsystem_to_json(const SubsystemState& sub);

/// Seeded superposition of 1-3 random determinants with random coefficients.
SubsystemState random_subsystem(std::mt19937_64& rng, int particle_count, int side,
                                const AntisymConfig& cfg);

}  // namespace antisymq
