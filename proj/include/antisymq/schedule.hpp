#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "antisymq/layout.hpp"

namespace antisymq {

/// Control literal over the Dicke ancilla register: ancilla index in
/// [1, N_T+N_p] and the value it must hold for the swap to fire.
struct PredicateLiteral {
    int ancilla = 1;
    int value = 1;  // 0 or 1
};

struct SwapOp {
    int slot_a = 1;  // target-block slot, in [1, N_T]
    int slot_b = 2;  // projectile-block slot, in (N_T, N_T+N_p]
    std::vector<PredicateLiteral> predicate;  // product term, conjunction
    int order = 0;

    bool fires_on(std::uint64_t pattern) const;  // bit i-1 of pattern = ancilla a_i
};

enum class ScheduleVariant { Reference, Shared, Parallel };

struct SwapSchedule {
    AntisymConfig config;
    ScheduleVariant variant = ScheduleVariant::Shared;
    std::vector<SwapOp> ops;

    int distinct_pair_count() const;
};

struct BranchReport {
    std::uint64_t pattern = 0;
    std::vector<int> fired;  // op orders, in schedule order
    std::vector<int> final_projectile_slots;
    bool parity_ok = false;
    bool occupancy_ok = false;

    bool ok() const { return parity_ok && occupancy_ok; }
};

/// C(N_T + N_p, N_p), exact with overflow checking.
long long n_perm_binomial(int n_target, int n_projectile);

/// 1 + sum over kappa of C(N_T,kappa) * C(N_p,kappa); equals the binomial form.
long long n_perm_sum(int n_target, int n_projectile);

/// All ancilla bitstrings of Hamming weight N_p over N_T+N_p bits, ascending.
std::vector<std::uint64_t> weight_patterns(int m, int k);

/// One fully-controlled BlockSwap per canonical-matching transposition of each
/// weight pattern; exponentially large, used as the gate-level baseline.
SwapSchedule generate_reference_schedule(const AntisymConfig& cfg);

/// The compact schedule: swaps shared across ancilla patterns, with product-term
/// predicates over the Dicke register. Distinct slot pairs number N_T*N_p.
SwapSchedule generate_shared_schedule(const AntisymConfig& cfg);

/// Classical per-pattern composition of the fired swaps as a permutation of
/// slot contents; checks final projectile occupancy and fired-count parity.
std::vector<BranchReport> validate_schedule(const SwapSchedule& s);

bool schedule_valid(const SwapSchedule& s);

std::string schedule_to_json(const SwapSchedule& s);
std::string branch_reports_to_json(const std::vector<BranchReport>& reports);

}  // namespace antisymq
