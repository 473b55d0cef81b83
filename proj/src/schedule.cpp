#include "antisymq/schedule.hpp"

#include <algorithm>
#include <map>
#include <set>

#include <json.hpp>

namespace antisymq {

bool SwapOp::fires_on(std::uint64_t pattern) const {
    for (const PredicateLiteral& lit : predicate) {
        int bit = (pattern >> (lit.ancilla - 1)) & 1;
        if (bit != lit.value) return false;
    }
    return true;
}

int SwapSchedule::distinct_pair_count() const {
    std::set<std::pair<int, int>> pairs;
    for (const SwapOp& op : ops) pairs.insert({op.slot_a, op.slot_b});
    return static_cast<int>(pairs.size());
}

long long n_perm_binomial(int n_target, int n_projectile) {
    if (n_target < 1 || n_projectile < 1)
        throw std::invalid_argument("n_perm_binomial: counts must be >= 1");
    long long n = n_target + n_projectile, r = n_projectile;
    r = std::min(r, n - r);
    long long v = 1;
    for (long long i = 1; i <= r; ++i) {
        long long num = n - r + i;
        if (v > (1LL << 62) / num) throw std::overflow_error("n_perm_binomial: overflow");
        v = v * num / i;  // exact: v*(n-r+1)...(n-r+i) is divisible by i!
    }
    return v;
}

long long n_perm_sum(int n_target, int n_projectile) {
    if (n_projectile > n_target)
        throw std::invalid_argument("n_perm_sum: requires N_p <= N_T");
    auto choose = [](long long n, long long r) {
        if (r < 0 || r > n) return 0LL;
        r = std::min(r, n - r);
        long long v = 1;
        for (long long i = 1; i <= r; ++i) v = v * (n - r + i) / i;
        return v;
    };
    long long total = 1;
    for (int kappa = 1; kappa <= n_projectile; ++kappa) {
        long long term = choose(n_target, kappa) * choose(n_projectile, kappa);
        if (total > (1LL << 62) - term) throw std::overflow_error("n_perm_sum: overflow");
        total += term;
    }
    return total;
}

std::vector<std::uint64_t> weight_patterns(int m, int k) {
    std::vector<std::uint64_t> out;
    for (std::uint64_t b = 0; b < (std::uint64_t{1} << m); ++b)
        if (__builtin_popcountll(b) == k) out.push_back(b);
    return out;
}

namespace {

int bit_of(std::uint64_t pattern, int pos) { return (pattern >> pos) & 1; }

// Ones among the first n_target positions: the per-branch transposition count.
int branch_k(std::uint64_t pattern, int n_target) {
    return __builtin_popcountll(pattern & ((std::uint64_t{1} << n_target) - 1));
}

// Canonical matching: i-th smallest flagged target slot paired with the i-th
// smallest unflagged projectile slot.
std::vector<std::pair<int, int>> canonical_matching(std::uint64_t pattern, int n_target, int m) {
    std::vector<int> need, give;
    for (int i = 1; i <= n_target; ++i)
        if (bit_of(pattern, i - 1)) need.push_back(i);
    for (int j = n_target + 1; j <= m; ++j)
        if (!bit_of(pattern, j - 1)) give.push_back(j);
    std::vector<std::pair<int, int>> pairs;
    for (size_t r = 0; r < need.size(); ++r) pairs.push_back({need[r], give[r]});
    return pairs;
}

}  // namespace

SwapSchedule generate_reference_schedule(const AntisymConfig& cfg) {
    cfg.validate();
    SwapSchedule s;
    s.config = cfg;
    s.variant = ScheduleVariant::Reference;
    int m = cfg.total_slots();
    int order = 0;
    for (std::uint64_t b : weight_patterns(m, cfg.n_projectile)) {
        for (auto [i, j] : canonical_matching(b, cfg.n_target, m)) {
            SwapOp op;
            op.slot_a = i;
            op.slot_b = j;
            for (int pos = 1; pos <= m; ++pos)
                op.predicate.push_back({pos, bit_of(b, pos - 1)});
            op.order = order++;
            s.ops.push_back(std::move(op));
        }
    }
    return s;
}

namespace {

// The shared schedule assigns each projectile slot a contiguous column of
// target slots, visits in-column pairs first, then cross-column pairs by
// increasing cyclic distance. Greedy first-useful-swap firing over that order
// realizes the canonical occupancy on every ancilla pattern with exactly
// branch_k transpositions.
std::vector<std::vector<int>> target_columns(int n_target, int n_projectile) {
    int base = n_target / n_projectile, extra = n_target % n_projectile;
    std::vector<std::vector<int>> cols(n_projectile);
    int next = 1;
    for (int s = 0; s < n_projectile; ++s) {
        int len = base + (s < extra ? 1 : 0);
        for (int t = 0; t < len; ++t) cols[s].push_back(next++);
    }
    return cols;
}

std::vector<std::pair<int, int>> shared_gate_order(int n_target, int n_projectile) {
    auto cols = target_columns(n_target, n_projectile);
    size_t maxlen = 0;
    for (const auto& c : cols) maxlen = std::max(maxlen, c.size());
    std::vector<std::pair<int, int>> order;
    for (size_t t = 0; t < maxlen; ++t)
        for (int s = 0; s < n_projectile; ++s)
            if (t < cols[s].size()) order.push_back({cols[s][t], n_target + s + 1});
    for (int d = 1; d < n_projectile; ++d)
        for (size_t t = 0; t < maxlen; ++t)
            for (int s = 0; s < n_projectile; ++s)
                if (t < cols[s].size()) {
                    int s2 = (s + d) % n_projectile;
                    order.push_back({cols[s][t], n_target + s2 + 1});
                }
    return order;
}

// Product term over ancilla positions (0-based) -> required bit.
using Term = std::map<int, int>;

bool term_matches(const Term& t, std::uint64_t b) {
    for (auto [pos, val] : t)
        if (bit_of(b, pos) != val) return false;
    return true;
}

Term envelope_of(const std::vector<std::uint64_t>& fire, int m) {
    Term t;
    for (int pos = 0; pos < m; ++pos) {
        int v0 = bit_of(fire.front(), pos);
        bool same = true;
        for (std::uint64_t b : fire)
            if (bit_of(b, pos) != v0) { same = false; break; }
        if (same) t[pos] = v0;
    }
    return t;
}

// Exact disjoint product-term cover of `fire` within the weight-k subspace:
// take the positions all firing patterns agree on if that is already exact,
// otherwise split on the lowest disagreeing position and recurse.
void cover_terms(const std::vector<std::uint64_t>& fire,
                 const std::vector<std::uint64_t>& subspace, int m,
                 std::vector<Term>& out) {
    if (fire.empty()) return;
    Term env = envelope_of(fire, m);
    std::vector<std::uint64_t> env_hits;
    for (std::uint64_t b : subspace)
        if (term_matches(env, b)) env_hits.push_back(b);
    if (env_hits == fire) {
        out.push_back(env);
        return;
    }
    int split = -1;
    for (int pos = 0; pos < m && split < 0; ++pos)
        if (!env.count(pos)) split = pos;
    std::vector<std::uint64_t> f0, f1;
    for (std::uint64_t b : fire) (bit_of(b, split) ? f1 : f0).push_back(b);
    cover_terms(f0, subspace, m, out);
    cover_terms(f1, subspace, m, out);
}

}  // namespace

SwapSchedule generate_shared_schedule(const AntisymConfig& cfg) {
    cfg.validate();
    SwapSchedule s;
    s.config = cfg;
    s.variant = ScheduleVariant::Shared;
    const int nt = cfg.n_target, np = cfg.n_projectile, m = cfg.total_slots();
    auto order = shared_gate_order(nt, np);
    auto patterns = weight_patterns(m, np);

    std::vector<std::vector<std::uint64_t>> fire_sets(order.size());
    for (std::uint64_t b : patterns) {
        std::uint64_t served = 0, emptied = 0;  // bit s-1 = slot s handled
        for (size_t g = 0; g < order.size(); ++g) {
            auto [i, j] = order[g];
            if (bit_of(b, i - 1) == 1 && bit_of(b, j - 1) == 0 &&
                !bit_of(served, i - 1) && !bit_of(emptied, j - 1)) {
                fire_sets[g].push_back(b);
                served |= std::uint64_t{1} << (i - 1);
                emptied |= std::uint64_t{1} << (j - 1);
            }
        }
    }

    int op_order = 0;
    auto push_op = [&](int i, int j, const Term& t) {
        SwapOp op;
        op.slot_a = i;
        op.slot_b = j;
        for (auto [pos, val] : t) op.predicate.push_back({pos + 1, val});
        op.order = op_order++;
        s.ops.push_back(std::move(op));
    };

    for (size_t g = 0; g < order.size(); ++g) {
        auto [i, j] = order[g];
        const auto& fire = fire_sets[g];
        if (fire.empty()) continue;
        if (nt > np && fire.size() == 2) {
            // Keep both branches as bare positive terms; pairs produced here
            // share all but one positive literal and are the peephole-collapse
            // candidates (they can never fire together on one pattern).
            for (std::uint64_t b : fire) {
                Term t;
                for (int pos = 0; pos < m; ++pos)
                    if (bit_of(b, pos)) t[pos] = 1;
                push_op(i, j, t);
            }
        } else {
            std::vector<Term> terms;
            cover_terms(fire, patterns, m, terms);
            for (const Term& t : terms) push_op(i, j, t);
        }
    }
    return s;
}

std::vector<BranchReport> validate_schedule(const SwapSchedule& s) {
    const int nt = s.config.n_target, m = s.config.total_slots();
    std::vector<BranchReport> reports;
    for (std::uint64_t b : weight_patterns(m, s.config.n_projectile)) {
        BranchReport rep;
        rep.pattern = b;
        std::vector<int> contents(m);  // contents[slot-1] = original slot id
        for (int slot = 1; slot <= m; ++slot) contents[slot - 1] = slot;
        for (const SwapOp& op : s.ops) {
            if (!op.fires_on(b)) continue;
            std::swap(contents[op.slot_a - 1], contents[op.slot_b - 1]);
            rep.fired.push_back(op.order);
        }
        std::vector<int> proj_slots, want;
        for (int slot = 1; slot <= m; ++slot) {
            if (contents[slot - 1] > nt) proj_slots.push_back(slot);
            if (bit_of(b, slot - 1)) want.push_back(slot);
        }
        rep.final_projectile_slots = proj_slots;
        int k = branch_k(b, nt);
        rep.occupancy_ok = (proj_slots == want);
        rep.parity_ok = (static_cast<int>(rep.fired.size()) % 2 == k % 2);
        reports.push_back(std::move(rep));
    }
    return reports;
}

bool schedule_valid(const SwapSchedule& s) {
    for (const BranchReport& r : validate_schedule(s))
        if (!r.ok()) return false;
    return true;
}

namespace {

const char* variant_name(ScheduleVariant v) {
    switch (v) {
        case ScheduleVariant::Reference: return "reference";
        case ScheduleVariant::Shared: return "shared";
        case ScheduleVariant::Parallel: return "parallel";
    }
    return "?";
}

}  // namespace

std::string schedule_to_json(const SwapSchedule& s) {
    nlohmann::json ops = nlohmann::json::array();
    for (const SwapOp& op : s.ops) {
        nlohmann::json pred = nlohmann::json::array();
        for (const PredicateLiteral& lit : op.predicate)
            pred.push_back({{"ancilla", lit.ancilla}, {"value", lit.value}});
        ops.push_back({{"slot_a", op.slot_a},
                       {"slot_b", op.slot_b},
                       {"predicate", pred},
                       {"order", op.order}});
    }
    nlohmann::json j{{"config",
                      {{"n_target", s.config.n_target},
                       {"n_projectile", s.config.n_projectile},
                       {"qubits_per_particle", s.config.qubits_per_particle},
                       {"extra_work_ancillae", s.config.extra_work_ancillae}}},
                     {"variant", variant_name(s.variant)},
                     {"ops", ops}};
    return j.dump(2);
}

std::string branch_reports_to_json(const std::vector<BranchReport>& reports) {
    nlohmann::json arr = nlohmann::json::array();
    for (const BranchReport& r : reports) {
        arr.push_back({{"pattern", r.pattern},
                       {"fired", r.fired},
                       {"final_projectile_slots", r.final_projectile_slots},
                       {"parity_ok", r.parity_ok},
                       {"occupancy_ok", r.occupancy_ok}});
    }
    return arr.dump(2);
}

}  // namespace antisymq
