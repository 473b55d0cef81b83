#include "antisymq/passes.hpp"

#include <algorithm>
#include <map>
#include <optional>
#include <set>

namespace antisymq {

namespace {

struct MergeShape {
    std::vector<Control> shared;  // literals common to both predicates
    Control diff_a;               // literal unique to the first predicate
    Control diff_b;               // literal unique to the second predicate
};

std::optional<MergeShape> single_literal_difference(const Gate& a, const Gate& b) {
    if (a.controls.size() != b.controls.size()) return std::nullopt;
    std::map<int, Polarity> ca, cb;
    for (const Control& c : a.controls) ca[c.qubit] = c.polarity;
    for (const Control& c : b.controls) cb[c.qubit] = c.polarity;
    MergeShape shape;
    std::vector<Control> only_a, only_b;
    for (auto [q, pol] : ca) {
        auto it = cb.find(q);
        if (it != cb.end() && it->second == pol)
            shape.shared.push_back({q, pol});
        else
            only_a.push_back({q, pol});
    }
    for (auto [q, pol] : cb) {
        auto it = ca.find(q);
        if (it == ca.end() || it->second != pol) only_b.push_back({q, pol});
    }
    if (only_a.size() != 1 || only_b.size() != 1) return std::nullopt;
    if (only_a[0].qubit == only_b[0].qubit) return std::nullopt;
    shape.diff_a = only_a[0];
    shape.diff_b = only_b[0];
    return shape;
}

bool satisfied_on(const std::vector<Control>& controls, std::uint64_t assignment,
                  const std::map<int, int>& qubit_to_pos) {
    for (const Control& c : controls) {
        int bit = (assignment >> qubit_to_pos.at(c.qubit)) & 1;
        if ((c.polarity == Polarity::Closed) != (bit == 1)) return false;
    }
    return true;
}

// True iff some weight-k assignment of the Dicke ancillae satisfies both
// predicates simultaneously (which would make the merge unsound). Controls on
// qubits outside the constrained register are treated as satisfiable.
bool jointly_satisfiable(const Gate& a, const Gate& b, const DickeConstraint& constraint) {
    std::map<int, int> qubit_to_pos;
    for (size_t i = 0; i < constraint.ancilla_qubits.size(); ++i)
        qubit_to_pos[constraint.ancilla_qubits[i]] = static_cast<int>(i);
    for (const Gate* g : {&a, &b})
        for (const Control& ctl : g->controls)
            if (!qubit_to_pos.count(ctl.qubit)) return true;
    int m = static_cast<int>(constraint.ancilla_qubits.size());
    for (std::uint64_t x = 0; x < (std::uint64_t{1} << m); ++x) {
        if (__builtin_popcountll(x) != constraint.weight) continue;
        if (satisfied_on(a.controls, x, qubit_to_pos) &&
            satisfied_on(b.controls, x, qubit_to_pos))
            return true;
    }
    return false;
}

Polarity opposite_of(Polarity p) { return p == Polarity::Closed ? Polarity::Open : Polarity::Closed; }

}  // namespace

Circuit peephole_collapse(const Circuit& c, const DickeConstraint& constraint,
                          int flag_ancillae) {
    c.validate();
    if (flag_ancillae < 1) throw std::invalid_argument("peephole_collapse: need >= 1 flag ancilla");
    if (constraint.ancilla_qubits.empty())
        throw std::invalid_argument("peephole_collapse: Dicke constraint required");

    // First pass: locate mergeable adjacent pairs.
    std::vector<size_t> merge_at;
    for (size_t i = 0; i + 1 < c.gates.size(); ++i) {
        const Gate& a = c.gates[i];
        const Gate& b = c.gates[i + 1];
        if (a.kind != GateKind::BlockSwap || b.kind != GateKind::BlockSwap) continue;
        if (a.targets != b.targets) continue;
        if (!merge_at.empty() && merge_at.back() + 1 >= i) continue;
        auto shape = single_literal_difference(a, b);
        if (!shape) continue;
        if (jointly_satisfiable(a, b, constraint)) continue;
        merge_at.push_back(i);
    }
    if (merge_at.empty()) return c;

    int flags_used = std::min<int>(flag_ancillae, static_cast<int>(merge_at.size()));
    Circuit out;
    out.num_qubits = c.num_qubits + flags_used;
    out.qubit_names = c.qubit_names;
    if (!out.qubit_names.empty())
        for (int i = 0; i < flags_used; ++i)
            out.qubit_names.push_back("flag" + std::to_string(i + 1));

    size_t next_merge = 0;
    int merge_count = 0;
    for (size_t i = 0; i < c.gates.size(); ++i) {
        if (next_merge < merge_at.size() && merge_at[next_merge] == i) {
            const Gate& a = c.gates[i];
            const Gate& b = c.gates[i + 1];
            MergeShape shape = *single_literal_difference(a, b);
            int flag = c.num_qubits + (merge_count % flags_used);
            // Flag goes to 1 exactly when neither differing literal holds, so
            // the open-controlled swap fires on the union of the two branches.
            Gate compute = make_mcx({{shape.diff_a.qubit, opposite_of(shape.diff_a.polarity)},
                                     {shape.diff_b.qubit, opposite_of(shape.diff_b.polarity)}},
                                    flag, "collapse-flag");
            std::vector<Control> swap_controls = shape.shared;
            swap_controls.push_back({flag, Polarity::Open});
            Gate merged = a;
            merged.controls = std::move(swap_controls);
            merged.label = a.label.empty() ? "collapsed" : a.label + "+collapsed";
            out.append(compute);
            out.append(std::move(merged));
            out.append(compute);
            ++merge_count;
            ++next_merge;
            ++i;  // consumed the pair
        } else {
            out.append(c.gates[i]);
        }
    }
    return out;
}

Circuit parallelize(const Circuit& c, int extra_ancillae,
                    const std::vector<int>& work_qubits) {
    c.validate();
    if (extra_ancillae <= 0) return c;
    if (!work_qubits.empty() && static_cast<int>(work_qubits.size()) < extra_ancillae)
        throw std::invalid_argument("parallelize: fewer work qubits than requested ancillae");

    std::vector<int> flags = work_qubits;
    int num_qubits = c.num_qubits;
    if (flags.empty())
        for (int i = 0; i < extra_ancillae; ++i) flags.push_back(num_qubits++);

    // Group consecutive controlled BlockSwaps with pairwise-disjoint targets.
    std::vector<std::vector<size_t>> groups;
    std::vector<size_t> current;
    std::set<int> current_targets;
    auto flush = [&]() {
        if (!current.empty()) groups.push_back(current);
        current.clear();
        current_targets.clear();
    };
    for (size_t i = 0; i < c.gates.size(); ++i) {
        const Gate& g = c.gates[i];
        if (g.kind != GateKind::BlockSwap || g.controls.empty()) {
            flush();
            groups.push_back({i});  // passthrough singleton, marked by kind below
            continue;
        }
        bool disjoint = true;
        for (int t : g.targets)
            if (current_targets.count(t)) { disjoint = false; break; }
        if (!disjoint || static_cast<int>(current.size()) >= extra_ancillae) flush();
        current.push_back(i);
        for (int t : g.targets) current_targets.insert(t);
    }
    flush();

    Circuit out;
    out.num_qubits = num_qubits;
    out.qubit_names = c.qubit_names;
    if (!out.qubit_names.empty() && num_qubits > c.num_qubits)
        for (int i = c.num_qubits; i < num_qubits; ++i)
            out.qubit_names.push_back("w" + std::to_string(i - c.num_qubits + 1));

    for (const auto& group : groups) {
        bool rewrite = group.size() >= 2;
        for (size_t idx : group)
            if (c.gates[idx].kind != GateKind::BlockSwap || c.gates[idx].controls.empty())
                rewrite = false;
        if (!rewrite) {
            for (size_t idx : group) out.append(c.gates[idx]);
            continue;
        }
        std::vector<Gate> computes;
        for (size_t j = 0; j < group.size(); ++j) {
            const Gate& g = c.gates[group[j]];
            computes.push_back(make_mcx(g.controls, flags[j], "predicate-flag"));
        }
        for (const Gate& mcx : computes) out.append(mcx);
        for (size_t j = 0; j < group.size(); ++j) {
            Gate g = c.gates[group[j]];
            g.controls = {{flags[j], Polarity::Closed}};
            out.append(std::move(g));
        }
        for (const Gate& mcx : computes) out.append(mcx);
    }

    // Only keep the rewrite when it actually shortens the swap region.
    if (swap_region_depth(out) >= swap_region_depth(c)) return c;
    return out;
}

}  // namespace antisymq
