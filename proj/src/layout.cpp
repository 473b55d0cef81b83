#include "antisymq/layout.hpp"

#include <json.hpp>

namespace antisymq {

void AntisymConfig::validate() const {
    if (n_target < 1 || n_projectile < 1)
        throw std::invalid_argument("config: particle counts must be >= 1");
    if (n_projectile > n_target)
        throw std::invalid_argument("config: projectile particle count must not exceed the target's");
    if (qubits_per_particle < 2)
        throw std::invalid_argument("config: need at least 2 qubits per particle (one internal + side)");
    long long capacity = 1LL << (qubits_per_particle - 1);
    if (capacity < std::max(n_target, n_projectile))
        throw std::invalid_argument(
            "config: 2^(n-1) single-particle states cannot host a determinant of this size");
    if (extra_work_ancillae < 0)
        throw std::invalid_argument("config: extra_work_ancillae must be >= 0");
}

int Layout::slot_base(int slot) const {
    if (slot < 1 || slot > config.total_slots())
        throw std::invalid_argument("slot index out of range");
    return (slot - 1) * config.qubits_per_particle;
}

std::vector<int> Layout::slot_block(int slot) const {
    std::vector<int> q;
    int base = slot_base(slot);
    for (int i = 0; i < config.qubits_per_particle; ++i) q.push_back(base + i);
    return q;
}

std::vector<int> Layout::internal_qubits(int slot) const {
    std::vector<int> q = slot_block(slot);
    q.pop_back();
    return q;
}

int Layout::side_qubit(int slot) const {
    return slot_base(slot) + config.qubits_per_particle - 1;
}

int Layout::dicke_ancilla(int i) const {
    if (i < 1 || i > config.total_slots())
        throw std::invalid_argument("dicke ancilla index out of range");
    return config.total_slots() * config.qubits_per_particle + (i - 1);
}

std::vector<int> Layout::dicke_ancillae() const {
    std::vector<int> q;
    for (int i = 1; i <= config.total_slots(); ++i) q.push_back(dicke_ancilla(i));
    return q;
}

std::vector<int> Layout::work_ancillae() const {
    std::vector<int> q;
    int base = config.total_slots() * (config.qubits_per_particle + 1);
    for (int i = 0; i < config.extra_work_ancillae; ++i) q.push_back(base + i);
    return q;
}

std::vector<int> Layout::all_ancillae() const {
    std::vector<int> q = dicke_ancillae();
    for (int w : work_ancillae()) q.push_back(w);
    return q;
}

std::vector<std::string> Layout::qubit_names() const {
    std::vector<std::string> names(total_qubits);
    for (int s = 1; s <= config.total_slots(); ++s) {
        std::string prefix = (s <= config.n_target)
                                 ? "t" + std::to_string(s)
                                 : "p" + std::to_string(s - config.n_target);
        for (int i = 0; i < config.qubits_per_particle - 1; ++i)
            names[slot_base(s) + i] = prefix + ".q" + std::to_string(i);
        names[side_qubit(s)] = prefix + ".side";
    }
    for (int i = 1; i <= config.total_slots(); ++i)
        names[dicke_ancilla(i)] = "a" + std::to_string(i);
    auto work = work_ancillae();
    for (size_t i = 0; i < work.size(); ++i) names[work[i]] = "w" + std::to_string(i + 1);
    return names;
}

Layout build_layout(const AntisymConfig& cfg) {
    cfg.validate();
    Layout l;
    l.config = cfg;
    l.total_qubits =
        cfg.total_slots() * cfg.qubits_per_particle + cfg.total_slots() + cfg.extra_work_ancillae;
    return l;
}

bool side_convention_check(const StateVector& state, const Layout& layout) {
    if (state.num_qubits() != layout.total_qubits)
        throw std::invalid_argument("side_convention_check: qubit count mismatch");
    std::uint64_t target_mask = 0, proj_mask = 0;
    for (int s = 1; s <= layout.config.n_target; ++s)
        target_mask |= std::uint64_t{1} << layout.side_qubit(s);
    for (int s = layout.config.n_target + 1; s <= layout.config.total_slots(); ++s)
        proj_mask |= std::uint64_t{1} << layout.side_qubit(s);
    for (std::uint64_t i = 0; i < state.size(); ++i) {
        if (std::abs(state[i]) <= 1e-12) continue;
        if ((i & target_mask) != 0 || (i & proj_mask) != proj_mask) return false;
    }
    return true;
}

std::string layout_to_json(const Layout& layout) {
    nlohmann::json slots = nlohmann::json::array();
    for (int s = 1; s <= layout.config.total_slots(); ++s) {
        slots.push_back({{"slot", s},
                         {"role", s <= layout.config.n_target ? "target" : "projectile"},
                         {"internal_qubits", layout.internal_qubits(s)},
                         {"side_qubit", layout.side_qubit(s)}});
    }
    nlohmann::json j{{"config",
                      {{"n_target", layout.config.n_target},
                       {"n_projectile", layout.config.n_projectile},
                       {"qubits_per_particle", layout.config.qubits_per_particle},
                       {"extra_work_ancillae", layout.config.extra_work_ancillae}}},
                     {"total_qubits", layout.total_qubits},
                     {"slots", slots},
                     {"dicke_ancillae", layout.dicke_ancillae()},
                     {"work_ancillae", layout.work_ancillae()}};
    return j.dump(2);
}

}  // namespace antisymq
