#include "antisymq/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <set>

#include <json.hpp>

#include "antisymq/schedule.hpp"

namespace antisymq {

namespace {

int permutation_parity(const std::vector<int>& perm) {
    int inversions = 0;
    for (size_t i = 0; i < perm.size(); ++i)
        for (size_t j = i + 1; j < perm.size(); ++j)
            if (perm[i] > perm[j]) ++inversions;
    return inversions % 2;
}

double factorial(int n) {
    double f = 1.0;
    for (int i = 2; i <= n; ++i) f *= i;
    return f;
}

}  // namespace

void SlaterSpec::validate(const AntisymConfig& cfg) const {
    if (side != 0 && side != 1) throw std::invalid_argument("SlaterSpec: side must be 0 or 1");
    if (orbital_indices.empty()) throw std::invalid_argument("SlaterSpec: no orbitals");
    std::set<int> seen;
    long long cap = 1LL << (cfg.qubits_per_particle - 1);
    for (int o : orbital_indices) {
        if (o < 0 || o >= cap)
            throw std::invalid_argument("SlaterSpec: orbital index out of range");
        if (!seen.insert(o).second)
            throw std::invalid_argument("SlaterSpec: duplicate orbital (Pauli exclusion)");
    }
}

void SubsystemState::validate(const AntisymConfig& cfg) const {
    if (terms.empty()) throw std::invalid_argument("SubsystemState: no terms");
    std::set<std::vector<int>> seen;
    for (const auto& [coeff, spec] : terms) {
        spec.validate(cfg);
        if (spec.side != side) throw std::invalid_argument("SubsystemState: mixed sides");
        if (static_cast<int>(spec.orbital_indices.size()) != particle_count)
            throw std::invalid_argument("SubsystemState: term particle count mismatch");
        std::vector<int> sorted = spec.orbital_indices;
        std::sort(sorted.begin(), sorted.end());
        if (!seen.insert(sorted).second)
            throw std::invalid_argument("SubsystemState: duplicate determinant term");
    }
}

std::uint64_t particle_code(int orbital, int side, const AntisymConfig& cfg) {
    return static_cast<std::uint64_t>(orbital) |
           (static_cast<std::uint64_t>(side) << (cfg.qubits_per_particle - 1));
}

namespace {

// Signed sum over all orderings of the given single-particle codes, each slot
// an n-qubit block, slot r holding code[pi(r)].
StateVector determinant_state(const std::vector<std::uint64_t>& codes,
                              const AntisymConfig& cfg) {
    int p = static_cast<int>(codes.size());
    int n = cfg.qubits_per_particle;
    StateVector out(p * n);
    out[0] = Complex{0.0, 0.0};
    std::vector<int> perm(p);
    std::iota(perm.begin(), perm.end(), 0);
    double norm = 1.0 / std::sqrt(factorial(p));
    do {
        std::uint64_t idx = 0;
        for (int r = 0; r < p; ++r) idx |= codes[perm[r]] << (r * n);
        double sign = permutation_parity(perm) ? -1.0 : 1.0;
        out[idx] += Complex{sign * norm, 0.0};
    } while (std::next_permutation(perm.begin(), perm.end()));
    return out;
}

}  // namespace

StateVector slater_state(const SlaterSpec& spec, const AntisymConfig& cfg) {
    spec.validate(cfg);
    std::vector<std::uint64_t> codes;
    for (int o : spec.orbital_indices) codes.push_back(particle_code(o, spec.side, cfg));
    return determinant_state(codes, cfg);
}

StateVector subsystem_state(const SubsystemState& sub, const AntisymConfig& cfg) {
    sub.validate(cfg);
    StateVector acc(sub.particle_count * cfg.qubits_per_particle);
    acc[0] = Complex{0.0, 0.0};
    for (const auto& [coeff, spec] : sub.terms) {
        StateVector det = slater_state(spec, cfg);
        for (std::uint64_t i = 0; i < acc.size(); ++i) acc[i] += coeff * det[i];
    }
    return acc;
}

double antisymmetry_residual(const StateVector& state, int num_slots, int block_width) {
    if (state.num_qubits() != num_slots * block_width)
        throw std::invalid_argument("antisymmetry_residual: size mismatch");
    double worst = 0.0;
    for (int i = 0; i < num_slots; ++i) {
        for (int j = i + 1; j < num_slots; ++j) {
            StateVector swapped = state;
            std::vector<int> block_a, block_b;
            for (int r = 0; r < block_width; ++r) {
                block_a.push_back(i * block_width + r);
                block_b.push_back(j * block_width + r);
            }
            swapped.apply_cswap_block({}, block_a, block_b);
            double norm_sq = 0.0;
            for (std::uint64_t x = 0; x < state.size(); ++x)
                norm_sq += std::norm(swapped[x] + state[x]);
            worst = std::max(worst, std::sqrt(norm_sq));
        }
    }
    return worst;
}

StateVector oracle_antisymmetrize(const SubsystemState& target,
                                  const SubsystemState& projectile,
                                  const AntisymConfig& cfg) {
    cfg.validate();
    target.validate(cfg);
    projectile.validate(cfg);
    if (target.side != 0 || projectile.side != 1)
        throw std::invalid_argument("oracle_antisymmetrize: sides must be 0 (target) and 1 (projectile)");
    if (target.particle_count != cfg.n_target || projectile.particle_count != cfg.n_projectile)
        throw std::invalid_argument("oracle_antisymmetrize: particle counts disagree with config");

    const int n = cfg.qubits_per_particle, m = cfg.total_slots();
    StateVector product = subsystem_state(target, cfg).tensor(subsystem_state(projectile, cfg));

    double weight = 1.0 / std::sqrt(static_cast<double>(n_perm_binomial(cfg.n_target, cfg.n_projectile)));
    StateVector out(m * n);
    out[0] = Complex{0.0, 0.0};
    const std::uint64_t slot_mask = (std::uint64_t{1} << n) - 1;

    for (std::uint64_t b : weight_patterns(m, cfg.n_projectile)) {
        // Canonical matching: sorted flagged targets paired with sorted
        // unflagged projectile slots; k disjoint transpositions.
        std::vector<int> need, give;
        for (int s = 1; s <= cfg.n_target; ++s)
            if ((b >> (s - 1)) & 1) need.push_back(s);
        for (int s = cfg.n_target + 1; s <= m; ++s)
            if (!((b >> (s - 1)) & 1)) give.push_back(s);
        std::vector<int> source(m);  // slot s draws its content from source[s-1]
        std::iota(source.begin(), source.end(), 1);
        for (size_t r = 0; r < need.size(); ++r)
            std::swap(source[need[r] - 1], source[give[r] - 1]);
        double sign = (need.size() % 2) ? -1.0 : 1.0;

        for (std::uint64_t idx = 0; idx < product.size(); ++idx) {
            if (product[idx] == Complex{0.0, 0.0}) continue;
            std::uint64_t pidx = 0;
            for (int s = 1; s <= m; ++s) {
                std::uint64_t v = (idx >> ((source[s - 1] - 1) * n)) & slot_mask;
                pidx |= v << ((s - 1) * n);
            }
            out[pidx] += Complex{sign * weight, 0.0} * product[idx];
        }
    }
    return out;
}

StateVector oracle_full_permutation_check(const SlaterSpec& target,
                                          const SlaterSpec& projectile,
                                          const AntisymConfig& cfg) {
    cfg.validate();
    target.validate(cfg);
    projectile.validate(cfg);
    if (target.side != 0 || projectile.side != 1)
        throw std::invalid_argument("oracle_full_permutation_check: wrong sides");
    std::vector<std::uint64_t> codes;
    for (int o : target.orbital_indices) codes.push_back(particle_code(o, 0, cfg));
    for (int o : projectile.orbital_indices) codes.push_back(particle_code(o, 1, cfg));
    return determinant_state(codes, cfg);
}

SubsystemState subsystem_from_json(const std::string& text, const AntisymConfig& cfg,
                                   int expected_side) {
    nlohmann::json j = nlohmann::json::parse(text);
    SubsystemState sub;
    sub.side = j.at("side").get<int>();
    if (sub.side != expected_side)
        throw std::invalid_argument("subsystem_from_json: side does not match its role");
    for (const auto& jt : j.at("terms")) {
        auto c = jt.at("coeff");
        Complex coeff{c.at(0).get<double>(), c.at(1).get<double>()};
        SlaterSpec spec;
        spec.orbital_indices = jt.at("orbitals").get<std::vector<int>>();
        spec.side = sub.side;
        sub.terms.push_back({coeff, spec});
    }
    if (sub.terms.empty()) throw std::invalid_argument("subsystem_from_json: no terms");
    sub.particle_count = static_cast<int>(sub.terms.front().second.orbital_indices.size());
    sub.validate(cfg);
    // Terms with distinct orbital sets are orthonormal, so normalizing the
    // coefficient vector normalizes the state.
    double norm_sq = 0.0;
    for (const auto& [coeff, spec] : sub.terms) norm_sq += std::norm(coeff);
    if (norm_sq <= 0.0) throw std::invalid_argument("subsystem_from_json: zero state");
    double inv = 1.0 / std::sqrt(norm_sq);
    for (auto& [coeff, spec] : sub.terms) coeff *= inv;
    return sub;
}

std::string subsystem_to_json(const SubsystemState& sub) {
    nlohmann::json terms = nlohmann::json::array();
    for (const auto& [coeff, spec] : sub.terms)
        terms.push_back({{"coeff", {coeff.real(), coeff.imag()}},
                         {"orbitals", spec.orbital_indices}});
    return nlohmann::json{{"side", sub.side}, {"terms", terms}}.dump(2);
}

SubsystemState random_subsystem(std::mt19937_64& rng, int particle_count, int side,
                                const AntisymConfig& cfg) {
    int orbital_space = 1 << (cfg.qubits_per_particle - 1);
    // Count available distinct determinants without overflowing for small spaces.
    long long max_terms = 1;
    {
        long long combos = 1;
        for (int i = 0; i < particle_count; ++i)
            combos = combos * (orbital_space - i) / (i + 1);
        max_terms = std::min<long long>(3, combos);
    }
    std::uniform_int_distribution<int> nterms_dist(1, static_cast<int>(max_terms));
    int nterms = nterms_dist(rng);

    SubsystemState sub;
    sub.side = side;
    sub.particle_count = particle_count;
    std::set<std::vector<int>> used;
    std::normal_distribution<double> gauss(0.0, 1.0);
    while (static_cast<int>(sub.terms.size()) < nterms) {
        std::vector<int> pool(orbital_space);
        std::iota(pool.begin(), pool.end(), 0);
        std::shuffle(pool.begin(), pool.end(), rng);
        std::vector<int> orbitals(pool.begin(), pool.begin() + particle_count);
        std::vector<int> key = orbitals;
        std::sort(key.begin(), key.end());
        if (!used.insert(key).second) continue;
        SlaterSpec spec;
        spec.orbital_indices = key;
        spec.side = side;
        sub.terms.push_back({Complex{gauss(rng), gauss(rng)}, spec});
    }
    double norm_sq = 0.0;
    for (const auto& [coeff, spec] : sub.terms) norm_sq += std::norm(coeff);
    double inv = 1.0 / std::sqrt(norm_sq);
    for (auto& [coeff, spec] : sub.terms) coeff *= inv;
    return sub;
}

}  // namespace antisymq
