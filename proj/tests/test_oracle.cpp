#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "antisymq/oracle.hpp"

using namespace antisymq;

namespace {

SubsystemState single_det(std::vector<int> orbitals, int side) {
    SlaterSpec spec{std::move(orbitals), side};
    SubsystemState s;
    s.side = side;
    s.particle_count = static_cast<int>(spec.orbital_indices.size());
    s.terms = {{Complex{1, 0}, spec}};
    return s;
}

}  // namespace

TEST_CASE("single-particle slater state is a basis state") {
    AntisymConfig cfg{1, 1, 3, 0};
    StateVector s = slater_state({{3}, 0}, cfg);
    CHECK(std::abs(s[3] - Complex{1, 0}) < 1e-14);
}

TEST_CASE("two-fermion determinant") {
    AntisymConfig cfg{2, 1, 2, 0};
    StateVector s = slater_state({{0, 1}, 0}, cfg);
    // slots of width 2: |orb0, orb1> - |orb1, orb0>, internal codes 0 and 1
    std::uint64_t idx01 = 0 | (1ull << 2);
    std::uint64_t idx10 = 1 | (0ull << 2);
    CHECK(s[idx01].real() == doctest::Approx(1 / std::sqrt(2.0)));
    CHECK(s[idx10].real() == doctest::Approx(-1 / std::sqrt(2.0)));
    CHECK(antisymmetry_residual(s, 2, 2) <= 1e-12);
}

TEST_CASE("three-fermion determinant flips sign under slot swap") {
    AntisymConfig cfg{3, 1, 3, 0};
    StateVector s = slater_state({{0, 1, 2}, 0}, cfg);
    int support = 0;
    for (std::uint64_t i = 0; i < s.size(); ++i)
        if (std::abs(s[i]) > 1e-14) {
            ++support;
            CHECK(std::abs(std::abs(s[i].real()) - 1 / std::sqrt(6.0)) < 1e-12);
        }
    CHECK(support == 6);
    CHECK(antisymmetry_residual(s, 3, 3) <= 1e-12);
}

TEST_CASE("residual values for known states") {
    AntisymConfig cfg{2, 1, 2, 0};
    // symmetric state over two width-1 "slots" is maximally non-antisymmetric
    StateVector sym(2, {Complex{0, 0}, Complex{1 / std::sqrt(2.0), 0},
                        Complex{1 / std::sqrt(2.0), 0}, Complex{0, 0}});
    CHECK(antisymmetry_residual(sym, 2, 1) == doctest::Approx(2.0));
    StateVector prod = StateVector::basis_state(2, 0b10);  // |01> product
    CHECK(antisymmetry_residual(prod, 2, 1) == doctest::Approx(std::sqrt(2.0)));
}

TEST_CASE("1+1 antisymmetrization by hand") {
    AntisymConfig cfg{1, 1, 2, 0};
    StateVector out = oracle_antisymmetrize(single_det({0}, 0), single_det({1}, 1), cfg);
    // codes: target = 0 (side 0, orb 0), projectile = 3 (side 1, orb 1)
    std::uint64_t tp = 0 | (3ull << 2), pt = 3 | (0ull << 2);
    CHECK(out[tp].real() == doctest::Approx(1 / std::sqrt(2.0)));
    CHECK(out[pt].real() == doctest::Approx(-1 / std::sqrt(2.0)));
    CHECK(std::abs(std::sqrt(out.norm_squared()) - 1.0) < 1e-12);
}

TEST_CASE("2+1 equals the full three-particle determinant") {
    AntisymConfig cfg{2, 1, 2, 0};
    StateVector coset = oracle_antisymmetrize(single_det({0, 1}, 0), single_det({0}, 1), cfg);
    StateVector full = oracle_full_permutation_check({{0, 1}, 0}, {{0}, 1}, cfg);
    CHECK(fidelity(coset, full) >= 1.0 - 1e-12);
}

TEST_CASE("double-oracle agreement over small configs") {
    for (int nt = 1; nt <= 3; ++nt) {
        for (int np = 1; np <= nt; ++np) {
            if (nt + np > 5) continue;
            for (int n = 2; n <= 3; ++n) {
                if ((1 << (n - 1)) < nt) continue;
                CAPTURE(nt);
                CAPTURE(np);
                CAPTURE(n);
                AntisymConfig cfg{nt, np, n, 0};
                std::vector<int> torb, porb;
                for (int i = 0; i < nt; ++i) torb.push_back(i);
                for (int i = 0; i < np; ++i) porb.push_back(i);
                StateVector coset =
                    oracle_antisymmetrize(single_det(torb, 0), single_det(porb, 1), cfg);
                StateVector full = oracle_full_permutation_check({torb, 0}, {porb, 1}, cfg);
                CHECK(fidelity(coset, full) >= 1.0 - 1e-12);
                CHECK(std::abs(std::sqrt(coset.norm_squared()) - 1.0) < 1e-12);
                CHECK(antisymmetry_residual(coset, nt + np, n) <= 1e-11);
            }
        }
    }
}

TEST_CASE("oracle output signs: identity coset term is positive") {
    AntisymConfig cfg{2, 2, 2, 0};
    StateVector out = oracle_antisymmetrize(single_det({0, 1}, 0), single_det({0, 1}, 1), cfg);
    // identity arrangement: slots 1,2 = target codes 0,1; slots 3,4 = proj codes 2,3
    std::uint64_t idx = 0 | (1ull << 2) | (2ull << 4) | (3ull << 6);
    CHECK(out[idx].real() > 0.0);
    CHECK(std::abs(std::sqrt(out.norm_squared()) - 1.0) < 1e-12);
}

TEST_CASE("linearity over superposed determinants") {
    AntisymConfig cfg{2, 1, 3, 0};
    Complex alpha{0.6, 0.0}, beta{0.0, 0.8};
    SubsystemState target;
    target.side = 0;
    target.particle_count = 2;
    target.terms = {{alpha, {{0, 1}, 0}}, {beta, {{2, 3}, 0}}};
    SubsystemState proj = single_det({0}, 1);

    StateVector combined = oracle_antisymmetrize(target, proj, cfg);
    StateVector part1 = oracle_antisymmetrize(single_det({0, 1}, 0), proj, cfg);
    StateVector part2 = oracle_antisymmetrize(single_det({2, 3}, 0), proj, cfg);
    StateVector manual(combined.num_qubits());
    manual[0] = Complex{0, 0};
    for (std::uint64_t i = 0; i < manual.size(); ++i)
        manual[i] = alpha * part1[i] + beta * part2[i];
    CHECK(fidelity(combined, manual) >= 1.0 - 1e-12);
}

TEST_CASE("input validation") {
    AntisymConfig cfg{2, 1, 2, 0};
    CHECK_THROWS(slater_state({{0, 0}, 0}, cfg));  // duplicate orbital
    CHECK_THROWS(slater_state({{5}, 0}, cfg));     // orbital out of range
    CHECK_THROWS(oracle_antisymmetrize(single_det({0, 1}, 0), single_det({0}, 0), cfg));
}

TEST_CASE("subsystem json round trip and normalization") {
    AntisymConfig cfg{2, 1, 3, 0};
    std::string text = R"({"side":0,"terms":[
        {"coeff":[2.0,0.0],"orbitals":[0,1]},
        {"coeff":[0.0,2.0],"orbitals":[1,2]}]})";
    SubsystemState sub = subsystem_from_json(text, cfg, 0);
    double norm_sq = 0.0;
    for (const auto& [coeff, spec] : sub.terms) norm_sq += std::norm(coeff);
    CHECK(norm_sq == doctest::Approx(1.0));
    SubsystemState again = subsystem_from_json(subsystem_to_json(sub), cfg, 0);
    CHECK(again.terms.size() == 2);
}

TEST_CASE("random subsystems are valid and normalized") {
    AntisymConfig cfg{3, 2, 3, 0};
    std::mt19937_64 rng(7);
    for (int trial = 0; trial < 10; ++trial) {
        SubsystemState t = random_subsystem(rng, 3, 0, cfg);
        StateVector s = subsystem_state(t, cfg);
        CHECK(std::abs(std::sqrt(s.norm_squared()) - 1.0) < 1e-12);
        CHECK(antisymmetry_residual(s, 3, 3) <= 1e-11);
    }
}
