#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "antisymq/state.hpp"

using namespace antisymq;

namespace {

StateVector random_state(int nq, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::normal_distribution<double> gauss(0.0, 1.0);
    std::vector<Complex> amps(std::uint64_t{1} << nq);
    for (auto& a : amps) a = Complex{gauss(rng), gauss(rng)};
    StateVector s(nq, std::move(amps));
    s.normalize();
    return s;
}

}  // namespace

TEST_CASE("X flips a basis state") {
    StateVector s(1);
    s.apply_x(0);
    CHECK(std::abs(s[1] - Complex{1, 0}) < 1e-14);
    CHECK(std::abs(s[0]) < 1e-14);
}

TEST_CASE("X leaves |+> unchanged") {
    StateVector s(1);
    s.apply_h(0);
    StateVector plus = s;
    s.apply_x(0);
    CHECK(fidelity(s, plus) == doctest::Approx(1.0).epsilon(1e-14));
}

TEST_CASE("X twice is the identity on random states") {
    StateVector s = random_state(3, 7);
    StateVector orig = s;
    s.apply_x(1);
    s.apply_x(1);
    CHECK(fidelity(s, orig) == doctest::Approx(1.0).epsilon(1e-14));
}

TEST_CASE("Z negates the bit-1 subspace") {
    StateVector s = StateVector::basis_state(1, 1);
    s.apply_z(0);
    CHECK(std::abs(s[1] + Complex{1, 0}) < 1e-14);

    StateVector t(2, {Complex{0, 0}, Complex{1 / std::sqrt(2.0), 0}, Complex{0, 0},
                      Complex{1 / std::sqrt(2.0), 0}});
    t.apply_z(1);
    CHECK(t[1].real() == doctest::Approx(1 / std::sqrt(2.0)));
    CHECK(t[3].real() == doctest::Approx(-1 / std::sqrt(2.0)));
}

TEST_CASE("mcx truth table with closed controls") {
    StateVector s = StateVector::basis_state(3, 0b011);
    std::vector<Control> cc{{0, Polarity::Closed}, {1, Polarity::Closed}};
    s.apply_mcx(cc, 2);
    CHECK(std::abs(s[0b111] - Complex{1, 0}) < 1e-14);

    StateVector t = StateVector::basis_state(3, 0b010);
    t.apply_mcx(cc, 2);
    CHECK(std::abs(t[0b010] - Complex{1, 0}) < 1e-14);
}

TEST_CASE("open-control polarity") {
    std::vector<Control> open0{{0, Polarity::Open}};
    StateVector s = StateVector::basis_state(3, 0b001);
    s.apply_mcx(open0, 1);
    CHECK(std::abs(s[0b001] - Complex{1, 0}) < 1e-14);

    StateVector t = StateVector::basis_state(3, 0b000);
    t.apply_mcx(open0, 1);
    CHECK(std::abs(t[0b010] - Complex{1, 0}) < 1e-14);
}

TEST_CASE("block swap exchanges rank-wise") {
    // width 1, no controls: plain SWAP
    StateVector s = StateVector::basis_state(2, 0b01);
    s.apply_cswap_block({}, std::vector<int>{0}, std::vector<int>{1});
    CHECK(std::abs(s[0b10] - Complex{1, 0}) < 1e-14);

    // width 2 with a satisfied control: qubits 0,1 = block a holding 10,
    // qubits 2,3 = block b holding 01, qubit 4 the control
    StateVector t = StateVector::basis_state(5, (0b10) | (0b01 << 2) | (1u << 4));
    std::vector<Control> tctl{{4, Polarity::Closed}};
    t.apply_cswap_block(tctl, std::vector<int>{0, 1}, std::vector<int>{2, 3});
    std::uint64_t expect = (0b01) | (0b10 << 2) | (1ull << 4);
    CHECK(std::abs(t[expect] - Complex{1, 0}) < 1e-14);
}

TEST_CASE("block swap is an involution") {
    StateVector s = random_state(5, 99);
    StateVector orig = s;
    std::vector<Control> ctl{{4, Polarity::Closed}};
    std::vector<int> a{0, 1}, b{2, 3};
    s.apply_cswap_block(ctl, a, b);
    s.apply_cswap_block(ctl, a, b);
    CHECK(fidelity(s, orig) == doctest::Approx(1.0).epsilon(1e-14));
}

TEST_CASE("control locality: unsatisfied amplitudes are untouched") {
    StateVector s = random_state(4, 5);
    StateVector before = s;
    std::vector<Control> ctl{{3, Polarity::Closed}};
    s.apply_mcx(ctl, 0);
    for (std::uint64_t i = 0; i < s.size(); ++i)
        if (!(i & 0b1000)) CHECK(s[i] == before[i]);
}

TEST_CASE("fidelity values") {
    StateVector a = random_state(3, 1);
    CHECK(fidelity(a, a) == doctest::Approx(1.0));
    CHECK(fidelity(StateVector::basis_state(2, 1), StateVector::basis_state(2, 2)) ==
          doctest::Approx(0.0));
    StateVector plus(1);
    plus.apply_h(0);
    CHECK(fidelity(plus, StateVector(1)) == doctest::Approx(0.5));
}

TEST_CASE("ancilla ground weight") {
    StateVector s(3);  // |000>
    std::vector<int> anc{1, 2};
    CHECK(ancilla_ground_weight(s, anc) == doctest::Approx(1.0));
    s.apply_x(2);
    CHECK(ancilla_ground_weight(s, anc) == doctest::Approx(0.0));
    StateVector t(2);
    t.apply_h(1);
    std::vector<int> one{1};
    CHECK(ancilla_ground_weight(t, one) == doctest::Approx(0.5));
}

TEST_CASE("norm preserved over 100 random gates") {
    StateVector s = random_state(5, 42);
    std::mt19937_64 rng(43);
    std::uniform_int_distribution<int> qubit(0, 4), kind(0, 4);
    for (int step = 0; step < 100; ++step) {
        int q = qubit(rng);
        switch (kind(rng)) {
            case 0: s.apply_x(q); break;
            case 1: s.apply_z(q); break;
            case 2: s.apply_h(q); break;
            case 3: {
                int c = qubit(rng);
                if (c == q) c = (c + 1) % 5;
                std::vector<Control> ctl{{c, Polarity::Closed}};
                s.apply_mcx(ctl, q);
                break;
            }
            default: {
                int b = qubit(rng);
                if (b == q) b = (b + 1) % 5;
                std::vector<int> ba{q}, bb{b};
                s.apply_cswap_block({}, ba, bb);
                break;
            }
        }
    }
    CHECK(s.norm_squared() == doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("disjoint gates commute") {
    StateVector s1 = random_state(4, 11);
    StateVector s2 = s1;
    std::vector<Control> c0{{0, Polarity::Closed}};
    s1.apply_mcx(c0, 1);
    s1.apply_h(3);
    s2.apply_h(3);
    s2.apply_mcx(c0, 1);
    for (std::uint64_t i = 0; i < s1.size(); ++i)
        CHECK(std::abs(s1[i] - s2[i]) < 1e-14);
}

TEST_CASE("capacity guard") {
    CHECK_THROWS(StateVector(StateVector::max_qubits() + 1));
    CHECK_THROWS_AS(StateVector(3).apply_x(5), std::invalid_argument);
}

TEST_CASE("projection drops zeroed qubits") {
    StateVector s(3);
    s.apply_h(0);  // (|000>+|001>)/sqrt2
    std::vector<int> anc{1, 2};
    StateVector p = project_qubits_zero(s, anc);
    CHECK(p.num_qubits() == 1);
    CHECK(p[0].real() == doctest::Approx(1 / std::sqrt(2.0)));
    CHECK(p[1].real() == doctest::Approx(1 / std::sqrt(2.0)));
}
