#include "antisymq/dicke.hpp"

#include <cmath>

namespace antisymq {

void DickeSpec::validate() const {
    if (m < 1 || k < 1 || k > m)
        throw std::invalid_argument("DickeSpec: need 1 <= k <= m");
}

namespace {

double binomial(int n, int r) {
    if (r < 0 || r > n) return 0.0;
    double v = 1.0;
    for (int i = 1; i <= r; ++i) v = v * (n - r + i) / i;
    return v;
}

int popcount64(std::uint64_t x) { return static_cast<int>(__builtin_popcountll(x)); }

}  // namespace

StateVector dicke_amplitudes(const DickeSpec& spec) {
    spec.validate();
    std::vector<Complex> amps(std::uint64_t{1} << spec.m, Complex{0.0, 0.0});
    double amp = 1.0 / std::sqrt(binomial(spec.m, spec.k));
    for (std::uint64_t i = 0; i < amps.size(); ++i)
        if (popcount64(i) == spec.k) amps[i] = Complex{amp, 0.0};
    return StateVector(spec.m, std::move(amps));
}

Circuit dicke_circuit(const DickeSpec& spec) {
    spec.validate();
    Circuit c;
    c.num_qubits = spec.m;
    for (int q = spec.m - spec.k; q < spec.m; ++q) c.append(make_x(q, "load"));
    // Full weight: |1...1> needs no splitting.
    if (spec.k == spec.m) return c;
    // Peel qubits from the top: each stage moves the boundary excitation into a
    // superposition of staying put or shifting left, with binomial weights.
    for (int n = spec.m; n >= 2; --n) {
        int lmax = std::min(spec.k, n - 1);
        for (int t = 1; t <= lmax; ++t) {
            int top = n - 1;        // highest qubit of this stage (0-based)
            int lo = n - t - 1;     // receives the shifted excitation
            double angle = -2.0 * std::acos(std::sqrt(static_cast<double>(t) / n));
            c.append(make_mcx({{top, Polarity::Closed}}, lo));
            std::vector<Control> ctrls{{lo, Polarity::Closed}};
            if (t > 1) ctrls.push_back({n - t, Polarity::Closed});
            c.append(make_ry(top, angle, std::move(ctrls)));
            c.append(make_mcx({{top, Polarity::Closed}}, lo));
        }
    }
    return c;
}

}  // namespace antisymq
