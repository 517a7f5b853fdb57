#pragma once

#include <Eigen/Dense>
#include <array>
#include <complex>
#include <cstdint>
#include <string>

// Pure qubit states, canonical parametrizations, partial traces and
// local unitary action. Party A is the most significant bit of the
// amplitude index, so for n=3 the index of |abc> is 4a + 2b + c.
namespace ent {

using cd = std::complex<double>;

struct PureState {
    int n = 0;
    Eigen::VectorXcd amp;
    // set when the input vector needed renormalization beyond 1e-9
    bool renormalized = false;

    int dim() const { return 1 << n; }
};

// Coefficients of the five-term one-phase canonical form
// l0|000> + l1 e^{i phi}|100> + l2|101> + l3|110> + l4|111>.
struct AcinParams {
    std::array<double, 5> l{};
    double phi = 0.0;

    double norm_sq() const;
};

// Trigonometric chart for the canonical coefficients:
// l_j = cos(theta_{j+1}) * prod_{i<=j} sin(theta_i) for j <= 3,
// l_4 = prod_{i=1..4} sin(theta_i). Normalized by construction.
struct ThetaParams {
    std::array<double, 4> theta{};
    double phi = 0.0;
};

struct DensityMatrix {
    Eigen::MatrixXcd m;

    int dim() const { return static_cast<int>(m.rows()); }
};

enum class NamedState { ghz3, w3, product3, bisep_a, ghz4, product_n };

PureState make_pure_state(int n, const Eigen::VectorXcd& amp);
PureState acin_state(const AcinParams& p);
AcinParams acin_from_thetas(const ThetaParams& t);
PureState named_state(NamedState name);
NamedState named_state_from_string(const std::string& name);

// Partial trace onto the parties in `keep` (bitmask, bit 0 = party A).
// Spec'd for |keep| in {1, 2}; keep_general handles any proper subset.
DensityMatrix reduced_density(const PureState& s, unsigned keep_mask);
Eigen::MatrixXcd partial_trace(const PureState& s, unsigned keep_mask);

PureState random_pure_state(std::uint64_t seed, int n);
PureState apply_local_unitary(const PureState& s, int party,
                              const Eigen::Matrix2cd& u);

Eigen::Matrix2cd random_unitary_2x2(std::uint64_t seed);

int popcount_mask(unsigned mask);

}  // namespace ent
