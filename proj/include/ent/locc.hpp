#pragma once

#include "ent/measures.hpp"
#include "ent/qstate.hpp"

#include <optional>
#include <utility>
#include <vector>

// Binary local POVMs and the average-gap functional behind the
// LOCC-monotonicity inequality: gap = M(psi) - sum_k p_k M(psi_k).
// Positive gap is monotone-consistent, negative certifies a violation.
namespace ent {

struct PovmAngles {
    double varphi1 = 0.0;
    double varphi2 = 0.0;
    double psi1 = 0.0;
    double psi2 = 0.0;
};

struct BinaryPovm {
    Eigen::Matrix2cd x1;
    Eigen::Matrix2cd x2;

    double completeness_residual() const;
};

struct Outcome {
    double probability = 0.0;
    std::optional<PureState> state;  // empty when probability < 1e-12
};

struct GapReport {
    MeasureId measure;
    int party = 0;
    double value_before = 0.0;
    std::vector<std::pair<double, double>> outcomes;  // (p, value_after)
    double gap = 0.0;
    int degenerate_outcomes = 0;
};

// X_i = D_i V with D1 = diag(sin varphi1, sin varphi2),
// D2 = diag(cos varphi1, cos varphi2) and V a unitary built from psi1,
// psi2. Completeness holds identically.
BinaryPovm povm_from_angles(const PovmAngles& a);

std::vector<Outcome> apply_binary_povm(const PureState& s,
                                       const BinaryPovm& povm, int party);

GapReport average_gap(const MeasureId& m, const PureState& s,
                      const BinaryPovm& povm, int party);

// Closed form for the tangle gap:
// tau / (p1 (1 - p1)) * (p1 - sin^2 varphi1)(sin^2 varphi2 - p1).
double tau_gap_closed_form(const PureState& s, const PovmAngles& a,
                           int party);

// Diagonal POVM X1 = diag(x1, y1) on a canonical-form state: returns
// (squared-concurrence gap, plain-concurrence gap) for rho_BC via the
// closed forms. The first is always <= 0, the second identically 0.
std::pair<double, double> diagonal_squared_concurrence_gap(
    const AcinParams& p, double x1, double y1);

BinaryPovm random_povm(std::uint64_t seed, bool with_left_unitaries = false);
PovmAngles random_povm_angles(std::uint64_t seed);

// Max over outcomes of |tau(psi_k) - tau(psi) |det X_k|^2 / p_k^2|.
double det_transformation_check(const PureState& s, const BinaryPovm& povm,
                                int party);

}  // namespace ent
