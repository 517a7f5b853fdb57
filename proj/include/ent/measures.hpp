#pragma once

#include "ent/qstate.hpp"

#include <optional>
#include <string>

// Entanglement quantifiers for pure qubit states. Several quantities
// admit more than one algebraic route; the cheapest is the default and
// the alternatives are exported for cross-checking.
namespace ent {

// Concurrence across the cut S1 | complement: sqrt(2 (1 - Tr rho_S1^2)).
double one_to_other_concurrence(const PureState& s, unsigned part_mask);

// Spin-flipped spectrum of a two-qubit density matrix, sorted descending.
// Computed as singular values of X^T (sy x sy) X with rho = X X^dagger
// and X from an eigendecomposition square root.
std::array<double, 4> wootters_lambdas(const DensityMatrix& rho);
double wootters_concurrence(const DensityMatrix& rho);
double concurrence_of_assistance(const DensityMatrix& rho);

// Cross-check oracle: the same lambdas as square roots of the
// eigenvalues of rho (sy x sy) rho* (sy x sy).
std::array<double, 4> wootters_lambdas_spectral(const DensityMatrix& rho);

// Residual tangle of three qubits, C^2(i|jk) - C^2(rho_ij) - C^2(rho_ik).
// Pivot-independent; `raw`, when non-null, receives the unclamped
// subtraction result.
double three_tangle(const PureState& s, int pivot = 0,
                    double* raw = nullptr);
// The same quantity as 4 |Det(a)| with Det the Cayley hyperdeterminant
// of the amplitude tensor. Polynomial in the amplitudes, so it stays
// accurate where the subtraction route cancels; used by the measure
// dispatch.
double three_tangle_hyperdet(const PureState& s);
// Alternative route: C_a^2(rho_jk) - C^2(rho_jk) for the pair opposite
// to no one (any pair gives tau for a pure state).
double three_tangle_assist(const PureState& s, unsigned pair_mask);

double perimeter(const PureState& s);
double perimeter_via_tangle(const PureState& s);

double concurrence_fill(const PureState& s);
double fill_via_tangle(const PureState& s);
double fill_via_assistance(const PureState& s);

// tau + 2 C^2(rho_jk), equal to P - 2 C^2(i|jk) for the opposite party i.
double g_quantity(const PureState& s, unsigned pair_mask);

double side_product_s(const PureState& s);
double nqubit_s(const PureState& s);

// Closed form C^2(rho_BC) = 4 (l2^2 l3^2 + l1^2 l4^2
//                              - 2 l1 l2 l3 l4 cos phi).
double acin_cbc_squared(const AcinParams& p);

enum class MeasureTag {
    one_to_other,
    fill,
    perimeter,
    tangle,
    wootters,
    assistance,
    g_quantity,
    side_product_s,
    nqubit_s,
};

// A base quantifier plus the exponent applied to it, with the context
// (bipartition / pair) baked in where the base needs one.
struct MeasureId {
    MeasureTag tag = MeasureTag::fill;
    double exponent = 1.0;
    // bipartition for one_to_other, pair for wootters/assistance/g
    std::optional<unsigned> context;

    std::string str() const;
};

// Parses the CLI measure grammar: "fill", "fill^1/2", "fill^1/4",
// "perimeter", "tangle", "s", "nqubit-s", "g:BC", "c:BC", "c2:BC",
// "ca:BC", "concurrence:A|BC".
MeasureId parse_measure(const std::string& id);

double evaluate(const MeasureId& m, const PureState& s);

int party_from_char(char c);
unsigned parties_from_string(const std::string& names);
std::string parties_to_string(unsigned mask, int n);

}  // namespace ent
