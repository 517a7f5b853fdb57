#include "ent/locc.hpp"

#include <cmath>
#include <random>
#include <stdexcept>

namespace ent {

namespace {

constexpr double kDegenerateProb = 1e-12;

// Applies a (not necessarily unitary) 2x2 operator to one party and
// returns the unnormalized result.
Eigen::VectorXcd apply_operator(const PureState& s, int party,
                                const Eigen::Matrix2cd& op) {
    const int bit = s.n - 1 - party;
    Eigen::VectorXcd out(s.dim());
    for (int i = 0; i < s.dim(); ++i) {
        const int b = (i >> bit) & 1;
        const int i0 = i & ~(1 << bit);
        const int i1 = i0 | (1 << bit);
        out(i) = op(b, 0) * s.amp(i0) + op(b, 1) * s.amp(i1);
    }
    return out;
}

}  // namespace

double BinaryPovm::completeness_residual() const {
    const Eigen::Matrix2cd sum = x1.adjoint() * x1 + x2.adjoint() * x2;
    return (sum - Eigen::Matrix2cd::Identity()).cwiseAbs().maxCoeff();
}

BinaryPovm povm_from_angles(const PovmAngles& a) {
    Eigen::Matrix2cd v;
    const cd e2 = std::exp(cd(0.0, a.psi2));
    v << std::cos(a.psi1), -e2 * std::sin(a.psi1),  //
        std::sin(a.psi1), e2 * std::cos(a.psi1);
    BinaryPovm povm;
    povm.x1 = Eigen::Vector2d(std::sin(a.varphi1), std::sin(a.varphi2))
                  .asDiagonal()
                  .toDenseMatrix()
                  .cast<cd>() *
              v;
    povm.x2 = Eigen::Vector2d(std::cos(a.varphi1), std::cos(a.varphi2))
                  .asDiagonal()
                  .toDenseMatrix()
                  .cast<cd>() *
              v;
    return povm;
}

std::vector<Outcome> apply_binary_povm(const PureState& s,
                                       const BinaryPovm& povm, int party) {
    if (party < 0 || party >= s.n) throw std::invalid_argument("bad party");
    if (povm.completeness_residual() > 1e-9)
        throw std::invalid_argument("POVM is not complete");
    std::vector<Outcome> outcomes;
    for (const auto* op : {&povm.x1, &povm.x2}) {
        Eigen::VectorXcd post = apply_operator(s, party, *op);
        Outcome o;
        o.probability = post.squaredNorm();
        if (o.probability >= kDegenerateProb) {
            PureState ps;
            ps.n = s.n;
            ps.amp = post / std::sqrt(o.probability);
            o.state = std::move(ps);
        }
        outcomes.push_back(std::move(o));
    }
    return outcomes;
}

GapReport average_gap(const MeasureId& m, const PureState& s,
                      const BinaryPovm& povm, int party) {
    GapReport rep;
    rep.measure = m;
    rep.party = party;
    rep.value_before = evaluate(m, s);
    double avg = 0.0;
    for (const Outcome& o : apply_binary_povm(s, povm, party)) {
        if (!o.state) {
            ++rep.degenerate_outcomes;
            continue;
        }
        const double v = evaluate(m, *o.state);
        rep.outcomes.emplace_back(o.probability, v);
        avg += o.probability * v;
    }
    rep.gap = rep.value_before - avg;
    return rep;
}

double tau_gap_closed_form(const PureState& s, const PovmAngles& a,
                           int party) {
    const BinaryPovm povm = povm_from_angles(a);
    const double p1 =
        apply_operator(s, party, povm.x1).squaredNorm();
    if (p1 < kDegenerateProb || 1.0 - p1 < kDegenerateProb) return 0.0;
    const double tau = three_tangle_hyperdet(s);
    const double s1 = std::sin(a.varphi1) * std::sin(a.varphi1);
    const double s2 = std::sin(a.varphi2) * std::sin(a.varphi2);
    return tau / (p1 * (1.0 - p1)) * (p1 - s1) * (s2 - p1);
}

std::pair<double, double> diagonal_squared_concurrence_gap(
    const AcinParams& p, double x1, double y1) {
    if (x1 < 0.0 || x1 > 1.0 || y1 < 0.0 || y1 > 1.0)
        throw std::invalid_argument("diagonal entries must lie in [0, 1]");
    const double y2 = std::sqrt(1.0 - y1 * y1);
    const double l0 = p.l[0];
    const double p1 = x1 * x1 * l0 * l0 + y1 * y1 * (1.0 - l0 * l0);
    const double p2 = 1.0 - p1;
    if (p1 < kDegenerateProb || p2 < kDegenerateProb)
        throw std::invalid_argument("degenerate outcome probability");
    const double c2 = acin_cbc_squared(p);
    const double d = x1 * x1 - y1 * y1;
    const double sq_gap = -d * d * l0 * l0 * l0 * l0 * c2 / (p1 * p2);
    const double plain_gap =
        (1.0 - y1 * y1 - y2 * y2) * std::sqrt(std::max(0.0, c2));
    return {sq_gap, plain_gap};
}

PovmAngles random_povm_angles(std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> u(-M_PI, M_PI);
    PovmAngles a;
    a.varphi1 = u(rng);
    a.varphi2 = u(rng);
    a.psi1 = u(rng);
    a.psi2 = u(rng);
    return a;
}

BinaryPovm random_povm(std::uint64_t seed, bool with_left_unitaries) {
    BinaryPovm povm = povm_from_angles(random_povm_angles(seed));
    if (with_left_unitaries) {
        povm.x1 = random_unitary_2x2(seed ^ 0x9e3779b97f4a7c15ULL) * povm.x1;
        povm.x2 = random_unitary_2x2(seed ^ 0xd1b54a32d192ed03ULL) * povm.x2;
    }
    return povm;
}

double det_transformation_check(const PureState& s, const BinaryPovm& povm,
                                int party) {
    const double tau = three_tangle_hyperdet(s);
    const double dets[2] = {std::abs(povm.x1.determinant()),
                            std::abs(povm.x2.determinant())};
    double worst = 0.0;
    int k = 0;
    for (const Outcome& o : apply_binary_povm(s, povm, party)) {
        if (o.state) {
            const double lhs = three_tangle_hyperdet(*o.state);
            const double rhs =
                tau * dets[k] * dets[k] / (o.probability * o.probability);
            worst = std::max(worst, std::abs(lhs - rhs));
        }
        ++k;
    }
    return worst;
}

}  // namespace ent
