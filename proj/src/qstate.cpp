#include "ent/qstate.hpp"

#include <bit>
#include <cmath>
#include <random>
#include <stdexcept>

namespace ent {

int popcount_mask(unsigned mask) { return std::popcount(mask); }

double AcinParams::norm_sq() const {
    double s = 0.0;
    for (double v : l) s += v * v;
    return s;
}

PureState make_pure_state(int n, const Eigen::VectorXcd& amp) {
    if (n < 2) throw std::invalid_argument("qubit count must be >= 2");
    if (amp.size() != (1LL << n))
        throw std::invalid_argument("amplitude vector length must be 2^n");
    const double nrm = amp.norm();
    if (nrm <= 1e-12) throw std::invalid_argument("zero amplitude vector");
    PureState s;
    s.n = n;
    s.amp = amp / nrm;
    s.renormalized = std::abs(nrm - 1.0) > 1e-9;
    return s;
}

PureState acin_state(const AcinParams& p) {
    if (std::abs(p.norm_sq() - 1.0) > 1e-6)
        throw std::invalid_argument(
            "canonical-form coefficients are not normalized");
    Eigen::VectorXcd amp = Eigen::VectorXcd::Zero(8);
    amp(0) = p.l[0];
    amp(4) = p.l[1] * std::exp(cd(0.0, p.phi));
    amp(5) = p.l[2];
    amp(6) = p.l[3];
    amp(7) = p.l[4];
    return make_pure_state(3, amp);
}

AcinParams acin_from_thetas(const ThetaParams& t) {
    AcinParams p;
    double sin_prod = 1.0;
    for (int j = 0; j <= 3; ++j) {
        p.l[j] = std::cos(t.theta[j]) * sin_prod;
        sin_prod *= std::sin(t.theta[j]);
    }
    p.l[4] = sin_prod;
    p.phi = t.phi;
    return p;
}

PureState named_state(NamedState name) {
    const double r2 = 1.0 / std::sqrt(2.0);
    const double r3 = 1.0 / std::sqrt(3.0);
    switch (name) {
        case NamedState::ghz3: {
            Eigen::VectorXcd a = Eigen::VectorXcd::Zero(8);
            a(0) = a(7) = r2;
            return make_pure_state(3, a);
        }
        case NamedState::w3: {
            Eigen::VectorXcd a = Eigen::VectorXcd::Zero(8);
            a(4) = a(2) = a(1) = r3;
            return make_pure_state(3, a);
        }
        case NamedState::product3: {
            Eigen::VectorXcd a = Eigen::VectorXcd::Zero(8);
            a(0) = 1.0;
            return make_pure_state(3, a);
        }
        case NamedState::bisep_a: {
            // |0> (x) (|00> + |11>)/sqrt(2)
            Eigen::VectorXcd a = Eigen::VectorXcd::Zero(8);
            a(0) = a(3) = r2;
            return make_pure_state(3, a);
        }
        case NamedState::ghz4: {
            Eigen::VectorXcd a = Eigen::VectorXcd::Zero(16);
            a(0) = a(15) = r2;
            return make_pure_state(4, a);
        }
        case NamedState::product_n: {
            Eigen::VectorXcd a = Eigen::VectorXcd::Zero(16);
            a(0) = 1.0;
            return make_pure_state(4, a);
        }
    }
    throw std::invalid_argument("unknown named state");
}

NamedState named_state_from_string(const std::string& name) {
    if (name == "ghz3") return NamedState::ghz3;
    if (name == "w3") return NamedState::w3;
    if (name == "product3") return NamedState::product3;
    if (name == "bisep_a") return NamedState::bisep_a;
    if (name == "ghz4") return NamedState::ghz4;
    if (name == "product_n") return NamedState::product_n;
    throw std::invalid_argument("unknown named state: " + name);
}

Eigen::MatrixXcd partial_trace(const PureState& s, unsigned keep_mask) {
    const unsigned full = (1u << s.n) - 1u;
    if (keep_mask == 0 || keep_mask > full || (keep_mask & ~full) != 0 ||
        keep_mask == full)
        throw std::invalid_argument("keep set must be a nonempty proper subset");

    // Party p occupies amplitude-index bit (n-1-p).
    std::vector<int> kept_bits, traced_bits;
    for (int p = 0; p < s.n; ++p) {
        const int bit = s.n - 1 - p;
        if (keep_mask & (1u << p))
            kept_bits.push_back(bit);
        else
            traced_bits.push_back(bit);
    }
    const int kd = 1 << static_cast<int>(kept_bits.size());
    const int td = 1 << static_cast<int>(traced_bits.size());

    auto index_of = [](const std::vector<int>& bits, int sub) {
        // sub's bit j (party order, MSB first) goes to amplitude bit bits[j]
        int idx = 0;
        const int m = static_cast<int>(bits.size());
        for (int j = 0; j < m; ++j)
            if (sub & (1 << (m - 1 - j))) idx |= 1 << bits[j];
        return idx;
    };

    Eigen::MatrixXcd rho = Eigen::MatrixXcd::Zero(kd, kd);
    for (int t = 0; t < td; ++t) {
        const int tidx = index_of(traced_bits, t);
        for (int r = 0; r < kd; ++r) {
            const cd ar = s.amp(index_of(kept_bits, r) | tidx);
            for (int c = 0; c < kd; ++c)
                rho(r, c) += ar * std::conj(s.amp(index_of(kept_bits, c) | tidx));
        }
    }
    return rho;
}

DensityMatrix reduced_density(const PureState& s, unsigned keep_mask) {
    const int k = popcount_mask(keep_mask);
    if (k < 1 || k > 2)
        throw std::invalid_argument("reduced_density keeps 1 or 2 parties");
    return DensityMatrix{partial_trace(s, keep_mask)};
}

PureState random_pure_state(std::uint64_t seed, int n) {
    if (n < 2) throw std::invalid_argument("qubit count must be >= 2");
    std::mt19937_64 rng(seed);
    std::normal_distribution<double> gauss(0.0, 1.0);
    Eigen::VectorXcd amp(1 << n);
    for (int i = 0; i < amp.size(); ++i) {
        const double re = gauss(rng);
        const double im = gauss(rng);
        amp(i) = cd(re, im);
    }
    return make_pure_state(n, amp);
}

PureState apply_local_unitary(const PureState& s, int party,
                              const Eigen::Matrix2cd& u) {
    if (party < 0 || party >= s.n) throw std::invalid_argument("bad party");
    const Eigen::Matrix2cd res =
        u.adjoint() * u - Eigen::Matrix2cd::Identity();
    if (res.cwiseAbs().maxCoeff() > 1e-10)
        throw std::invalid_argument("operator is not unitary");

    const int bit = s.n - 1 - party;
    Eigen::VectorXcd out = Eigen::VectorXcd::Zero(s.dim());
    for (int i = 0; i < s.dim(); ++i) {
        const int b = (i >> bit) & 1;
        const int i0 = i & ~(1 << bit);
        const int i1 = i0 | (1 << bit);
        out(i) = u(b, 0) * s.amp(i0) + u(b, 1) * s.amp(i1);
    }
    PureState r;
    r.n = s.n;
    r.amp = out / out.norm();
    return r;
}

Eigen::Matrix2cd random_unitary_2x2(std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::normal_distribution<double> gauss(0.0, 1.0);
    Eigen::Matrix2cd g;
    for (int r = 0; r < 2; ++r)
        for (int c = 0; c < 2; ++c) g(r, c) = cd(gauss(rng), gauss(rng));
    const Eigen::HouseholderQR<Eigen::Matrix2cd> qr(g);
    Eigen::Matrix2cd q = qr.householderQ();
    Eigen::Matrix2cd rmat = qr.matrixQR().triangularView<Eigen::Upper>();
    // fix the phase so the factorization is unique
    for (int c = 0; c < 2; ++c) {
        const cd d = rmat(c, c);
        if (std::abs(d) > 0) q.col(c) *= d / std::abs(d);
    }
    return q;
}

}  // namespace ent
