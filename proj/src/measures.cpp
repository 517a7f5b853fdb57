#include "ent/measures.hpp"

#include <Eigen/Eigenvalues>
#include <Eigen/SVD>
#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace ent {

namespace {

Eigen::Matrix4cd spin_flip_kernel() {
    // sigma_y (x) sigma_y in the computational basis, a real matrix
    Eigen::Matrix4cd y = Eigen::Matrix4cd::Zero();
    y(0, 3) = -1.0;
    y(1, 2) = 1.0;
    y(2, 1) = 1.0;
    y(3, 0) = -1.0;
    return y;
}

double clamp01(double v) { return std::clamp(v, 0.0, 1.0); }

std::array<double, 4> sorted_desc(std::array<double, 4> v) {
    std::sort(v.begin(), v.end(), std::greater<>());
    return v;
}

void check_two_qubit(const DensityMatrix& rho) {
    if (rho.dim() != 4)
        throw std::invalid_argument("expected a two-qubit density matrix");
    if ((rho.m - rho.m.adjoint()).cwiseAbs().maxCoeff() > 1e-8)
        throw std::invalid_argument("density matrix is not Hermitian");
    Eigen::SelfAdjointEigenSolver<Eigen::Matrix4cd> es(rho.m);
    if (es.eigenvalues().minCoeff() < -1e-8)
        throw std::invalid_argument("density matrix is not positive");
}

}  // namespace

std::array<double, 4> wootters_lambdas(const DensityMatrix& rho) {
    check_two_qubit(rho);
    Eigen::SelfAdjointEigenSolver<Eigen::Matrix4cd> es(rho.m);
    Eigen::Matrix4cd x = Eigen::Matrix4cd::Zero();
    for (int i = 0; i < 4; ++i) {
        const double ev = std::max(0.0, es.eigenvalues()(i));
        x.col(i) = es.eigenvectors().col(i) * std::sqrt(ev);
    }
    // lambdas as singular values of X^T (sy x sy) X with rho = X X^dag;
    // equal to the square roots of the eigenvalues of
    // rho (sy x sy) rho* (sy x sy), but much better conditioned when the
    // spectrum nearly degenerates
    static const Eigen::Matrix4cd y = spin_flip_kernel();
    const Eigen::Matrix4cd t = x.transpose() * y * x;
    Eigen::JacobiSVD<Eigen::Matrix4cd> svd(t);
    std::array<double, 4> lam{};
    for (int i = 0; i < 4; ++i) lam[i] = svd.singularValues()(i);
    return sorted_desc(lam);
}

std::array<double, 4> wootters_lambdas_spectral(const DensityMatrix& rho) {
    check_two_qubit(rho);
    static const Eigen::Matrix4cd y = spin_flip_kernel();
    const Eigen::Matrix4cd m = rho.m * y * rho.m.conjugate() * y;
    Eigen::ComplexEigenSolver<Eigen::Matrix4cd> es(m, false);
    std::array<double, 4> lam{};
    for (int i = 0; i < 4; ++i) {
        double v = es.eigenvalues()(i).real();
        if (v < 0.0) v = 0.0;  // roundoff on a nonnegative spectrum
        lam[i] = std::sqrt(v);
    }
    return sorted_desc(lam);
}

double one_to_other_concurrence(const PureState& s, unsigned part_mask) {
    const unsigned full = (1u << s.n) - 1u;
    if (part_mask == 0 || part_mask >= full || (part_mask & ~full) != 0)
        throw std::invalid_argument("invalid bipartition");
    // Reshape the amplitudes into a matrix with rows indexed by the S1
    // basis and columns by the complement. By the Lagrange identity,
    // 2 (1 - Tr rho_S1^2) is twice the sum of the squared moduli of all
    // 2x2 minors of that matrix, a sum of nonnegative terms that stays
    // accurate arbitrarily close to a product state.
    const int rows = 1 << popcount_mask(part_mask);
    const int cols = 1 << (s.n - popcount_mask(part_mask));
    Eigen::MatrixXcd m(rows, cols);
    for (unsigned i = 0; i < s.amp.size(); ++i) {
        int r = 0, c = 0;
        for (int q = s.n - 1; q >= 0; --q) {
            const int bit = static_cast<int>(i >> q) & 1;
            if (part_mask & (1u << (s.n - 1 - q)))
                r = (r << 1) | bit;
            else
                c = (c << 1) | bit;
        }
        m(r, c) = s.amp[i];
    }
    double c2 = 0.0;
    for (int i = 0; i < rows; ++i)
        for (int j = i + 1; j < rows; ++j)
            for (int k = 0; k < cols; ++k)
                for (int l = k + 1; l < cols; ++l)
                    c2 += 2.0 * std::norm(m(i, k) * m(j, l) -
                                          m(i, l) * m(j, k));
    return std::sqrt(2.0 * c2);
}

double wootters_concurrence(const DensityMatrix& rho) {
    const auto lam = wootters_lambdas(rho);
    return std::max(0.0, lam[0] - lam[1] - lam[2] - lam[3]);
}

double concurrence_of_assistance(const DensityMatrix& rho) {
    const auto lam = wootters_lambdas(rho);
    return lam[0] + lam[1] + lam[2] + lam[3];
}

double three_tangle(const PureState& s, int pivot, double* raw) {
    if (s.n != 3) throw std::invalid_argument("three_tangle needs 3 qubits");
    if (pivot < 0 || pivot > 2) throw std::invalid_argument("bad pivot");
    const unsigned pbit = 1u << pivot;
    const double c_cut = one_to_other_concurrence(s, pbit);
    double t = c_cut * c_cut;
    for (int other = 0; other < 3; ++other) {
        if (other == pivot) continue;
        const double c =
            wootters_concurrence(reduced_density(s, pbit | (1u << other)));
        t -= c * c;
    }
    if (raw) *raw = t;
    return clamp01(t);
}

double three_tangle_hyperdet(const PureState& s) {
    if (s.n != 3) throw std::invalid_argument("three_tangle needs 3 qubits");
    const auto& a = s.amp;
    using C = std::complex<double>;
    auto sq = [](C z) { return z * z; };
    const C d1 = sq(a[0] * a[7]) + sq(a[1] * a[6]) + sq(a[2] * a[5]) +
                 sq(a[3] * a[4]);
    const C d2 = a[0] * a[7] * (a[3] * a[4] + a[2] * a[5] + a[1] * a[6]) +
                 a[3] * a[4] * (a[2] * a[5] + a[1] * a[6]) +
                 a[2] * a[5] * a[1] * a[6];
    const C d3 = a[0] * a[6] * a[5] * a[3] + a[7] * a[1] * a[2] * a[4];
    return clamp01(4.0 * std::abs(d1 - 2.0 * d2 + 4.0 * d3));
}

double three_tangle_assist(const PureState& s, unsigned pair_mask) {
    if (s.n != 3 || popcount_mask(pair_mask) != 2)
        throw std::invalid_argument("need a pair of three parties");
    const DensityMatrix rho = reduced_density(s, pair_mask);
    const auto lam = wootters_lambdas(rho);
    const double c = std::max(0.0, lam[0] - lam[1] - lam[2] - lam[3]);
    const double ca = lam[0] + lam[1] + lam[2] + lam[3];
    return clamp01(ca * ca - c * c);
}

double perimeter(const PureState& s) {
    if (s.n != 3) throw std::invalid_argument("perimeter needs 3 qubits");
    double p = 0.0;
    for (int i = 0; i < 3; ++i) {
        const double c = one_to_other_concurrence(s, 1u << i);
        p += c * c;
    }
    return p;
}

double perimeter_via_tangle(const PureState& s) {
    const double tau = three_tangle(s);
    double sum = 0.0;
    for (unsigned pair : {3u, 5u, 6u}) {
        const double c = wootters_concurrence(reduced_density(s, pair));
        sum += c * c;
    }
    return 3.0 * tau + 2.0 * sum;
}

double concurrence_fill(const PureState& s) {
    if (s.n != 3) throw std::invalid_argument("fill needs 3 qubits");
    double c2[3];
    double p = 0.0;
    for (int i = 0; i < 3; ++i) {
        const double c = one_to_other_concurrence(s, 1u << i);
        c2[i] = c * c;
        p += c2[i];
    }
    double prod = p / 3.0;
    for (int i = 0; i < 3; ++i) prod *= std::max(0.0, p - 2.0 * c2[i]);
    return std::pow(prod, 0.25);
}

double fill_via_tangle(const PureState& s) {
    const double tau = three_tangle(s);
    double c2[3];
    int k = 0;
    double sum = 0.0;
    for (unsigned pair : {3u, 5u, 6u}) {  // AB, AC, BC
        const double c = wootters_concurrence(reduced_density(s, pair));
        c2[k++] = c * c;
        sum += c * c;
    }
    double prod = tau + 2.0 * sum / 3.0;
    for (int i = 0; i < 3; ++i) prod *= tau + 2.0 * c2[i];
    return std::pow(std::max(0.0, prod), 0.25);
}

double fill_via_assistance(const PureState& s) {
    double sum = 0.0;
    double factors = 1.0;
    for (unsigned pair : {3u, 5u, 6u}) {
        const auto lam = wootters_lambdas(reduced_density(s, pair));
        const double c = std::max(0.0, lam[0] - lam[1] - lam[2] - lam[3]);
        const double ca = lam[0] + lam[1] + lam[2] + lam[3];
        sum += c * c + ca * ca;
        factors *= c * c + ca * ca;
    }
    return std::pow(std::max(0.0, sum / 3.0 * factors), 0.25);
}

double g_quantity(const PureState& s, unsigned pair_mask) {
    if (s.n != 3 || popcount_mask(pair_mask) != 2)
        throw std::invalid_argument("g_quantity needs a pair of three parties");
    const unsigned opposite = 7u & ~pair_mask;
    const double c = one_to_other_concurrence(s, opposite);
    return perimeter(s) - 2.0 * c * c;
}

double side_product_s(const PureState& s) {
    if (s.n != 3) throw std::invalid_argument("side product needs 3 qubits");
    double prod = 1.0;
    for (int i = 0; i < 3; ++i)
        prod *= one_to_other_concurrence(s, 1u << i);
    return std::sqrt(prod);
}

double nqubit_s(const PureState& s) {
    if (s.n < 3) throw std::invalid_argument("needs at least 3 qubits");
    const unsigned full = (1u << s.n) - 1u;
    double prod = 1.0;
    // unordered bipartitions: masks containing party A
    for (unsigned m = 1; m < full; m += 2)
        prod *= one_to_other_concurrence(s, m);
    return std::pow(prod, 1.0 / static_cast<double>(1 << (s.n - 2)));
}

double acin_cbc_squared(const AcinParams& p) {
    const auto& l = p.l;
    return 4.0 * (l[2] * l[2] * l[3] * l[3] + l[1] * l[1] * l[4] * l[4] -
                  2.0 * l[1] * l[2] * l[3] * l[4] * std::cos(p.phi));
}

int party_from_char(char c) {
    if (c < 'A' || c > 'Z') throw std::invalid_argument("bad party name");
    return c - 'A';
}

unsigned parties_from_string(const std::string& names) {
    unsigned mask = 0;
    for (char c : names) mask |= 1u << party_from_char(c);
    if (mask == 0) throw std::invalid_argument("empty party set");
    return mask;
}

std::string parties_to_string(unsigned mask, int n) {
    std::string out;
    for (int p = 0; p < n; ++p)
        if (mask & (1u << p)) out += static_cast<char>('A' + p);
    return out;
}

std::string MeasureId::str() const {
    std::string base;
    switch (tag) {
        case MeasureTag::one_to_other:
            base = "concurrence:" + parties_to_string(*context, 3) + "|" +
                   parties_to_string(7u & ~*context, 3);
            break;
        case MeasureTag::fill: base = "fill"; break;
        case MeasureTag::perimeter: base = "perimeter"; break;
        case MeasureTag::tangle: base = "tangle"; break;
        case MeasureTag::wootters:
            base = (exponent == 2.0 ? "c2:" : "c:") +
                   parties_to_string(*context, 3);
            return base;
        case MeasureTag::assistance:
            base = "ca:" + parties_to_string(*context, 3);
            break;
        case MeasureTag::g_quantity:
            base = "g:" + parties_to_string(*context, 3);
            break;
        case MeasureTag::side_product_s: base = "s"; break;
        case MeasureTag::nqubit_s: base = "nqubit-s"; break;
    }
    if (exponent == 1.0) return base;
    if (exponent == 0.5) return base + "^1/2";
    if (exponent == 0.25) return base + "^1/4";
    return base + "^" + std::to_string(exponent);
}

MeasureId parse_measure(const std::string& id) {
    std::string base = id;
    double exponent = 1.0;
    if (const auto caret = id.find('^'); caret != std::string::npos) {
        base = id.substr(0, caret);
        const std::string e = id.substr(caret + 1);
        if (const auto slash = e.find('/'); slash != std::string::npos)
            exponent =
                std::stod(e.substr(0, slash)) / std::stod(e.substr(slash + 1));
        else
            exponent = std::stod(e);
        if (!(exponent > 0.0))
            throw std::invalid_argument("exponent must be positive");
    }

    std::string ctx;
    if (const auto colon = base.find(':'); colon != std::string::npos) {
        ctx = base.substr(colon + 1);
        base = base.substr(0, colon);
    }

    MeasureId m;
    m.exponent = exponent;
    if (base == "fill") {
        m.tag = MeasureTag::fill;
    } else if (base == "perimeter") {
        m.tag = MeasureTag::perimeter;
    } else if (base == "tangle") {
        m.tag = MeasureTag::tangle;
    } else if (base == "s") {
        m.tag = MeasureTag::side_product_s;
    } else if (base == "nqubit-s") {
        m.tag = MeasureTag::nqubit_s;
    } else if (base == "concurrence") {
        m.tag = MeasureTag::one_to_other;
        const auto bar = ctx.find('|');
        if (bar == std::string::npos)
            throw std::invalid_argument("concurrence needs a bipartition S1|S2");
        m.context = parties_from_string(ctx.substr(0, bar));
    } else if (base == "g") {
        m.tag = MeasureTag::g_quantity;
        m.context = parties_from_string(ctx);
    } else if (base == "c" || base == "c2") {
        m.tag = MeasureTag::wootters;
        if (base == "c2") m.exponent = 2.0 * exponent;
        m.context = parties_from_string(ctx);
    } else if (base == "ca") {
        m.tag = MeasureTag::assistance;
        m.context = parties_from_string(ctx);
    } else {
        throw std::invalid_argument("unknown measure: " + id);
    }
    if ((m.tag == MeasureTag::g_quantity || m.tag == MeasureTag::wootters ||
         m.tag == MeasureTag::assistance) &&
        popcount_mask(*m.context) != 2)
        throw std::invalid_argument("measure needs a two-party context");
    return m;
}

double evaluate(const MeasureId& m, const PureState& s) {
    double base = 0.0;
    switch (m.tag) {
        case MeasureTag::one_to_other:
            if (!m.context)
                throw std::invalid_argument("missing bipartition context");
            base = one_to_other_concurrence(s, *m.context);
            break;
        case MeasureTag::fill: base = concurrence_fill(s); break;
        case MeasureTag::perimeter: base = perimeter(s); break;
        case MeasureTag::tangle: base = three_tangle_hyperdet(s); break;
        case MeasureTag::wootters:
            if (!m.context) throw std::invalid_argument("missing pair context");
            base = wootters_concurrence(reduced_density(s, *m.context));
            break;
        case MeasureTag::assistance:
            if (!m.context) throw std::invalid_argument("missing pair context");
            base = concurrence_of_assistance(reduced_density(s, *m.context));
            break;
        case MeasureTag::g_quantity:
            if (!m.context) throw std::invalid_argument("missing pair context");
            base = g_quantity(s, *m.context);
            break;
        case MeasureTag::side_product_s: base = side_product_s(s); break;
        case MeasureTag::nqubit_s: base = nqubit_s(s); break;
    }
    if (m.exponent == 1.0) return base;
    return std::pow(base, m.exponent);
}

}  // namespace ent
