#include "ent/suites.hpp"

#include <algorithm>
#include <cmath>
#include <random>

namespace ent {

IdentitySuiteResult run_identity_suite(long samples, std::uint64_t seed) {
    IdentitySuiteResult r;
    r.samples = samples;
    r.min_triangle_slack = 3.0;
    for (long i = 0; i < samples; ++i) {
        const std::uint64_t s_seed = mix_seed(seed, static_cast<std::uint64_t>(i));
        const PureState s = random_pure_state(s_seed, 3);

        double c2[3];
        for (int p = 0; p < 3; ++p) {
            const double c = one_to_other_concurrence(s, 1u << p);
            c2[p] = c * c;
        }
        double cpair2[3];  // AB, AC, BC
        int k = 0;
        for (unsigned pair : {3u, 5u, 6u}) {
            const double c = wootters_concurrence(reduced_density(s, pair));
            cpair2[k++] = c * c;
        }

        const double tau = three_tangle_hyperdet(s);
        double worst_here = 0.0;

        // CKW for each pivot; pairs containing pivot p
        const int pair_idx[3][2] = {{0, 1}, {0, 2}, {1, 2}};
        for (int p = 0; p < 3; ++p) {
            const double residual = std::abs(
                c2[p] - tau - cpair2[pair_idx[p][0]] - cpair2[pair_idx[p][1]]);
            worst_here = std::max(worst_here, residual);
            r.max_ckw_residual = std::max(r.max_ckw_residual, residual);
        }

        for (int p = 0; p < 3; ++p) {
            const double slack = c2[(p + 1) % 3] + c2[(p + 2) % 3] - c2[p];
            r.min_triangle_slack = std::min(r.min_triangle_slack, slack);
        }

        for (int p = 0; p < 3; ++p)
            r.max_tau_pivot_diff = std::max(
                r.max_tau_pivot_diff, std::abs(three_tangle(s, p) - tau));
        for (unsigned pair : {3u, 5u, 6u})
            r.max_tau_route_diff =
                std::max(r.max_tau_route_diff,
                         std::abs(three_tangle_assist(s, pair) - tau));

        const double f1 = concurrence_fill(s);
        const double f2 = fill_via_tangle(s);
        const double f3 = fill_via_assistance(s);
        const double spread = std::max({std::abs(f1 - f2), std::abs(f1 - f3),
                                        std::abs(f2 - f3)});
        r.max_fill_spread = std::max(r.max_fill_spread, spread);

        const double pd = std::abs(perimeter(s) - perimeter_via_tangle(s));
        r.max_perimeter_diff = std::max(r.max_perimeter_diff, pd);

        if (std::max({worst_here, spread, pd}) >=
            std::max({r.max_ckw_residual, r.max_fill_spread,
                      r.max_perimeter_diff}))
            r.worst_seed = s_seed;
    }
    r.pass = r.max_ckw_residual <= 1e-8 && r.min_triangle_slack >= -1e-10 &&
             r.max_fill_spread <= 1e-9 && r.max_tau_pivot_diff <= 1e-8 &&
             r.max_tau_route_diff <= 1e-8 && r.max_perimeter_diff <= 1e-9;
    return r;
}

MonotoneSuiteResult run_monotone_suite(long samples, std::uint64_t seed) {
    MonotoneSuiteResult r;
    r.samples = samples;
    r.min_tau_gap = r.min_s_gap = r.min_concurrence_gap =
        r.min_closed_form_gap = 1.0;

    const MeasureId tangle = parse_measure("tangle");
    const MeasureId sprod = parse_measure("s");

    for (long i = 0; i < samples; ++i) {
        const std::uint64_t s_seed = mix_seed(seed, 2 * static_cast<std::uint64_t>(i));
        const std::uint64_t p_seed = mix_seed(seed, 2 * static_cast<std::uint64_t>(i) + 1);
        const PureState s = random_pure_state(s_seed, 3);
        const PovmAngles angles = random_povm_angles(p_seed);
        const BinaryPovm povm = povm_from_angles(angles);
        const int party = static_cast<int>(i % 3);

        const double tau_gap = average_gap(tangle, s, povm, party).gap;
        const double s_gap = average_gap(sprod, s, povm, party).gap;
        MeasureId conc;
        conc.tag = MeasureTag::one_to_other;
        conc.context = 1u << party;
        const double c_gap = average_gap(conc, s, povm, party).gap;

        const double closed = tau_gap_closed_form(s, angles, party);
        r.max_closed_form_diff =
            std::max(r.max_closed_form_diff, std::abs(closed - tau_gap));
        r.min_closed_form_gap = std::min(r.min_closed_form_gap, closed);

        const double here = std::min({tau_gap, s_gap, c_gap});
        if (here < std::min({r.min_tau_gap, r.min_s_gap,
                             r.min_concurrence_gap}))
            r.argmin_seed = s_seed;
        r.min_tau_gap = std::min(r.min_tau_gap, tau_gap);
        r.min_s_gap = std::min(r.min_s_gap, s_gap);
        r.min_concurrence_gap = std::min(r.min_concurrence_gap, c_gap);
    }
    r.pass = r.min_tau_gap >= -1e-10 && r.min_s_gap >= -1e-10 &&
             r.min_concurrence_gap >= -1e-10 &&
             r.max_closed_form_diff <= 1e-9 &&
             r.min_closed_form_gap >= -1e-10;
    return r;
}

ViolationSuiteResult run_violation_suite() {
    ViolationSuiteResult r;
    r.pass = true;
    for (PaperCase which : {PaperCase::fill_main, PaperCase::g_bc,
                            PaperCase::fill_sqrt, PaperCase::fill_quartic}) {
        ReproduceResult c = reproduce_case(which);
        if (!c.in_window) c = reproduce_case(which, true);
        const bool scan_ok = c.phi_scan && c.phi_scan->gap >= c.window_lo &&
                             c.phi_scan->gap <= c.window_hi;
        r.pass = r.pass && (c.in_window || scan_ok);
        r.cases.push_back(std::move(c));
    }
    return r;
}

AcinParams random_acin_params(std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::normal_distribution<double> gauss(0.0, 1.0);
    std::uniform_real_distribution<double> uphi(0.0, M_PI);
    AcinParams p;
    double nrm = 0.0;
    for (double& l : p.l) {
        l = std::abs(gauss(rng));
        nrm += l * l;
    }
    nrm = std::sqrt(nrm);
    for (double& l : p.l) l /= nrm;
    p.phi = uphi(rng);
    return p;
}

DiagonalSuiteResult run_diagonal_suite(long samples, std::uint64_t seed) {
    DiagonalSuiteResult r;
    r.samples = samples;
    const MeasureId c2bc = parse_measure("c2:BC");
    const MeasureId cbc = parse_measure("c:BC");
    for (long i = 0; i < samples; ++i) {
        const std::uint64_t s_seed = mix_seed(seed, static_cast<std::uint64_t>(i));
        const AcinParams p = random_acin_params(s_seed);
        std::mt19937_64 rng(mix_seed(seed, static_cast<std::uint64_t>(i) + 0x10000));
        // keep away from the degenerate corners
        std::uniform_real_distribution<double> u(0.05, 0.95);
        const double x1 = u(rng);
        const double y1 = u(rng);

        const auto [sq_gap, plain_gap] =
            diagonal_squared_concurrence_gap(p, x1, y1);
        r.max_squared_gap = std::max(r.max_squared_gap, sq_gap);
        BinaryPovm povm;
        povm.x1 = Eigen::Vector2cd(x1, y1).asDiagonal();
        povm.x2 = Eigen::Vector2cd(std::sqrt(1.0 - x1 * x1),
                                   std::sqrt(1.0 - y1 * y1))
                      .asDiagonal();
        const PureState s = acin_state(p);
        const double direct_sq = average_gap(c2bc, s, povm, 0).gap;
        const double direct_plain = average_gap(cbc, s, povm, 0).gap;
        r.max_direct_diff =
            std::max(r.max_direct_diff, std::abs(direct_sq - sq_gap));
        r.max_plain_gap = std::max(
            r.max_plain_gap, std::max(std::abs(plain_gap), std::abs(direct_plain)));
    }
    r.pass = r.max_plain_gap <= 1e-9 && r.max_squared_gap <= 1e-12 &&
             r.max_direct_diff <= 1e-9;
    return r;
}

}  // namespace ent
