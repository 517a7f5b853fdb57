#pragma once

#include "ent/search.hpp"

#include <cstdint>
#include <vector>

// Batch invariant checks over seeded random inputs, shared by the CLI
// `suite` command and the acceptance tests. Each runner reports the
// worst-case residuals together with the seed that produced them.
namespace ent {

struct IdentitySuiteResult {
    long samples = 0;
    double max_ckw_residual = 0.0;
    double min_triangle_slack = 1.0;
    double max_fill_spread = 0.0;
    double max_tau_route_diff = 0.0;
    double max_tau_pivot_diff = 0.0;
    double max_perimeter_diff = 0.0;
    std::uint64_t worst_seed = 0;
    bool pass = false;
};

IdentitySuiteResult run_identity_suite(long samples, std::uint64_t seed);

struct MonotoneSuiteResult {
    long samples = 0;
    double min_tau_gap = 0.0;
    double min_s_gap = 0.0;
    double min_concurrence_gap = 0.0;
    double max_closed_form_diff = 0.0;
    double min_closed_form_gap = 0.0;
    std::uint64_t argmin_seed = 0;
    bool pass = false;
};

MonotoneSuiteResult run_monotone_suite(long samples, std::uint64_t seed);

struct ViolationSuiteResult {
    std::vector<ReproduceResult> cases;
    bool pass = false;
};

ViolationSuiteResult run_violation_suite();

struct DiagonalSuiteResult {
    long samples = 0;
    double max_plain_gap = 0.0;
    double max_squared_gap = 0.0;  // must stay <= 1e-12
    double max_direct_diff = 0.0;  // closed form vs two-outcome average
    bool pass = false;
};

DiagonalSuiteResult run_diagonal_suite(long samples, std::uint64_t seed);

AcinParams random_acin_params(std::uint64_t seed);

}  // namespace ent
