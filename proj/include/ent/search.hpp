#pragma once

#include "ent/locc.hpp"

#include <functional>
#include <optional>
#include <string>
#include <vector>

// Derivative-free search for monotonicity violations over the
// 9-parameter space (state angles + POVM angles), plus re-verifiable
// certificates and the hard-coded published counterexamples.
namespace ent {

inline constexpr const char* kToolVersion = "1.0.0";

struct NelderMeadOptions {
    int max_iters = 500;
    double f_tolerance = 1e-10;
    double edge = 0.1;  // initial simplex edge length
    double reflection = 1.0;
    double expansion = 2.0;
    double contraction = 0.5;
    double shrink = 0.5;
};

struct NelderMeadResult {
    std::vector<double> x;
    double fx = 0.0;
    int iters = 0;
};

NelderMeadResult nelder_mead(
    const std::function<double(const std::vector<double>&)>& f,
    std::vector<double> x0, const NelderMeadOptions& opts);

struct SearchConfig {
    MeasureId measure;
    int party = 0;
    int restarts = 200;
    int max_iters_per_restart = 500;
    std::uint64_t seed = 0;
    double simplex_tolerance = 1e-10;
    double report_threshold = -1e-6;
};

struct SearchPoint {
    ThetaParams thetas;
    PovmAngles povm;
};

struct ViolationCertificate {
    SearchPoint point;
    MeasureId measure;
    int party = 0;
    double claimed_gap = 0.0;
    std::string tool_version = kToolVersion;
    std::uint64_t seed = 0;
};

// Deterministic per-restart seed derivation.
std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t index);

PureState state_from_point(const SearchPoint& p);
GapReport gap_at_point(const SearchPoint& p, const MeasureId& m, int party);

std::optional<ViolationCertificate> search_violation(const SearchConfig& cfg);

struct VerifyResult {
    GapReport report;
    bool accepted = false;
    double claimed_gap = 0.0;
};

VerifyResult verify_certificate(const ViolationCertificate& c);

enum class PaperCase { fill_main, g_bc, fill_sqrt, fill_quartic };
PaperCase paper_case_from_string(const std::string& id);

struct PhiScanResult {
    double phi = 0.0;
    double gap = 0.0;
};

struct ReproduceResult {
    PaperCase which;
    GapReport report;
    double published_gap = 0.0;
    double window_lo = 0.0;  // acceptance window on the gap
    double window_hi = 0.0;
    bool in_window = false;
    std::optional<PhiScanResult> phi_scan;
};

ReproduceResult reproduce_case(PaperCase which, bool phi_scan = false);

}  // namespace ent
