#include "ent/io.hpp"
#include "ent/suites.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

namespace {

constexpr int kOk = 0;
constexpr int kClaimFailed = 1;
constexpr int kBadInput = 2;

struct OutputSink {
    std::string path;  // empty = stdout
    bool quiet = false;

    void emit(const ent::ojson& j) const {
        const std::string text = j.dump(2) + "\n";
        if (!path.empty()) {
            std::ofstream out(path);
            if (!out) throw std::invalid_argument("cannot write " + path);
            out << text;
        } else if (!quiet) {
            std::cout << text;
        }
    }
};

const char* case_name(ent::PaperCase which) {
    switch (which) {
        case ent::PaperCase::fill_main: return "fill_main";
        case ent::PaperCase::g_bc: return "g_bc";
        case ent::PaperCase::fill_sqrt: return "fill_sqrt";
        case ent::PaperCase::fill_quartic: return "fill_quartic";
    }
    return "?";
}

ent::ojson reproduce_to_json(const ent::ReproduceResult& r) {
    ent::ojson j;
    j["case"] = case_name(r.which);
    j["gap"] = r.report.gap;
    j["published_gap"] = r.published_gap;
    j["window"] = {r.window_lo, r.window_hi};
    j["in_window"] = r.in_window;
    j["report"] = ent::gap_report_to_json(r.report);
    if (r.phi_scan) {
        j["phi_scan"] = {{"phi", r.phi_scan->phi}, {"gap", r.phi_scan->gap}};
    }
    return j;
}

int cmd_measure(const std::string& state_arg,
                const std::vector<std::string>& ids, const OutputSink& sink) {
    const ent::PureState s = ent::parse_state_spec(ent::load_json_arg(state_arg));
    ent::ojson values;
    for (const std::string& id : ids)
        values[id] = ent::evaluate(ent::parse_measure(id), s);
    sink.emit(values);
    return kOk;
}

int cmd_gap(const std::string& state_arg, const std::string& povm_arg,
            const std::string& measure_id, const std::string& party,
            const OutputSink& sink) {
    const ent::PureState s = ent::parse_state_spec(ent::load_json_arg(state_arg));
    const ent::BinaryPovm povm =
        ent::parse_povm_spec(ent::load_json_arg(povm_arg));
    const ent::GapReport rep = ent::average_gap(
        ent::parse_measure(measure_id), s, povm, ent::parse_party(party));
    sink.emit(ent::gap_report_to_json(rep));
    return kOk;
}

int cmd_reproduce(const std::string& case_id, bool phi_scan,
                  const OutputSink& sink) {
    const ent::ReproduceResult r =
        ent::reproduce_case(ent::paper_case_from_string(case_id), phi_scan);
    sink.emit(reproduce_to_json(r));
    const bool scan_ok = r.phi_scan && r.phi_scan->gap >= r.window_lo &&
                         r.phi_scan->gap <= r.window_hi;
    return (r.in_window || scan_ok) ? kOk : kClaimFailed;
}

int cmd_search(const std::string& measure_id, const std::string& party,
               int restarts, int iters, std::uint64_t seed, double threshold,
               const OutputSink& sink) {
    ent::SearchConfig cfg;
    cfg.measure = ent::parse_measure(measure_id);
    cfg.party = ent::parse_party(party);
    cfg.restarts = restarts;
    cfg.max_iters_per_restart = iters;
    cfg.seed = seed;
    cfg.report_threshold = threshold;
    const auto cert = ent::search_violation(cfg);
    if (!cert) {
        sink.emit(ent::ojson{{"violation", nullptr}});
        return kClaimFailed;
    }
    sink.emit(ent::certificate_to_json(*cert));
    return kOk;
}

int cmd_verify(const std::string& path, const OutputSink& sink) {
    const ent::ViolationCertificate cert =
        ent::certificate_from_json(ent::load_json_arg(path));
    const ent::VerifyResult res = ent::verify_certificate(cert);
    ent::ojson j;
    j["accepted"] = res.accepted;
    j["claimed_gap"] = res.claimed_gap;
    j["recomputed_gap"] = res.report.gap;
    j["report"] = ent::gap_report_to_json(res.report);
    sink.emit(j);
    return res.accepted ? kOk : kClaimFailed;
}

int cmd_suite(const std::string& suite_id, long samples, std::uint64_t seed,
              const OutputSink& sink) {
    ent::ojson j;
    bool pass = false;
    if (suite_id == "identities") {
        const auto r = ent::run_identity_suite(samples, seed);
        j = {{"suite", "identities"},
             {"samples", r.samples},
             {"max_ckw_residual", r.max_ckw_residual},
             {"min_triangle_slack", r.min_triangle_slack},
             {"max_fill_spread", r.max_fill_spread},
             {"max_tau_pivot_diff", r.max_tau_pivot_diff},
             {"max_tau_route_diff", r.max_tau_route_diff},
             {"max_perimeter_diff", r.max_perimeter_diff},
             {"worst_seed", r.worst_seed},
             {"pass", r.pass}};
        pass = r.pass;
    } else if (suite_id == "monotones") {
        const auto r = ent::run_monotone_suite(samples, seed);
        j = {{"suite", "monotones"},
             {"samples", r.samples},
             {"min_tau_gap", r.min_tau_gap},
             {"min_s_gap", r.min_s_gap},
             {"min_concurrence_gap", r.min_concurrence_gap},
             {"max_closed_form_diff", r.max_closed_form_diff},
             {"min_closed_form_gap", r.min_closed_form_gap},
             {"argmin_seed", r.argmin_seed},
             {"pass", r.pass}};
        pass = r.pass;
    } else if (suite_id == "violations") {
        const auto r = ent::run_violation_suite();
        j["suite"] = "violations";
        ent::ojson cases = ent::ojson::array();
        for (const auto& c : r.cases) cases.push_back(reproduce_to_json(c));
        j["cases"] = cases;
        j["pass"] = r.pass;
        pass = r.pass;
    } else {
        throw std::invalid_argument("unknown suite: " + suite_id);
    }
    sink.emit(j);
    return pass ? kOk : kClaimFailed;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Tripartite entanglement measures and LOCC gap analysis"};
    app.require_subcommand(1);

    OutputSink sink;
    app.add_option("--out", sink.path, "write output to PATH instead of stdout");
    app.add_flag("--quiet", sink.quiet, "suppress stdout output");

    std::string state_arg, povm_arg, measure_id, party = "A", case_id,
                            cert_path, suite_id;
    std::vector<std::string> measure_ids;
    bool phi_scan = false;
    int restarts = 200, iters = 500;
    long samples = 10000;
    std::uint64_t seed = 0;
    double threshold = -1e-6;

    auto* m = app.add_subcommand("measure", "evaluate measures on a state");
    m->add_option("state", state_arg, "state spec (JSON file or inline)")
        ->required();
    m->add_option("measures", measure_ids, "measure ids")->required();

    auto* g = app.add_subcommand("gap", "average gap under a binary POVM");
    g->add_option("state", state_arg, "state spec")->required();
    g->add_option("povm", povm_arg, "POVM spec")->required();
    g->add_option("measure", measure_id, "measure id")->required();
    g->add_option("party", party, "measured party (A/B/C)");

    auto* r = app.add_subcommand("reproduce", "re-run a published case");
    r->add_option("case", case_id, "fill_main|g_bc|fill_sqrt|fill_quartic")
        ->required();
    r->add_flag("--phi-scan", phi_scan, "scan the unprinted phase over [0, pi]");

    auto* s = app.add_subcommand("search", "search for a negative gap");
    s->add_option("--measure", measure_id, "measure id")->required();
    s->add_option("--party", party, "measured party");
    s->add_option("--restarts", restarts, "random restarts")
        ->check(CLI::PositiveNumber);
    s->add_option("--iters", iters, "max iterations per restart")
        ->check(CLI::PositiveNumber);
    s->add_option("--seed", seed, "search seed");
    s->add_option("--threshold", threshold, "report gaps below this value");

    auto* v = app.add_subcommand("verify", "re-verify a certificate file");
    v->add_option("certificate", cert_path, "certificate path")->required();

    auto* su = app.add_subcommand("suite", "run an invariant suite");
    su->add_option("id", suite_id, "identities|monotones|violations")
        ->required();
    su->add_option("--samples", samples, "sample count")
        ->check(CLI::PositiveNumber);
    su->add_option("--seed", seed, "suite seed");

    // allow --out/--quiet after the subcommand name
    for (CLI::App* sc : {m, g, r, s, v, su}) sc->fallthrough();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kBadInput;
    }

    try {
        if (m->parsed()) return cmd_measure(state_arg, measure_ids, sink);
        if (g->parsed())
            return cmd_gap(state_arg, povm_arg, measure_id, party, sink);
        if (r->parsed()) return cmd_reproduce(case_id, phi_scan, sink);
        if (s->parsed())
            return cmd_search(measure_id, party, restarts, iters, seed,
                              threshold, sink);
        if (v->parsed()) return cmd_verify(cert_path, sink);
        if (su->parsed()) return cmd_suite(suite_id, samples, seed, sink);
    } catch (const nlohmann::json::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kBadInput;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kBadInput;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kBadInput;
    }
    return kBadInput;
}
