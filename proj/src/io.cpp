#include "ent/io.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace ent {

double parse_angle_string(const std::string& s) {
    std::string t = s;
    double sign = 1.0;
    if (!t.empty() && (t[0] == '-' || t[0] == '+')) {
        if (t[0] == '-') sign = -1.0;
        t = t.substr(1);
    }
    if (t.rfind("pi", 0) == 0) {
        std::string rest = t.substr(2);
        if (rest.empty()) return sign * M_PI;
        if (rest[0] != '*')
            throw std::invalid_argument("bad angle literal: " + s);
        rest = rest.substr(1);
        double factor;
        if (const auto slash = rest.find('/'); slash != std::string::npos) {
            const double num = std::stod(rest.substr(0, slash));
            const double den = std::stod(rest.substr(slash + 1));
            if (den == 0.0) throw std::invalid_argument("zero denominator");
            factor = num / den;
        } else {
            factor = std::stod(rest);
        }
        return sign * M_PI * factor;
    }
    size_t pos = 0;
    const double v = std::stod(t, &pos);
    if (pos != t.size()) throw std::invalid_argument("bad angle: " + s);
    return sign * v;
}

double parse_angle(const nlohmann::json& v) {
    if (v.is_number()) return v.get<double>();
    if (v.is_string()) return parse_angle_string(v.get<std::string>());
    throw std::invalid_argument("angle must be a number or string");
}

PureState parse_state_spec(const nlohmann::json& spec) {
    if (!spec.is_object())
        throw std::invalid_argument("state spec must be an object");
    const int keys = spec.count("amplitudes") + spec.count("acin") +
                     spec.count("thetas") + spec.count("named");
    if (keys != 1 || spec.size() != 1)
        throw std::invalid_argument(
            "state spec needs exactly one of amplitudes/acin/thetas/named");

    if (spec.contains("named"))
        return named_state(
            named_state_from_string(spec["named"].get<std::string>()));

    if (spec.contains("amplitudes")) {
        const auto& arr = spec["amplitudes"];
        if (!arr.is_array() || arr.empty())
            throw std::invalid_argument("amplitudes must be a nonempty array");
        Eigen::VectorXcd amp(arr.size());
        for (size_t i = 0; i < arr.size(); ++i) {
            if (!arr[i].is_array() || arr[i].size() != 2)
                throw std::invalid_argument("amplitude must be [re, im]");
            amp(static_cast<long>(i)) =
                cd(arr[i][0].get<double>(), arr[i][1].get<double>());
        }
        int n = 0;
        while ((1LL << n) < amp.size()) ++n;
        return make_pure_state(n, amp);
    }

    if (spec.contains("thetas")) {
        const auto& t = spec["thetas"];
        ThetaParams tp;
        for (int i = 0; i < 4; ++i)
            tp.theta[i] = parse_angle(t.at("theta" + std::to_string(i + 1)));
        tp.phi = parse_angle(t.at("phi"));
        return acin_state(acin_from_thetas(tp));
    }

    const auto& a = spec["acin"];
    AcinParams p;
    for (int i = 0; i < 5; ++i)
        p.l[i] = a.at("l" + std::to_string(i)).get<double>();
    p.phi = parse_angle(a.at("phi"));
    if (p.phi < 0.0 || p.phi > M_PI)
        throw std::invalid_argument("phi must lie in [0, pi]");
    return acin_state(p);
}

BinaryPovm parse_povm_spec(const nlohmann::json& spec) {
    if (!spec.is_object())
        throw std::invalid_argument("POVM spec must be an object");
    BinaryPovm povm;
    if (spec.contains("angles")) {
        const auto& a = spec["angles"];
        PovmAngles angles;
        angles.varphi1 = parse_angle(a.at("varphi1"));
        angles.varphi2 = parse_angle(a.at("varphi2"));
        angles.psi1 = parse_angle(a.at("psi1"));
        angles.psi2 = parse_angle(a.at("psi2"));
        povm = povm_from_angles(angles);
    } else if (spec.contains("operators")) {
        const auto& ops = spec["operators"];
        if (!ops.is_array() || ops.size() != 2)
            throw std::invalid_argument("operators must hold two matrices");
        Eigen::Matrix2cd* dst[2] = {&povm.x1, &povm.x2};
        for (int k = 0; k < 2; ++k) {
            const auto& m = ops[k];
            if (!m.is_array() || m.size() != 4)
                throw std::invalid_argument(
                    "each operator is 4 row-major [re, im] pairs");
            for (int e = 0; e < 4; ++e)
                (*dst[k])(e / 2, e % 2) =
                    cd(m[e][0].get<double>(), m[e][1].get<double>());
        }
    } else {
        throw std::invalid_argument("POVM spec needs angles or operators");
    }
    if (povm.completeness_residual() > 1e-9)
        throw std::invalid_argument("POVM is not complete");
    return povm;
}

int parse_party(const std::string& name) {
    if (name.size() != 1 || name[0] < 'A' || name[0] > 'C')
        throw std::invalid_argument("party must be A, B or C");
    return name[0] - 'A';
}

ojson gap_report_to_json(const GapReport& rep) {
    ojson j;
    j["measure"] = rep.measure.str();
    j["party"] = std::string(1, static_cast<char>('A' + rep.party));
    j["value_before"] = rep.value_before;
    ojson outs = ojson::array();
    for (const auto& [p, v] : rep.outcomes)
        outs.push_back({{"probability", p}, {"value_after", v}});
    j["outcomes"] = outs;
    j["gap"] = rep.gap;
    j["degenerate_outcomes"] = rep.degenerate_outcomes;
    return j;
}

ojson certificate_to_json(const ViolationCertificate& c) {
    ojson j;
    ojson thetas;
    for (int i = 0; i < 4; ++i)
        thetas["theta" + std::to_string(i + 1)] = c.point.thetas.theta[i];
    thetas["phi"] = c.point.thetas.phi;
    ojson povm;
    povm["varphi1"] = c.point.povm.varphi1;
    povm["varphi2"] = c.point.povm.varphi2;
    povm["psi1"] = c.point.povm.psi1;
    povm["psi2"] = c.point.povm.psi2;
    j["point"] = {{"thetas", thetas}, {"povm", povm}};
    j["measure"] = c.measure.str();
    j["party"] = std::string(1, static_cast<char>('A' + c.party));
    j["claimed_gap"] = c.claimed_gap;
    j["tool_version"] = c.tool_version;
    j["seed"] = c.seed;
    return j;
}

ViolationCertificate certificate_from_json(const nlohmann::json& j) {
    ViolationCertificate c;
    const auto& thetas = j.at("point").at("thetas");
    for (int i = 0; i < 4; ++i)
        c.point.thetas.theta[i] =
            thetas.at("theta" + std::to_string(i + 1)).get<double>();
    c.point.thetas.phi = thetas.at("phi").get<double>();
    const auto& povm = j.at("point").at("povm");
    c.point.povm.varphi1 = povm.at("varphi1").get<double>();
    c.point.povm.varphi2 = povm.at("varphi2").get<double>();
    c.point.povm.psi1 = povm.at("psi1").get<double>();
    c.point.povm.psi2 = povm.at("psi2").get<double>();
    c.measure = parse_measure(j.at("measure").get<std::string>());
    c.party = parse_party(j.at("party").get<std::string>());
    c.claimed_gap = j.at("claimed_gap").get<double>();
    c.tool_version = j.at("tool_version").get<std::string>();
    c.seed = j.at("seed").get<std::uint64_t>();
    return c;
}

nlohmann::json load_json_arg(const std::string& arg) {
    if (!arg.empty() && arg[0] == '{') return nlohmann::json::parse(arg);
    std::ifstream in(arg);
    if (!in) throw std::invalid_argument("cannot open file: " + arg);
    return nlohmann::json::parse(in);
}

std::string format_double(double v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

}  // namespace ent
