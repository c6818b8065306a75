#pragma once

#include <json.hpp>

#include "saitokurokawa.hpp"

namespace sklift {

using ordered_json = nlohmann::ordered_json;

inline std::string decimal(const Real& x, int digits) { return x.to_string(digits); }

inline ordered_json report_to_json(const VerificationReport& rep) {
    ordered_json j;
    j["schema"] = 1;
    j["example_id"] = rep.example_id;
    j["parameters"] = {{"kappa", rep.params.kappa},
                       {"kappa_prime", rep.params.kappa_prime},
                       {"m", rep.params.m},
                       {"N", rep.params.N}};
    j["precision_digits"] = rep.digits;
    ordered_json items = ordered_json::object();
    for (auto& it : rep.items) {
        ordered_json e;
        e["computed"] = decimal(it.computed, rep.digits);
        if (!it.paper_target.empty()) {
            e["paper_target"] = it.paper_target;
            e["abs_delta"] = decimal(it.abs_delta, 3);
            e["rel_delta"] = decimal(it.rel_delta, 3);
        }
        if (it.tolerance > 0) e["tolerance"] = it.tolerance;
        e["verdict"] = it.pass ? "pass" : "fail";
        items[it.name] = e;
    }
    j["intermediates"] = items;
    j["lhs"] = decimal(rep.lhs, rep.digits);
    j["rhs"] = decimal(rep.rhs, rep.digits);
    j["relative_residual"] = decimal(rep.residual, 3);
    j["verdict"] = rep.pass ? "pass" : "fail";
    j["notes"] = rep.notes;
    j["runtime_seconds"] = rep.wall_seconds;
    return j;
}

inline ordered_json norm_to_json(const std::string& label, const NormResult& n, int digits) {
    ordered_json j;
    j["schema"] = 1;
    j["form"] = label;
    j["value"] = decimal(n.value, digits);
    j["error_estimate"] = decimal(n.error_estimate, 3);
    j["nodes_used"] = n.nodes_used;
    return j;
}

// L-series descriptor files: a registered fixture pairing, or inline data
// listing degree, gamma shifts, weight, conductor, sign and coefficients.
inline LSeries lseries_from_descriptor(const ordered_json& j) {
    std::string type = j.at("type");
    LSeries L;
    if (type == "sym2_tensor") {
        Newform f = newform_fixture(j.at("f"), j.value("truncation", 260000L));
        Newform g = newform_fixture(j.at("g"), j.value("truncation", 260000L));
        L = make_sym2_tensor_lseries(f, g);
    } else if (type == "twist") {
        Newform f = newform_fixture(j.at("f"), j.value("truncation", 2000L));
        L = twisted_lseries(f, j.at("D").get<long>());
    } else if (type == "inline") {
        L.label = j.value("label", std::string("inline"));
        L.degree = j.at("degree").get<int>();
        for (auto& sh : j.at("gamma_shifts")) {
            Rational mu(sh.get<std::string>());
            mu.canonicalize();
            L.gamma_shifts.push_back(mu);
        }
        L.w = j.at("weight").get<long>();
        L.coeff_cache.emplace_back(0);
        for (auto& c : j.at("coefficients")) L.coeff_cache.emplace_back(c.get<std::string>());
        L.euler_factor = [](long) -> std::vector<BigInt> {
            throw std::out_of_range("inline descriptor: coefficient list exhausted");
        };
    } else {
        throw std::runtime_error("lseries_from_descriptor: unknown type " + type);
    }
    if (j.contains("conductor")) L.conductor = BigInt(j.at("conductor").get<std::string>());
    if (j.contains("sign")) L.sign = j.at("sign").get<int>();
    return L;
}

}  // namespace sklift
