// SPDX-License-Identifier: Apache-2.0
#include "starsec/scenario_io.hpp"

#include <fstream>
#include <set>

namespace starsec {

using nlohmann::json;

namespace {

Position3D position_from_json(const json& j, const std::string& key) {
    if (!j.is_array() || j.size() != 3)
        throw std::invalid_argument("scenario field '" + key +
                                    "' must be an array [x, y, z]");
    return {j[0].get<double>(), j[1].get<double>(), j[2].get<double>()};
}

json position_to_json(const Position3D& p) { return json::array({p.x, p.y, p.z}); }

const std::set<std::string>& known_keys() {
    static const std::set<std::string> keys = {
        "ap",          "uav",           "node_r",        "node_t",
        "eave_r",      "eave_t",        "power_r_dbm",   "power_t_dbm",
        "power_max_dbm", "noise_dbm",   "elements",      "lambda_r",
        "lambda_t",    "m_ur",          "m_rs",          "omega",
        "kappa",       "path_loss_exponent", "beta_db",  "w1",
        "w2",          "decode_first",  "eaves_mean_lambda_scaled"};
    return keys;
}

}  // namespace

ScenarioConfig default_scenario() { return ScenarioConfig{}; }

ScenarioConfig scenario_from_json(const json& doc, const ScenarioConfig& base) {
    if (!doc.is_object())
        throw std::invalid_argument("scenario document must be a JSON object");
    for (const auto& [key, value] : doc.items()) {
        (void)value;
        if (!key.empty() && key[0] == '_') continue;  // inline documentation
        if (known_keys().count(key) == 0)
            throw std::invalid_argument("unknown scenario field '" + key + "'");
    }

    ScenarioConfig s = base;
    const auto get = [&doc](const char* key) -> const json* {
        const auto it = doc.find(key);
        return it == doc.end() ? nullptr : &*it;
    };

    if (const json* j = get("ap")) s.ap = position_from_json(*j, "ap");
    if (const json* j = get("uav")) s.uav = position_from_json(*j, "uav");
    if (const json* j = get("node_r")) s.node_r = position_from_json(*j, "node_r");
    if (const json* j = get("node_t")) s.node_t = position_from_json(*j, "node_t");
    if (const json* j = get("eave_r")) s.eave_r = position_from_json(*j, "eave_r");
    if (const json* j = get("eave_t")) s.eave_t = position_from_json(*j, "eave_t");

    if (const json* j = get("power_r_dbm")) s.power_r_dbm = j->get<double>();
    if (const json* j = get("power_t_dbm")) s.power_t_dbm = j->get<double>();
    if (const json* j = get("power_max_dbm")) s.power_max_dbm = j->get<double>();
    if (const json* j = get("noise_dbm")) s.noise_dbm = j->get<double>();
    if (const json* j = get("elements")) s.elements = j->get<int>();

    const json* jlr = get("lambda_r");
    const json* jlt = get("lambda_t");
    if (jlr) s.lambda_r = jlr->get<double>();
    if (jlt) s.lambda_t = jlt->get<double>();
    if (jlr && !jlt) s.lambda_t = 1.0 - s.lambda_r;  // ES conservation completion
    if (jlt && !jlr) s.lambda_r = 1.0 - s.lambda_t;

    if (const json* j = get("m_ur")) s.m_ur = j->get<double>();
    if (const json* j = get("m_rs")) s.m_rs = j->get<double>();
    if (const json* j = get("omega")) s.omega = j->get<double>();
    if (const json* j = get("kappa")) s.kappa = j->get<double>();
    if (const json* j = get("path_loss_exponent")) s.path_loss_exponent = j->get<double>();
    if (const json* j = get("beta_db")) s.beta_db = j->get<double>();

    const json* jw1 = get("w1");
    const json* jw2 = get("w2");
    if (jw1) s.w1 = jw1->get<double>();
    if (jw2) s.w2 = jw2->get<double>();
    if (jw1 && !jw2) s.w2 = 1.0 - s.w1;
    if (jw2 && !jw1) s.w1 = 1.0 - s.w2;

    if (const json* j = get("decode_first")) {
        const std::string v = j->get<std::string>();
        if (v == "r")
            s.decode_first = Side::reflection;
        else if (v == "t")
            s.decode_first = Side::transmission;
        else
            throw std::invalid_argument("decode_first must be \"r\" or \"t\", got \"" +
                                        v + "\"");
    }
    if (const json* j = get("eaves_mean_lambda_scaled"))
        s.eaves_mean_lambda_scaled = j->get<bool>();
    return s;
}

json scenario_to_json(const ScenarioConfig& s) {
    json j;
    j["ap"] = position_to_json(s.ap);
    j["uav"] = position_to_json(s.uav);
    j["node_r"] = position_to_json(s.node_r);
    j["node_t"] = position_to_json(s.node_t);
    j["eave_r"] = position_to_json(s.eave_r);
    j["eave_t"] = position_to_json(s.eave_t);
    j["power_r_dbm"] = s.power_r_dbm;
    j["power_t_dbm"] = s.power_t_dbm;
    j["power_max_dbm"] = s.power_max_dbm;
    j["noise_dbm"] = s.noise_dbm;
    j["elements"] = s.elements;
    j["lambda_r"] = s.lambda_r;
    j["lambda_t"] = s.lambda_t;
    j["m_ur"] = s.m_ur;
    j["m_rs"] = s.m_rs;
    j["omega"] = s.omega;
    j["kappa"] = s.kappa;
    j["path_loss_exponent"] = s.path_loss_exponent;
    j["beta_db"] = s.beta_db;
    j["w1"] = s.w1;
    j["w2"] = s.w2;
    j["decode_first"] = side_name(s.decode_first);
    j["eaves_mean_lambda_scaled"] = s.eaves_mean_lambda_scaled;
    return j;
}

ScenarioConfig load_scenario(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot open scenario file '" + path + "'");
    json doc;
    try {
        doc = json::parse(in);
    } catch (const json::parse_error& e) {
        throw std::invalid_argument("scenario file '" + path + "': " + e.what());
    }
    ScenarioConfig s = scenario_from_json(doc);
    require_valid(s);
    return s;
}

void apply_override(json& doc, const std::string& key_value) {
    const auto eq = key_value.find('=');
    if (eq == std::string::npos || eq == 0)
        throw std::invalid_argument("override must look like key=value, got '" +
                                    key_value + "'");
    const std::string key = key_value.substr(0, eq);
    const std::string value = key_value.substr(eq + 1);
    json parsed;
    try {
        parsed = json::parse(value);
    } catch (const json::parse_error&) {
        parsed = value;  // bare string, e.g. decode_first=r
    }
    doc[key] = parsed;
}

json report_to_json(const SecrecyReport& r) {
    json j;
    j["c_q"] = r.c_q;
    j["c_qp"] = r.c_qp;
    j["c_e_q"] = r.c_e_q;
    j["c_e_qp"] = r.c_e_qp;
    j["r_sec_q"] = r.r_sec_q;
    j["r_sec_qp"] = r.r_sec_qp;
    j["r_sum"] = r.r_sum;
    j["wssr"] = r.wssr;
    j["method"] = rate_method_name(r.method);
    return j;
}

}  // namespace starsec
