#include "balcurve/certificate.hpp"

#include "json.hpp"

namespace bc {

using nlohmann::ordered_json;

namespace {

ordered_json piece_json(const Piece& p) { return serialize_piece(p); }

Piece piece_from(const std::string& s) {
    auto ps = parse_pieces(s);
    if (ps.size() != 1) throw Error("ParseError", "certificate piece must hold exactly one curve or arc");
    return ps[0];
}

}  // namespace

std::string certificate_to_json(const Certificate& c) {
    ordered_json j;
    j["kind"] = c.kind == Certificate::Upper ? "upper" : "lower";
    j["value"] = c.value;
    j["eps"] = to_string(c.eps);
    j["coarse"] = c.coarse;
    j["a"] = serialize_curve(c.a);
    j["b"] = serialize_curve(c.b);
    ordered_json verts = ordered_json::object();
    for (const auto& [k, v] : c.vertices) verts[k] = serialize_curve(v);
    j["vertices"] = verts;
    ordered_json steps = ordered_json::array();
    for (const auto& s : c.steps) {
        ordered_json js;
        js["tag"] = s.tag;
        js["weight"] = s.weight;
        js["claim"] = s.claim;
        js["from"] = s.from;
        js["to"] = s.to;
        ordered_json data = ordered_json::object();
        for (const auto& [k, p] : s.data) data[k] = piece_json(p);
        js["data"] = data;
        js["facts"] = s.facts;
        steps.push_back(js);
    }
    j["steps"] = steps;
    j["facts"] = c.facts;
    if (!c.witness.empty()) j["witness"] = c.witness;
    return j.dump(2) + "\n";
}

Certificate certificate_from_json(const std::string& text) {
    ordered_json j;
    try {
        j = ordered_json::parse(text);
    } catch (const std::exception& e) {
        throw Error("ParseError", e.what());
    }
    try {
        Certificate c;
        std::string kind = j.at("kind").get<std::string>();
        if (kind != "upper" && kind != "lower") throw Error("ParseError", "unknown certificate kind " + kind);
        c.kind = kind == "upper" ? Certificate::Upper : Certificate::Lower;
        c.value = j.at("value").get<long>();
        c.eps = parse_rational(j.at("eps").get<std::string>());
        c.coarse = j.value("coarse", false);
        c.a = parse_single_curve(j.at("a").get<std::string>());
        c.b = parse_single_curve(j.at("b").get<std::string>());
        for (auto& [k, v] : j.at("vertices").items()) c.vertices[k] = parse_single_curve(v.get<std::string>());
        for (const auto& js : j.at("steps")) {
            CertStep s;
            s.tag = js.at("tag").get<std::string>();
            s.weight = js.at("weight").get<long>();
            s.claim = js.value("claim", "");
            s.from = js.at("from").get<std::string>();
            s.to = js.at("to").get<std::string>();
            for (auto& [k, v] : js.at("data").items()) s.data[k] = piece_from(v.get<std::string>());
            if (js.contains("facts")) s.facts = js.at("facts").get<std::map<std::string, std::string>>();
            c.steps.push_back(std::move(s));
        }
        if (j.contains("facts")) c.facts = j.at("facts").get<std::map<std::string, std::string>>();
        if (j.contains("witness")) c.witness = j.at("witness").get<std::string>();
        return c;
    } catch (const nlohmann::json::exception& e) {
        throw Error("ParseError", e.what());
    }
}

}  // namespace bc
