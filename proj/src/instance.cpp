#include "gradmod/instance.hpp"

#include <fstream>
#include <sstream>

#include <json.hpp>

#include "gradmod/errors.hpp"

namespace gradmod {

using nlohmann::json;

InstanceFile instance_from_json_text(const std::string& text) {
    json j;
    try {
        j = json::parse(text);
    } catch (const json::parse_error& e) {
        throw ParseError(std::string("instance JSON: ") + e.what());
    }
    InstanceFile inst;
    try {
        inst.label = j.at("label").get<std::string>();
        inst.variables = j.at("variables").get<std::vector<std::string>>();
        inst.f = j.at("f").get<std::string>();
        inst.phi = j.at("phi").get<std::vector<std::vector<std::string>>>();
        if (j.contains("p")) inst.p = j.at("p").get<uint32_t>();
        if (j.contains("cap")) inst.cap = j.at("cap").get<int>();
        if (j.contains("seed")) inst.seed = j.at("seed").get<uint64_t>();
    } catch (const json::exception& e) {
        throw ParseError(std::string("instance JSON fields: ") + e.what());
    }
    if (inst.phi.empty()) throw ParseError("instance: phi must be a non-empty square matrix");
    for (const auto& row : inst.phi)
        if (row.size() != inst.phi.size())
            throw ParseError("instance: phi must be a square matrix");
    return inst;
}

InstanceFile instance_from_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open instance file: " + path);
    std::stringstream ss;
    ss << in.rdbuf();
    return instance_from_json_text(ss.str());
}

std::string instance_to_json_text(const InstanceFile& inst) {
    json j;
    j["label"] = inst.label;
    j["p"] = inst.p;
    j["variables"] = inst.variables;
    j["f"] = inst.f;
    j["phi"] = inst.phi;
    if (inst.cap) j["cap"] = *inst.cap;
    if (inst.seed) j["seed"] = *inst.seed;
    return j.dump(2);
}

Presentation instance_presentation(const InstanceFile& inst, int cap, uint32_t p_override) {
    uint32_t p = p_override ? p_override : inst.p;
    RingSpecPtr spec = make_ring_spec(inst.variables, p, cap);
    TruncPoly f = parse_poly(inst.f, spec);
    if (f.order() < 2)
        throw ValidationError("instance '" + inst.label + "': order(f) must be >= 2");
    std::vector<std::vector<TruncPoly>> phi(inst.phi.size());
    for (std::size_t i = 0; i < inst.phi.size(); ++i)
        for (const std::string& e : inst.phi[i]) phi[i].push_back(parse_poly(e, spec));
    Presentation pres = make_presentation(spec, std::move(phi), std::move(f), inst.label);
    validate_presentation(pres);
    return pres;
}

}  // namespace gradmod
