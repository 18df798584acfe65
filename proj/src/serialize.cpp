#include "isobound/serialize.hpp"

#include <sstream>
#include <stdexcept>

namespace isobound {

namespace {

constexpr const char* kToolName = "isobound";
constexpr const char* kToolVersion = "1.0.0";

Json value_to_json(const StepValue& v) {
    if (std::holds_alternative<Rational>(v))
        return Json(std::get<Rational>(v).to_string());
    return to_json(std::get<Enclosure>(v));
}

StepValue value_from_json(const Json& j) {
    if (j.is_string()) return Rational::from_string(j.get<std::string>());
    if (j.is_object()) return enclosure_from_json(j);
    throw std::invalid_argument("step value must be a \"p/q\" string or a {lo,hi} object");
}

}  // namespace

Json to_json(const Rational& x) { return Json(x.to_string()); }

Rational rational_from_json(const Json& j) {
    if (!j.is_string())
        throw std::invalid_argument("expected a rational as a \"p/q\" string");
    return Rational::from_string(j.get<std::string>());
}

Json to_json(const Enclosure& e) {
    Json j;
    j["lo"] = e.lo().to_string();
    j["hi"] = e.hi().to_string();
    return j;
}

Enclosure enclosure_from_json(const Json& j) {
    return Enclosure(rational_from_json(j.at("lo")), rational_from_json(j.at("hi")));
}

Json to_json(const OrbifoldSignature& s) {
    Json j;
    j["g"] = s.genus;
    j["r"] = s.punctures;
    j["cones"] = s.cones;
    return j;
}

OrbifoldSignature signature_from_json(const Json& j) {
    return OrbifoldSignature(j.at("g").get<int>(), j.at("r").get<int>(),
                             j.value("cones", std::vector<long>{}));
}

Json to_json(const Stratum& s) {
    Json j;
    j["key"] = s.key;
    j["kind"] = s.kind;
    j["bound"] = s.bound.to_string();
    Json w = Json::array();
    for (const auto& sig : s.witnesses) w.push_back(to_json(sig));
    j["witnesses"] = std::move(w);
    j["nodes"] = s.nodes;
    j["note"] = s.note;
    return j;
}

Json to_json(const MinimumCertificate& c) {
    Json j;
    j["minimum"] = c.minimum.to_string();
    Json w = Json::array();
    for (const auto& sig : c.witnesses) w.push_back(to_json(sig));
    j["witnesses"] = std::move(w);
    Json t = Json::array();
    for (const auto& s : c.trace) t.push_back(to_json(s));
    j["trace"] = std::move(t);
    return j;
}

Json to_json(const CensusEntry& e) {
    Json j;
    j["d"] = e.dessin.degree;
    j["s0"] = e.dessin.sigma0;
    j["s1"] = e.dessin.sigma1;
    j["genus"] = e.genus;
    j["passport"] = Json::array({e.passport.type0, e.passport.type1, e.passport.type_inf});
    j["aut"] = e.aut;
    return j;
}

static Json census_header(const Census& c) {
    Json h;
    h["tool"] = kToolName;
    h["version"] = kToolVersion;
    h["degree"] = c.degree;
    h["cap"] = c.cap;
    h["entries"] = c.entries.size();
    return h;
}

std::string census_to_json_lines(const Census& c) {
    std::ostringstream out;
    out << census_header(c).dump() << "\n";
    for (const auto& e : c.entries) out << to_json(e).dump() << "\n";
    return out.str();
}

Json census_to_json(const Census& c) {
    Json j;
    j["header"] = census_header(c);
    Json entries = Json::array();
    for (const auto& e : c.entries) entries.push_back(to_json(e));
    j["entries"] = std::move(entries);
    return j;
}

namespace {

Json steps_to_json_impl(const std::vector<CertStep>& steps) {
    Json arr = Json::array();
    for (const auto& s : steps) {
        Json step;
        step["label"] = s.label;
        step["lhs"] = value_to_json(s.lhs);
        step["rel"] = to_string(s.rel);
        step["rhs"] = value_to_json(s.rhs);
        step["ref"] = s.ref;
        step["certified"] = s.certified;
        step["bits"] = s.bits_used;
        arr.push_back(std::move(step));
    }
    return arr;
}

}  // namespace

Json to_json(const BoundCertificate& c) {
    Json j;
    j["case"] = to_string(c.branch);
    Json inputs;
    for (const auto& [key, value] : c.inputs) inputs[key] = value.to_string();
    j["inputs"] = std::move(inputs);
    j["steps"] = steps_to_json_impl(c.steps);
    j["final"] = c.final_bound.to_string();
    j["verified"] = c.verified;
    return j;
}

BoundCertificate certificate_from_json(const Json& j) {
    BoundCertificate c;
    c.branch = case_from_string(j.value("case", std::string("NON_ARITHMETIC")));
    if (j.contains("inputs"))
        for (const auto& [key, value] : j.at("inputs").items())
            c.inputs.emplace_back(key, rational_from_json(value));
    for (const auto& js : j.at("steps")) {
        CertStep s;
        s.label = js.at("label").get<std::string>();
        s.lhs = value_from_json(js.at("lhs"));
        s.rel = rel_from_string(js.at("rel").get<std::string>());
        s.rhs = value_from_json(js.at("rhs"));
        s.ref = js.value("ref", std::string());
        s.certified = js.value("certified", false);
        s.bits_used = js.value("bits", 0);
        c.steps.push_back(std::move(s));
    }
    c.final_bound = rational_from_json(j.at("final"));
    c.verified = j.at("verified").get<bool>();
    return c;
}

Json to_json(const InequalityReport& r) {
    Json j;
    Json items = Json::array();
    for (const auto& it : r.items) {
        Json item;
        item["label"] = it.label;
        item["certified"] = it.certified;
        item["bits"] = it.bits_used;
        items.push_back(std::move(item));
    }
    j["items"] = std::move(items);
    j["all_certified"] = r.all_certified;
    return j;
}

Json to_json(const FieldData& f) {
    Json j;
    j["n"] = f.degree_n;
    j["dF"] = f.abs_discriminant;
    j["zeta2"] = f.zeta2 ? to_json(*f.zeta2) : Json(nullptr);
    j["prime_norms"] = f.prime_norms;
    j["B"] = f.tail_cutoff;
    j["ramified"] = f.ramified_norms;
    return j;
}

FieldData field_from_json(const Json& j) {
    FieldData f;
    f.degree_n = j.at("n").get<long>();
    f.abs_discriminant = j.at("dF").get<long>();
    if (j.contains("zeta2") && !j.at("zeta2").is_null())
        f.zeta2 = enclosure_from_json(j.at("zeta2"));
    f.prime_norms = j.value("prime_norms", std::vector<long>{});
    f.tail_cutoff = j.value("B", 0L);
    f.ramified_norms = j.value("ramified", std::vector<long>{});
    return f;
}

}  // namespace isobound
