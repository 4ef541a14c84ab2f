#include <json.hpp>

#include "manin/model.hpp"

namespace manin::model {

using nlohmann::json;

namespace {

poly::IPoly poly_from_json(const json& arr, const std::string& key) {
    if (!arr.is_array()) throw std::invalid_argument("\"" + key + "\" must be a coefficient array");
    std::vector<i128> c;
    for (const auto& v : arr) {
        if (!v.is_number_integer()) throw std::invalid_argument("\"" + key + "\": integer coefficients only");
        c.push_back(i128(v.get<long long>()));
    }
    return poly::IPoly(std::move(c));
}

json poly_to_json(const poly::IPoly& p) {
    json arr = json::array();
    for (i128 c : p.c) arr.push_back((long long)c);
    return arr;
}

}  // namespace

FamilySpec family_from_json(const std::string& text) {
    json j;
    try {
        j = json::parse(text);
    } catch (const json::parse_error& e) {
        throw std::invalid_argument(std::string("family spec: JSON parse error: ") + e.what());
    }
    if (!j.is_object() || !j.contains("variant") || !j["variant"].is_string())
        throw std::invalid_argument("family spec: top-level object with a \"variant\" string required");
    std::string variant = j["variant"].get<std::string>();
    if (variant == "norm_form") {
        if (!j.contains("min_poly"))
            throw std::invalid_argument("norm_form spec: missing \"min_poly\"");
        poly::IPoly f = poly_from_json(j["min_poly"], "min_poly");
        std::vector<CyclicTwist> twists;
        if (j.contains("twists")) {
            if (!j["twists"].is_array()) throw std::invalid_argument("\"twists\" must be an array");
            for (const auto& t : j["twists"]) {
                CyclicTwist tw;
                if (!t.contains("degree") || !t["degree"].is_number_integer())
                    throw std::invalid_argument("twist: integer \"degree\" required");
                tw.degree = t["degree"].get<int>();
                if (t.contains("disc")) {
                    if (!t["disc"].is_number_integer())
                        throw std::invalid_argument("twist: \"disc\" must be an integer");
                    tw.disc = t["disc"].get<long long>();
                } else if (tw.degree == 2) {
                    throw std::invalid_argument("twist: \"disc\" is required when degree = 2");
                }
                twists.push_back(tw);
            }
        }
        bool ld = j.value("linearly_disjoint", false);
        return FamilySpec::norm_form(arith::NormFormSpec::make(std::move(f)), std::move(twists), ld);
    }
    if (variant == "conic_bundle") {
        for (const char* key : {"f0", "f1", "f2"})
            if (!j.contains(key))
                throw std::invalid_argument(std::string("conic_bundle spec: missing \"") + key + "\"");
        return FamilySpec::conic_bundle(poly_from_json(j["f0"], "f0"), poly_from_json(j["f1"], "f1"),
                                        poly_from_json(j["f2"], "f2"));
    }
    if (variant == "diagonal_conics") return FamilySpec::diagonal_conics();
    throw std::invalid_argument("family spec: unknown variant \"" + variant + "\"");
}

std::string family_to_json(const FamilySpec& spec) {
    json j;
    if (std::holds_alternative<NormFormFamily>(spec.v)) {
        const auto& fam = std::get<NormFormFamily>(spec.v);
        j["variant"] = "norm_form";
        j["min_poly"] = poly_to_json(fam.field.min_poly);
        json tws = json::array();
        for (const CyclicTwist& tw : fam.twists) {
            json t;
            t["degree"] = tw.degree;
            if (tw.disc) t["disc"] = (long long)*tw.disc;
            tws.push_back(t);
        }
        j["twists"] = tws;
        j["linearly_disjoint"] = fam.linearly_disjoint;
    } else if (std::holds_alternative<ConicBundle>(spec.v)) {
        const auto& cb = std::get<ConicBundle>(spec.v);
        j["variant"] = "conic_bundle";
        j["f0"] = poly_to_json(cb.f0);
        j["f1"] = poly_to_json(cb.f1);
        j["f2"] = poly_to_json(cb.f2);
    } else {
        j["variant"] = "diagonal_conics";
    }
    return j.dump();
}

}  // namespace manin::model
