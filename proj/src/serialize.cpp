#include "fintop/serialize.hpp"

#include <charconv>

#include <nlohmann/json.hpp>

#include "fintop/errors.hpp"
#include "fintop/generators.hpp"

namespace fintop {

namespace {

using nlohmann::json;
using nlohmann::ordered_json;

json parse_text(std::string_view text) {
    try {
        return json::parse(text);
    } catch (const json::exception& e) {
        throw Error(Errc::parse_error, e.what());
    }
}

void check_keys(const json& j, std::initializer_list<const char*> allowed,
                const char* what) {
    for (const auto& [key, value] : j.items()) {
        bool known = false;
        for (const char* k : allowed)
            if (key == k) {
                known = true;
                break;
            }
        if (!known)
            throw Error(Errc::parse_error,
                        std::string(what) + " has an unexpected field \"" + key + "\"");
    }
}

int parse_points(const json& j, const char* what) {
    if (!j.contains("points") || !j["points"].is_number_integer() || j["points"].get<int>() < 0)
        throw Error(Errc::parse_error,
                    std::string(what) + " needs a nonnegative integer \"points\" field");
    return j["points"].get<int>();
}

FiniteSpace space_from_json(const json& j) {
    if (!j.is_object()) throw Error(Errc::parse_error, "space document must be an object");
    check_keys(j, {"points", "opens", "name"}, "space document");
    const int n = parse_points(j, "space document");
    if (!j.contains("opens") || !j["opens"].is_array())
        throw Error(Errc::parse_error, "space document needs an \"opens\" array");
    if (j.contains("name") && !j["name"].is_string())
        throw Error(Errc::parse_error, "space \"name\" must be a string");
    std::vector<Mask> family;
    family.reserve(j["opens"].size());
    for (const json& open : j["opens"]) {
        if (!open.is_array()) throw Error(Errc::parse_error, "each open must be an array of points");
        Mask m = 0;
        for (const json& point : open) {
            if (!point.is_number_integer())
                throw Error(Errc::parse_error, "each point must be an integer");
            const long long p = point.get<long long>();
            if (p < 0 || p >= n)
                throw Error(Errc::index_out_of_range,
                            "point " + std::to_string(p) + " is not in a carrier of size " +
                                std::to_string(n));
            m |= point_bit(static_cast<int>(p));
        }
        family.push_back(m);
    }
    return validate_topology(n, std::move(family));
}

ordered_json space_to_json(const FiniteSpace& space) {
    ordered_json j;
    j["points"] = space.n;
    ordered_json opens = ordered_json::array();
    for (Mask o : space.opens) opens.push_back(set_points(o));
    j["opens"] = std::move(opens);
    return j;
}

FiniteSpace space_from_field(const json& j, const char* field) {
    if (!j.contains(field))
        throw Error(Errc::parse_error, "map document needs a \"" + std::string(field) + "\" field");
    const json& value = j[field];
    if (value.is_string()) return resolve_space_reference(value.get<std::string>());
    if (value.is_object()) return space_from_json(value);
    throw Error(Errc::parse_error,
                "\"" + std::string(field) + "\" must be a space object or a reference string");
}

int parse_suffix_int(std::string_view text) {
    int value = 0;
    const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
    if (ec != std::errc{} || ptr != text.data() + text.size() || value < 0)
        throw Error(Errc::parse_error,
                    "expected a nonnegative point count, got \"" + std::string(text) + "\"");
    return value;
}

}  // namespace

FiniteSpace parse_space(std::string_view text) { return space_from_json(parse_text(text)); }

std::string serialize_space(const FiniteSpace& space) { return space_to_json(space).dump(); }

ContinuousMap parse_map(std::string_view text) {
    const json j = parse_text(text);
    if (!j.is_object()) throw Error(Errc::parse_error, "map document must be an object");
    check_keys(j, {"dom", "cod", "assignment", "name"}, "map document");
    if (j.contains("name") && !j["name"].is_string())
        throw Error(Errc::parse_error, "map \"name\" must be a string");
    FiniteSpace dom = space_from_field(j, "dom");
    FiniteSpace cod = space_from_field(j, "cod");
    if (!j.contains("assignment") || !j["assignment"].is_array())
        throw Error(Errc::parse_error, "map document needs an \"assignment\" array");
    std::vector<int> assignment;
    assignment.reserve(j["assignment"].size());
    for (const json& v : j["assignment"]) {
        if (!v.is_number_integer())
            throw Error(Errc::parse_error, "each assignment entry must be an integer");
        assignment.push_back(v.get<int>());
    }
    return make_map(std::move(dom), std::move(cod), std::move(assignment));
}

std::string serialize_map(const ContinuousMap& f) {
    ordered_json j;
    j["dom"] = space_to_json(f.dom);
    j["cod"] = space_to_json(f.cod);
    j["assignment"] = f.assignment;
    return j.dump();
}

FiniteSpace resolve_space_reference(std::string_view ref) {
    if (ref == "sierpinski") return sierpinski_space();
    if (ref == "pseudo_circle") return pseudo_circle_space();
    if (ref == "point") return discrete_space(1);
    constexpr std::string_view discrete_prefix = "discrete:";
    constexpr std::string_view indiscrete_prefix = "indiscrete:";
    if (ref.substr(0, discrete_prefix.size()) == discrete_prefix)
        return discrete_space(parse_suffix_int(ref.substr(discrete_prefix.size())));
    if (ref.substr(0, indiscrete_prefix.size()) == indiscrete_prefix)
        return indiscrete_space(parse_suffix_int(ref.substr(indiscrete_prefix.size())));
    throw Error(Errc::parse_error, "unknown space reference \"" + std::string(ref) + "\"");
}

}  // namespace fintop
