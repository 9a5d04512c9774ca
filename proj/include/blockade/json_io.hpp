#pragma once

#include "ext_calculus.hpp"
#include "margaux.hpp"

#include "json.hpp"

#include <string>
#include <vector>

namespace blockade::io {

using json = nlohmann::json;

/// Parse failures carry the JSON path of the offending value so the CLI can
/// point at it.
inline invalid_input bad(const std::string& path, const std::string& why) {
    return invalid_input(path + ": " + why);
}

inline long long parse_int(const json& j, const std::string& path) {
    if (!j.is_number_integer())
        throw bad(path, "expected an integer");
    return j.get<long long>();
}

inline Int parse_big_int(const json& j, const std::string& path) {
    if (j.is_number_integer())
        return to_int(j.get<long long>());
    if (j.is_string()) {
        const std::string s = j.get<std::string>();
        if (s.empty() || s.find_first_not_of("-0123456789") != std::string::npos)
            throw bad(path, "expected an integer");
        return Int(s);
    }
    throw bad(path, "expected an integer");
}

/// Exact rational as a two-element array [num, den].
inline Rat parse_rational(const json& j, const std::string& path) {
    if (!j.is_array() || j.size() != 2)
        throw bad(path, "expected an exact pair [num, den]");
    const Int num = parse_big_int(j[0], path + "[0]");
    const Int den = parse_big_int(j[1], path + "[1]");
    if (den == 0)
        throw bad(path + "[1]", "zero denominator");
    return make_rat(num, den);
}

inline json rational_to_json(const Rat& q) {
    auto big = [](const Int& v) -> json {
        if (v.fits_slong_p())
            return json(v.get_si());
        return json(v.get_str());
    };
    return json::array({big(q.get_num()), big(q.get_den())});
}

/// Exact complex number {"re": [num, den], "im": [num, den]}.
inline GaussianRat parse_exact_complex(const json& j, const std::string& path) {
    if (!j.is_object() || !j.contains("re") || !j.contains("im"))
        throw bad(path, "expected an object with exact \"re\" and \"im\" pairs");
    GaussianRat z;
    z.re = parse_rational(j.at("re"), path + ".re");
    z.im = parse_rational(j.at("im"), path + ".im");
    return z;
}

inline json exact_complex_to_json(const GaussianRat& z) {
    return json{{"re", rational_to_json(z.re)}, {"im", rational_to_json(z.im)}};
}

inline Weight parse_weight(const json& j, const std::string& path) {
    if (!j.is_array())
        throw bad(path, "expected a coordinate array");
    std::vector<long long> coords;
    coords.reserve(j.size());
    for (std::size_t i = 0; i < j.size(); ++i)
        coords.push_back(parse_int(j[i], path + "[" + std::to_string(i) + "]"));
    return Weight(std::move(coords));
}

inline json weight_to_json(const Weight& w) {
    return json(w.coords);
}

/// Orbit space file:
/// {"points": [...], "generators": [{"p": "q", ...}, ...], "cotangent": {"p": d, ...}}
inline OrbitSpace parse_orbit_space(const json& j, const std::string& path) {
    if (!j.is_object())
        throw bad(path, "expected an orbit space object");
    for (const char* key : {"points", "generators", "cotangent"})
        if (!j.contains(key))
            throw bad(path, std::string("missing \"") + key + "\"");

    const json& jp = j.at("points");
    if (!jp.is_array())
        throw bad(path + ".points", "expected an array of point names");
    std::vector<std::string> points;
    for (std::size_t i = 0; i < jp.size(); ++i) {
        if (!jp[i].is_string())
            throw bad(path + ".points[" + std::to_string(i) + "]", "expected a point name");
        points.push_back(jp[i].get<std::string>());
    }

    const json& jg = j.at("generators");
    if (!jg.is_array())
        throw bad(path + ".generators", "expected an array of permutation objects");
    std::vector<std::map<std::string, std::string>> generators;
    for (std::size_t g = 0; g < jg.size(); ++g) {
        const std::string gpath = path + ".generators[" + std::to_string(g) + "]";
        if (!jg[g].is_object())
            throw bad(gpath, "expected a permutation object");
        std::map<std::string, std::string> gen;
        for (const auto& [from, to] : jg[g].items()) {
            if (!to.is_string())
                throw bad(gpath + "." + from, "expected a point name");
            gen[from] = to.get<std::string>();
        }
        generators.push_back(std::move(gen));
    }

    const json& jc = j.at("cotangent");
    if (!jc.is_object())
        throw bad(path + ".cotangent", "expected an object of per-orbit dimensions");
    std::map<std::string, long long> cotangent;
    for (const auto& [point, dim] : jc.items())
        cotangent[point] = parse_int(dim, path + ".cotangent." + point);

    try {
        return OrbitSpace(std::move(points), std::move(generators), std::move(cotangent));
    } catch (const invalid_input& e) {
        throw bad(path, e.what());
    }
}

inline json orbit_space_to_json(const OrbitSpace& os) {
    json gens = json::array();
    for (const auto& gen : os.generators()) {
        json g = json::object();
        for (const auto& [from, to] : gen)
            g[from] = to;
        gens.push_back(std::move(g));
    }
    json cot = json::object();
    for (const auto& [rep, d] : os.cotangent_by_rep())
        cot[rep] = d;
    return json{{"points", os.points()}, {"generators", std::move(gens)},
                {"cotangent", std::move(cot)}};
}

/// Module descriptor file: {"point": [coords], ...}
inline EvalModuleDescriptor parse_module_descriptor(const json& j, const std::string& path) {
    if (!j.is_object())
        throw bad(path, "expected an object mapping points to weight coordinate arrays");
    EvalModuleDescriptor d;
    for (const auto& [point, coords] : j.items())
        d.assignments.emplace(point, parse_weight(coords, path + "." + point));
    return d;
}

inline json module_descriptor_to_json(const EvalModuleDescriptor& d) {
    json out = json::object();
    for (const auto& [point, w] : d.assignments)
        out[point] = weight_to_json(w);
    return out;
}

/// Margaux module family file:
/// [{"a": {"re": [..], "im": [..]}, "b": {...}, "m": n}, ...]
inline std::vector<MargauxModule> parse_margaux_modules(const json& j, const std::string& path) {
    if (!j.is_array())
        throw bad(path, "expected an array of margaux modules");
    std::vector<MargauxModule> out;
    for (std::size_t i = 0; i < j.size(); ++i) {
        const std::string mpath = path + "[" + std::to_string(i) + "]";
        const json& m = j[i];
        if (!m.is_object() || !m.contains("a") || !m.contains("b") || !m.contains("m"))
            throw bad(mpath, "expected an object with \"a\", \"b\" and \"m\"");
        MargauxModule mod;
        mod.point.a = parse_exact_complex(m.at("a"), mpath + ".a");
        mod.point.b = parse_exact_complex(m.at("b"), mpath + ".b");
        mod.m = parse_int(m.at("m"), mpath + ".m");
        out.push_back(std::move(mod));
    }
    return out;
}

inline json margaux_block_to_json(const MargauxBlockDescriptor& d) {
    json out = json::array();
    for (const auto& entry : d.entries)
        out.push_back(json{{"a", exact_complex_to_json(entry.point.a)},
                           {"b", exact_complex_to_json(entry.point.b)},
                           {"m", entry.residue}});
    return out;
}

inline json fundamental_group_element_to_json(const FundamentalGroupElement& e) {
    return json{{"residues", e.canonical_rep}, {"orders", e.group_shape}};
}

inline json spectral_character_to_json(const SpectralCharacter& sc) {
    json out = json::object();
    for (const auto& [rep, e] : sc.assignments)
        out[rep] = fundamental_group_element_to_json(e);
    return out;
}

}  // namespace blockade::io
