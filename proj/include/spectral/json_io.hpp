#pragma once

#include <json.hpp>

#include "spectral/decision.hpp"
#include "spectral/measure.hpp"
#include "spectral/spectra.hpp"

namespace spectral {

using ordered_json = nlohmann::ordered_json;

struct problem_instance {
    imat2 matrix;
    digit_set4 digits;
};

// Integers are accepted as JSON integers or as decimal strings (for values
// beyond 64 bits); exact values are always emitted as strings.
inline Int json_int(const ordered_json& j) {
    if (j.is_number_integer()) return Int(j.get<long long>());
    if (j.is_number_unsigned()) return Int(j.get<unsigned long long>());
    if (j.is_string()) {
        try {
            return Int(j.get<std::string>());
        } catch (const std::exception&) {
            fail(errc::invalid_input, "malformed integer '" + j.get<std::string>() + "'");
        }
    }
    fail(errc::invalid_input, "expected an integer, got " + j.dump());
}

inline Rat json_rat(const ordered_json& j) {
    if (j.is_string()) return parse_rat(j.get<std::string>());
    return Rat(json_int(j));
}

inline ordered_json to_json(const Int& v) { return v.str(); }
inline ordered_json to_json(const Rat& v) { return format_rat(v); }

inline ordered_json to_json(const ivec2& v) {
    return ordered_json::array({to_json(v.x), to_json(v.y)});
}
inline ordered_json to_json(const qvec2& v) {
    return ordered_json::array({to_json(v.x), to_json(v.y)});
}

inline ordered_json to_json(const imat2& m) {
    return ordered_json::array({ordered_json::array({to_json(m.a), to_json(m.b)}),
                                ordered_json::array({to_json(m.c), to_json(m.d)})});
}
inline ordered_json to_json(const qmat2& m) {
    return ordered_json::array({ordered_json::array({to_json(m.a), to_json(m.b)}),
                                ordered_json::array({to_json(m.c), to_json(m.d)})});
}

inline ordered_json to_json(const digit_set4& d) {
    return {{"alpha", ordered_json::array({to_json(d.alpha1), to_json(d.alpha2)})},
            {"beta", ordered_json::array({to_json(d.beta1), to_json(d.beta2)})}};
}

inline imat2 json_imat(const ordered_json& j) {
    if (!j.is_array() || j.size() != 2 || !j[0].is_array() || j[0].size() != 2 ||
        !j[1].is_array() || j[1].size() != 2)
        fail(errc::invalid_input, "matrix must be [[a,b],[c,d]]");
    return {json_int(j[0][0]), json_int(j[0][1]), json_int(j[1][0]), json_int(j[1][1])};
}

inline qmat2 json_qmat(const ordered_json& j) {
    if (!j.is_array() || j.size() != 2 || !j[0].is_array() || j[0].size() != 2 ||
        !j[1].is_array() || j[1].size() != 2)
        fail(errc::invalid_input, "matrix must be [[a,b],[c,d]]");
    return {json_rat(j[0][0]), json_rat(j[0][1]), json_rat(j[1][0]), json_rat(j[1][1])};
}

inline ivec2 json_ivec(const ordered_json& j) {
    if (!j.is_array() || j.size() != 2) fail(errc::invalid_input, "vector must be [x,y]");
    return {json_int(j[0]), json_int(j[1])};
}

inline qvec2 json_qvec(const ordered_json& j) {
    if (!j.is_array() || j.size() != 2) fail(errc::invalid_input, "vector must be [x,y]");
    return {json_rat(j[0]), json_rat(j[1])};
}

inline digit_set4 json_digits(const ordered_json& j) {
    if (!j.is_object() || !j.contains("alpha") || !j.contains("beta"))
        fail(errc::invalid_input, "digits must be {\"alpha\": [..], \"beta\": [..]}");
    ivec2 a = json_ivec(j.at("alpha"));
    ivec2 b = json_ivec(j.at("beta"));
    return {a.x, a.y, b.x, b.y};
}

inline problem_instance json_instance(const ordered_json& j) {
    if (!j.is_object() || !j.contains("matrix") || !j.contains("digits"))
        fail(errc::invalid_input, "instance must have \"matrix\" and \"digits\"");
    return {json_imat(j.at("matrix")), json_digits(j.at("digits"))};
}

inline ordered_json to_json(const problem_instance& inst) {
    return {{"matrix", to_json(inst.matrix)}, {"digits", to_json(inst.digits)}};
}

inline ordered_json to_json(const certificate& c) {
    ordered_json cbar = ordered_json::array();
    for (const auto& v : c.cbar) cbar.push_back(to_json(v));
    return {{"Q_chain", to_json(c.q_chain)},
            {"Mbar", to_json(c.mbar)},
            {"Dbar", to_json(c.dbar)},
            {"Cbar", cbar}};
}

inline certificate json_certificate(const ordered_json& j) {
    certificate c;
    c.q_chain = json_qmat(j.at("Q_chain"));
    c.mbar = json_imat(j.at("Mbar"));
    c.dbar = json_digits(j.at("Dbar"));
    const auto& cb = j.at("Cbar");
    if (!cb.is_array() || cb.size() != 4)
        fail(errc::invalid_input, "Cbar must hold 4 integer vectors");
    for (size_t i = 0; i < 4; ++i) c.cbar[i] = json_ivec(cb[i]);
    return c;
}

inline ordered_json to_json(const canonical_form& cf) {
    return {{"Q", to_json(cf.Q)},     {"Mtil", to_json(cf.Mtil)}, {"alpha", to_json(cf.alpha)},
            {"beta", to_json(cf.beta)}, {"omega", to_json(cf.omega)}, {"eta", cf.eta},
            {"gamma", to_json(cf.gamma)}};
}

inline ordered_json to_json(const decision& dec) {
    ordered_json violations = ordered_json::array();
    for (const auto& v : dec.violations) violations.push_back(v.message());
    ordered_json j{{"verdict", dec.spectral() ? "spectral" : "non-spectral"},
                   {"eta", dec.eta},
                   {"g", to_json(dec.canonical.g)},
                   {"canonical", to_json(dec.canonical)}};
    j["certificate"] = dec.cert ? to_json(*dec.cert) : ordered_json(nullptr);
    j["violations"] = violations;
    return j;
}

inline ordered_json to_json(const frequency_set& fs) {
    ordered_json freqs = ordered_json::array();
    for (const auto& f : fs.elements) freqs.push_back(to_json(f));
    return {{"level", fs.level}, {"count", fs.elements.size()}, {"frequencies", freqs}};
}

inline frequency_set json_frequency_set(const ordered_json& j) {
    frequency_set fs;
    fs.level = j.at("level").get<int>();
    for (const auto& f : j.at("frequencies")) fs.elements.push_back(json_qvec(f));
    return fs;
}

inline ordered_json to_json(const finite_measure_t& mu) {
    ordered_json atoms = ordered_json::array();
    for (const auto& a : mu.atoms) atoms.push_back(to_json(a));
    return {{"level", mu.level}, {"weight", to_json(mu.weight)}, {"atoms", atoms}};
}

} // namespace spectral
