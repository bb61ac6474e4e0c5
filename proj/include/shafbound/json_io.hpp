#pragma once

#include <json.hpp>

#include <string>

#include "shafbound/bounds.hpp"
#include "shafbound/gotzmann.hpp"
#include "shafbound/hilbert.hpp"
#include "shafbound/magnitude.hpp"
#include "shafbound/ratpoly.hpp"

namespace shafbound {

using Json = nlohmann::ordered_json;

// All exact payloads travel as strings ("p", "p/q", decimal floats) so the
// round trip is bit-exact; JSON numbers appear only for small structural
// values (levels, dimensions, a-sequence entries).

inline Json ratpoly_to_json(const RatPoly& p) {
    Json arr = Json::array();
    for (const Rat& c : p.coeffs()) arr.push_back(rat_to_string(c));
    return arr;
}

inline RatPoly ratpoly_from_json(const Json& j) {
    if (!j.is_array()) throw ValidationError("polynomial must be a JSON array of rationals");
    std::vector<Rat> coeffs;
    coeffs.reserve(j.size());
    for (const auto& item : j) {
        if (item.is_string())
            coeffs.push_back(parse_rat(item.get<std::string>()));
        else if (item.is_number_integer())
            coeffs.push_back(Rat(Int(item.get<long long>())));
        else
            throw ValidationError("polynomial coefficients must be strings or integers");
    }
    return RatPoly(std::move(coeffs));
}

inline Json decomposition_to_json(const GotzmannDecomposition& d) {
    Json j;
    j["a"] = d.a_seq;
    j["length"] = d.length();
    return j;
}

inline Json length_table_to_json(const LengthTable& t) {
    Json j;
    Json ell = Json::array();
    // documented order: ell_{n+1}, ell_n, ..., ell_0
    for (std::size_t i = t.ell.size(); i-- > 0;) ell.push_back(t.ell[i].str());
    j["ell"] = std::move(ell);
    Json q = Json::array();
    for (const auto& row : t.q) {
        Json r = Json::array();
        for (const Rat& x : row) r.push_back(rat_to_string(x));
        q.push_back(std::move(r));
    }
    j["q"] = std::move(q);
    return j;
}

inline Json magnitude_to_json(const Magnitude& m) {
    Json j;
    j["level"] = m.level();
    switch (m.level()) {
        case 0: j["int"] = m.exact_value().str(); break;
        case 1: j["log10"] = real_to_string(m.log_payload()); break;
        default:
            j["loglog10"] = real_to_string(m.log_payload());
            j["enclosure_log10_width"] = real_to_string(m.enclosure_log10_width());
            break;
    }
    if (m.level() != 2 && m.has_enclosure())
        j["enclosure_log10_width"] = real_to_string(m.enclosure_log10_width());
    return j;
}

inline Magnitude magnitude_from_json(const Json& j) {
    const int level = j.at("level").get<int>();
    Magnitude m;
    switch (level) {
        case 0: m = Magnitude::exact(Int(j.at("int").get<std::string>())); break;
        case 1: m = Magnitude::from_log10(parse_real(j.at("log10").get<std::string>())); break;
        case 2: m = Magnitude::from_loglog10(parse_real(j.at("loglog10").get<std::string>())); break;
        default: throw ValidationError("magnitude level must be 0, 1 or 2");
    }
    if (j.contains("enclosure_log10_width"))
        m = m.with_enclosure_width(parse_real(j.at("enclosure_log10_width").get<std::string>()));
    return m;
}

inline Json polarization_to_json(const CanonicalPolarization& cp) {
    Json j;
    j["n"] = cp.n;
    j["v"] = rat_to_string(cp.volume);
    if (cp.hilbert) j["h"] = ratpoly_to_json(*cp.hilbert);
    return j;
}

inline CanonicalPolarization polarization_from_json(const Json& j) {
    CanonicalPolarization cp;
    cp.n = j.at("n").get<int>();
    const auto& v = j.at("v");
    cp.volume = v.is_string() ? parse_rat(v.get<std::string>()) : Rat(Int(v.get<long long>()));
    if (j.contains("h") && !j.at("h").is_null()) cp.hilbert = ratpoly_from_json(j.at("h"));
    cp.validate();
    return cp;
}

inline Json family_params_to_json(const FamilyParams& p) {
    Json j;
    j["g"] = p.g.str();
    j["s"] = p.s.str();
    j["n"] = p.n;
    j["v"] = rat_to_string(p.v);
    if (p.h)
        j["h"] = ratpoly_to_json(*p.h);
    else
        j["h"] = nullptr;
    j["a"] = p.a.str();
    return j;
}

inline FamilyParams family_params_from_json(const Json& j) {
    FamilyParams p;
    const auto read_int = [&](const char* key) {
        const auto& v = j.at(key);
        return v.is_string() ? Int(v.get<std::string>()) : Int(v.get<long long>());
    };
    p.g = read_int("g");
    p.s = read_int("s");
    p.n = j.at("n").get<int>();
    const auto& v = j.at("v");
    p.v = v.is_string() ? parse_rat(v.get<std::string>()) : Rat(Int(v.get<long long>()));
    if (j.contains("h") && !j.at("h").is_null()) p.h = ratpoly_from_json(j.at("h"));
    if (j.contains("a")) p.a = read_int("a");
    return p;
}

inline Json bound_report_to_json(const BoundReport& r, const FamilyParams& inputs, unsigned precision) {
    Json j;
    j["inputs"] = family_params_to_json(inputs);
    j["inputs"]["precision"] = precision;
    j["mode"] = r.mode;
    j["m0"] = r.m0.str();
    j["h_m0"] = r.h_m0.str();
    j["mu"] = r.mu.str();
    j["ell_star"] = magnitude_to_json(r.ell_star);
    j["delta_m0"] = r.delta_m0.str();
    j["d_1"] = r.d_1.str();
    j["N"] = r.N.str();
    j["d_const"] = magnitude_to_json(r.d_const);
    j["M"] = r.M.str();
    j["C"] = magnitude_to_json(r.C);
    return j;
}

/// Stable CSV header for flattened reports; documented in the README.
inline std::string bound_report_csv_header() {
    return "g,s,n,v,a,mode,precision,m0,h_m0,mu,ell_star_level,ell_star_value,delta_m0,d_1,N,M,"
           "d_level,d_value,C_level,C_value,C_enclosure_log10_width";
}

inline std::string magnitude_csv_value(const Magnitude& m) {
    switch (m.level()) {
        case 0: return m.exact_value().str();
        case 1: return real_to_string(m.log_payload());
        default: return real_to_string(m.log_payload());
    }
}

inline std::string bound_report_csv_row(const BoundReport& r, const FamilyParams& inputs,
                                        unsigned precision) {
    std::string row;
    row += inputs.g.str() + "," + inputs.s.str() + "," + std::to_string(inputs.n) + ",";
    row += rat_to_string(inputs.v) + "," + inputs.a.str() + "," + r.mode + ",";
    row += std::to_string(precision) + ",";
    row += r.m0.str() + "," + r.h_m0.str() + "," + r.mu.str() + ",";
    row += std::to_string(r.ell_star.level()) + "," + magnitude_csv_value(r.ell_star) + ",";
    row += r.delta_m0.str() + "," + r.d_1.str() + "," + r.N.str() + "," + r.M.str() + ",";
    row += std::to_string(r.d_const.level()) + "," + magnitude_csv_value(r.d_const) + ",";
    row += std::to_string(r.C.level()) + "," + magnitude_csv_value(r.C) + ",";
    row += real_to_string(r.C.enclosure_log10_width());
    return row;
}

}  // namespace shafbound
