#pragma once

#include <string>

#include <json.hpp>

#include "khv/expansion.hpp"
#include "khv/homology.hpp"
#include "khv/polynomials.hpp"

namespace khv {

// JSON forms.  Coefficients are exact numerator/denominator string pairs,
// never floats; exponents are plain integers.

inline nlohmann::json to_json(const BigradedRanks& r) {
    nlohmann::json out = nlohmann::json::array();
    for (const auto& [ij, rank] : r.ranks)
        out.push_back({{"i", ij.first}, {"j", ij.second}, {"rank", rank}});
    return out;
}

inline BigradedRanks ranks_from_json(const nlohmann::json& j) {
    BigradedRanks r;
    for (const auto& e : j) r.ranks[{e.at("i").get<int>(), e.at("j").get<int>()}] = e.at("rank").get<int>();
    return r;
}

inline nlohmann::json to_json(const KhPoly& p) {
    nlohmann::json terms = nlohmann::json::array();
    for (const auto& [ij, c] : p.terms())
        terms.push_back({{"t", ij.first}, {"q", ij.second}, {"num", c.str()}, {"den", "1"}});
    return {{"vars", "t,q"}, {"terms", terms}};
}

inline KhPoly kh_from_json(const nlohmann::json& j) {
    KhPoly p;
    for (const auto& e : j.at("terms"))
        p.add(e.at("t").get<int>(), e.at("q").get<int>(), Int(e.at("num").get<std::string>()));
    return p;
}

inline nlohmann::json to_json(const VnPoly& p) {
    nlohmann::json terms = nlohmann::json::array();
    for (const auto& [ij, c] : p.poly.terms())
        terms.push_back({{"t", ij.first},
                         {"x", ij.second},
                         {"num", numerator(c).str()},
                         {"den", denominator(c).str()}});
    return {{"vars", "t,x"}, {"n", p.n}, {"terms", terms}};
}

inline VnPoly vn_from_json(const nlohmann::json& j) {
    VnPoly p;
    p.n = j.at("n").get<unsigned>();
    for (const auto& e : j.at("terms"))
        p.poly.add(e.at("t").get<int>(), e.at("x").get<int>(),
                   Rational(Int(e.at("num").get<std::string>()), Int(e.at("den").get<std::string>())));
    return p;
}

inline nlohmann::json to_json(const JonesPoly& p) {
    nlohmann::json terms = nlohmann::json::array();
    const bool normalized = p.form == JonesPoly::Form::normalized_r;
    for (const auto& [e, c] : p.coeffs.terms()) {
        nlohmann::json term{{"num", c.str()}, {"den", "1"}};
        // normalized exponents are stored doubled: key m means r^(m/2)
        term[normalized ? "r2" : "q"] = e;
        terms.push_back(std::move(term));
    }
    return {{"form", normalized ? "normalized_r" : "unnormalized_q"}, {"terms", terms}};
}

inline JonesPoly jones_from_json(const nlohmann::json& j) {
    JonesPoly p;
    const std::string form = j.at("form").get<std::string>();
    p.form = form == "normalized_r" ? JonesPoly::Form::normalized_r : JonesPoly::Form::unnormalized_q;
    const char* key = p.form == JonesPoly::Form::normalized_r ? "r2" : "q";
    for (const auto& e : j.at("terms")) p.coeffs.add(e.at(key).get<int>(), Int(e.at("num").get<std::string>()));
    return p;
}

inline nlohmann::json to_json(const BirmanLinSeries& s) {
    nlohmann::json out = nlohmann::json::array();
    for (size_t k = 0; k < s.u.size(); ++k)
        out.push_back({{"k", k}, {"num", numerator(s.u[k]).str()}, {"den", denominator(s.u[k]).str()}});
    return out;
}

}  // namespace khv
