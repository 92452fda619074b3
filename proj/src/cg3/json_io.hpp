// Canonical JSON wire format: diagrams as 6-tuples, coefficients as exact
// integer-string fractions, stable key order (byte-identical round trips).
#pragma once

#include "cg_engine.hpp"

#include <json.hpp>

namespace cg3 {

using json = nlohmann::ordered_json;

inline json diagram_to_json(const GTDiagram& d) {
    return json::array({d.m1, d.m2, d.m3, d.k1, d.k2, d.s});
}

inline json coeff_to_json(const Rational& r) {
    json j = json::object();
    j["num"] = boost::multiprecision::numerator(r).str();
    j["den"] = boost::multiprecision::denominator(r).str();
    return j;
}

inline json term_to_json(const CGTerm& t) {
    json j = json::object();
    j["diagram_u"] = diagram_to_json(t.diagram_u);
    j["diagram_v"] = diagram_to_json(t.diagram_v);
    j["coefficient"] = coeff_to_json(t.coeff);
    return j;
}

inline json terms_to_json(const std::vector<CGTerm>& ts) {
    json a = json::array();
    for (auto& t : ts) a.push_back(term_to_json(t));
    return a;
}

inline json label_to_json(const HighestVectorLabel& l) {
    return json::array({l.vtype, l.omega, l.phi, l.psi, l.theta});
}

inline json label_exponents_to_json(const HighestVectorLabel& l) {
    json j = json::object();
    j["alpha"] = l.alpha;
    j["beta"] = l.beta;
    j["gamma"] = l.gamma_e;
    j["delta"] = l.delta;
    j["omega"] = l.omega;
    j["phi"] = l.phi;
    j["psi"] = l.psi;
    j["theta"] = l.theta;
    return j;
}

inline json weight_to_json(const Weight3& w) {
    return json::array({w[0], w[1], w[2]});
}

}  // namespace cg3
