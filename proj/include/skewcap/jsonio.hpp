#pragma once

#include "skewcap/capelli.hpp"
#include "skewcap/forms.hpp"
#include "skewcap/opmatrix.hpp"
#include "skewcap/suite.hpp"
#include "skewcap/upoly.hpp"
#include "skewcap/weyl.hpp"

#include <json.hpp>

namespace skewcap {

// JSON renderings mirror the map structures, with exact "num/den" strings
// and "i,j" keys.

inline nlohmann::json to_json(const UPoly& p) {
    nlohmann::json j = nlohmann::json::object();
    for (const auto& [e, c] : p.coeffs()) j[std::to_string(e)] = c.to_string();
    return j;
}

inline nlohmann::json to_json(const WeylElement& w) {
    nlohmann::json terms = nlohmann::json::array();
    for (const auto& [m, c] : w.terms()) {
        nlohmann::json x = nlohmann::json::object(), d = nlohmann::json::object();
        for (const auto& [v, e] : m.xexp) x[std::to_string(v.i) + "," + std::to_string(v.j)] = e;
        for (const auto& [v, e] : m.dexp) d[std::to_string(v.i) + "," + std::to_string(v.j)] = e;
        terms.push_back({{"x", x}, {"d", d}, {"coeff", to_json(c)}});
    }
    return {{"n", w.n()}, {"terms", terms}};
}

inline nlohmann::json to_json(const ExtElement& w) {
    nlohmann::json terms = nlohmann::json::array();
    for (const auto& [idx, c] : w.terms()) {
        nlohmann::json labels = nlohmann::json::array();
        for (int r : idx.ranks) labels.push_back(label_of_rank(r, w.vdim()));
        terms.push_back({{"e", labels}, {"coeff", to_json(c)}});
    }
    return {{"vdim", w.vdim()}, {"n", w.coeff_n()}, {"terms", terms}};
}

inline nlohmann::json to_json(const OpMatrix& m) {
    nlohmann::json rows = nlohmann::json::array();
    for (int i = 1; i <= m.dim(); ++i) {
        nlohmann::json row = nlohmann::json::array();
        for (int j = 1; j <= m.dim(); ++j) row.push_back(to_json(m.at(i, j)));
        rows.push_back(row);
    }
    return rows;
}

inline nlohmann::json to_json(const MainIdentityReport& r) {
    return {{"n", r.n},
            {"backend", r.backend},
            {"pass", r.pass},
            {"delta_term_count", r.delta_term_count},
            {"pf_term_count", r.pf_term_count},
            {"millis", r.millis}};
}

inline nlohmann::json to_json(const SuiteReport& r) {
    nlohmann::json props = nlohmann::json::array();
    for (const auto& p : r.results)
        props.push_back({{"name", p.name}, {"passed", p.passed}, {"total", p.total}, {"ok", p.ok()}});
    return {{"seed", r.seed}, {"pass", r.all_pass()}, {"properties", props}};
}

}  // namespace skewcap
