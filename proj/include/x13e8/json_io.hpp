#pragma once

#include <numeric>
#include <string>

#include <json.hpp>

#include "x13e8/field.hpp"
#include "x13e8/matrix.hpp"
#include "x13e8/polynomial.hpp"
#include "x13e8/series.hpp"

namespace x13e8 {

/// FieldElement <-> JSON array of "num/den" coordinate strings.
inline nlohmann::ordered_json field_element_to_json(const FieldElement& e) {
    nlohmann::ordered_json arr = nlohmann::ordered_json::array();
    for (const auto& c : e.coords()) arr.push_back(c.str());
    return arr;
}

inline FieldElement field_element_from_json(const FieldSpec* spec, const nlohmann::json& j) {
    std::vector<Rational> coords;
    for (const auto& s : j) coords.push_back(Rational::parse(s.get<std::string>()));
    return FieldElement(spec, std::move(coords));
}

/// FieldSpec is serialized by its modulus coefficient list (monic tail).
inline nlohmann::ordered_json field_spec_to_json(const FieldSpec& spec) {
    nlohmann::ordered_json j;
    j["name"] = spec.name();
    nlohmann::ordered_json mod = nlohmann::ordered_json::array();
    for (const auto& c : spec.modulus_tail()) mod.push_back(c.str());
    mod.push_back("1");
    j["modulus"] = mod;
    j["degree"] = spec.degree();
    return j;
}

/// {vars, terms: [{exps, coeff}]} in the canonical graded-lex term order.
inline nlohmann::ordered_json polynomial_to_json(const SparsePolynomial& p) {
    nlohmann::ordered_json j;
    j["vars"] = p.ring().vars;
    nlohmann::ordered_json terms = nlohmann::ordered_json::array();
    for (const auto& [m, c] : p.terms()) {
        nlohmann::ordered_json t;
        t["exps"] = m.e;
        t["coeff"] = field_element_to_json(c);
        terms.push_back(t);
    }
    j["terms"] = terms;
    return j;
}

inline nlohmann::ordered_json matrix_to_json(const SquareMatrix& m) {
    nlohmann::ordered_json rows = nlohmann::ordered_json::array();
    for (int i = 0; i < m.dim(); ++i) {
        nlohmann::ordered_json row = nlohmann::ordered_json::array();
        for (int j = 0; j < m.dim(); ++j) row.push_back(field_element_to_json(m.at(i, j)));
        rows.push_back(row);
    }
    return rows;
}

/// {denominator, entries: [[numerator, coeff], ...]} ascending in exponent.
inline nlohmann::ordered_json series_to_json(const RationalSeries& s) {
    nlohmann::ordered_json j;
    j["denominator"] = s.context()->denominator;
    nlohmann::ordered_json entries = nlohmann::ordered_json::array();
    for (long u : s.support()) entries.push_back({u, s.coeff_at(u).str()});
    j["entries"] = entries;
    return j;
}

/// Plain-text dump: one "num/N : coeff" line per nonzero coefficient.
inline std::string series_to_text(const RationalSeries& s) {
    std::string out;
    for (long u : s.support()) {
        out += std::to_string(u) + "/" + std::to_string(s.context()->denominator) + " : " + s.coeff_at(u).str() + "\n";
    }
    return out;
}

/// Leading-term display in the classical style, e.g. "q^{51/104}(3 + O(q))".
inline std::string leading_term_text(const RationalSeries& s) {
    auto lead = s.leading();
    if (!lead) return "0 (through known order)";
    long num = lead->first;
    long den = s.context()->denominator;
    long g = std::gcd(num, den);
    std::string expo = den / g == 1 ? std::to_string(num / g)
                                    : std::to_string(num / g) + "/" + std::to_string(den / g);
    return "q^{" + expo + "}(" + lead->second.str() + " + O(q))";
}

}  // namespace x13e8
