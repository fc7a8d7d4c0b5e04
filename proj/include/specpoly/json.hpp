/*
   Copyright 2026 The specpoly Authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#ifndef SPECPOLY_JSON_HPP
#define SPECPOLY_JSON_HPP

#include <json.hpp>

#include <string>
#include <vector>

#include "eigensolver.hpp"
#include "families.hpp"
#include "operator.hpp"
#include "orthogonality.hpp"
#include "weights.hpp"

// Wire formats. Rationals are "num/den" strings ("num" when den = 1); polynomials are arrays
// of such strings in ascending degree order.

namespace specpoly::json {

using Json = nlohmann::ordered_json;

inline Json rational(const Rational& r) { return to_string(r); }

inline Rational parse_rational(const Json& j) {
    if (j.is_string()) return specpoly::parse_rational(j.get<std::string>());
    if (j.is_number_integer()) return Rational(j.get<long long>());
    throw InvalidArgument("expected a rational string, got " + j.dump());
}

inline Json poly(const Poly& p) {
    Json arr = Json::array();
    for (const auto& c : p.coeffs()) arr.push_back(to_string(c));
    return arr;
}

inline Poly parse_poly(const Json& j) {
    if (!j.is_array()) throw InvalidArgument("expected a coefficient array, got " + j.dump());
    std::vector<Rational> coeffs;
    for (const auto& c : j) coeffs.push_back(parse_rational(c));
    return Poly(std::move(coeffs));
}

inline Json polys(const std::vector<Poly>& ps) {
    Json arr = Json::array();
    for (const auto& p : ps) arr.push_back(poly(p));
    return arr;
}

/// {"a": [[a_0...], [a_1...], ...]}
inline Json diff_operator(const DiffOperator& op) { return Json{{"a", polys(op.coeffs())}}; }

/// Accepts the operator schema; unknown keys are ignored so richer documents (such as the
/// output of `normalize`) can be fed back in.
inline DiffOperator parse_operator(const Json& j) {
    if (!j.is_object() || !j.contains("a") || !j["a"].is_array())
        throw InvalidArgument("operator JSON needs an array field \"a\"");
    std::vector<Poly> coeffs;
    for (const auto& c : j["a"]) coeffs.push_back(parse_poly(c));
    return DiffOperator(std::move(coeffs));
}

inline Json family(const FamilySpec& f) {
    Json j{{"kind", std::string(to_string(f.kind))}};
    if (f.kind == FamilyKind::Jacobi) j["eps"] = f.eps;
    if (f.kind != FamilyKind::ChaudhryQadir) {
        j["alpha"] = rational(f.alpha);
        j["beta"] = rational(f.beta);
    }
    return j;
}

inline Json spectrum(const Spectrum& s) {
    Json values = Json::array();
    for (std::size_t j = 0; j < s.values.size(); ++j)
        values.push_back({{"degree", j},
                          {"eigenvalue_of_L", rational(s.values[j])},
                          {"lambda_ode_convention", rational(-s.values[j])}});
    Json mult = Json::array();
    for (const auto& [value, degrees] : s.multiplicity)
        if (degrees.size() > 1) mult.push_back({{"eigenvalue_of_L", rational(value)}, {"degrees", degrees}});
    return Json{{"values", values}, {"distinct", s.distinct()}, {"collisions", mult}};
}

inline Json eigen_result(const EigenResult& r) {
    return Json{{"degree", r.degree},
                {"eigenvalue_of_L", rational(r.eigenvalue)},
                {"lambda_ode_convention", rational(r.lambda_ode())},
                {"status", std::string(to_string(r.status))},
                {"monic", r.monic ? poly(*r.monic) : Json(nullptr)},
                {"eigenspace_dim", r.eigenspace_dim},
                {"basis", polys(r.basis)}};
}

inline Json interval(const Interval& I) {
    return Json{{"lo", I.lo ? rational(*I.lo) : Json("-inf")},
                {"hi", I.hi ? rational(*I.hi) : Json("inf")},
                {"lo_open", I.lo_open},
                {"hi_open", I.hi_open}};
}

inline Json weight(const WeightExpr& w) {
    Json factors = Json::array();
    for (const auto& f : w.power_factors) factors.push_back({{"root", rational(f.root)}, {"exp", rational(f.exponent)}});
    Json j{{"constant", rational(w.constant)}, {"power_factors", factors}};
    if (w.quad_exponent) j["quad_exp"] = rational(*w.quad_exponent);
    j["exp_poly"] = poly(w.exp_poly);
    j["arctan_coeff"] = rational(w.arctan_coeff);
    j["interval"] = interval(w.interval);
    return j;
}

inline Json endpoint(const EndpointVerdict& v) { return Json{{"ok", v.ok}, {"detail", v.detail}}; }

inline Json gram_entry(const GramEntry& e, const OrthoReport& rep) {
    Json j{{"m", e.m}, {"n", e.n}};
    if (e.exact)
        j["value"] = rational(*e.exact);
    else if (e.numeric)
        j["value"] = *e.numeric;
    else
        j["value"] = nullptr;
    j["method"] = std::string(to_string(e.method));
    j["integrable"] = e.integrable;
    j["err_est"] = e.error_estimate;
    if (e.m != e.n) {
        auto rel = rep.relative(e.m, e.n);
        j["relative"] = rel ? Json(*rel) : Json(nullptr);
    }
    return j;
}

inline Json ortho_report(const OrthoReport& rep) {
    Json eig = Json::array();
    for (auto d : rep.degrees) eig.push_back(eigen_result(rep.eigen[d]));
    Json excluded = Json::array();
    for (const auto& x : rep.excluded) excluded.push_back({{"degree", x.degree}, {"reason", x.reason}});
    Json entries = Json::array();
    for (const auto& e : rep.entries) entries.push_back(gram_entry(e, rep));
    return Json{{"family", rep.family ? family(*rep.family) : Json(nullptr)},
                {"max_degree", rep.max_degree},
                {"tol", rep.tol},
                {"weight", weight(rep.weight)},
                {"degrees", rep.degrees},
                {"excluded", excluded},
                {"eigenfunctions", eig},
                {"entries", entries},
                {"off_diagonal_max_relative", rep.off_diagonal_max_relative}};
}

inline Json finite_report(const FiniteOrthogonalityReport& rep) {
    Json pairs = Json::array();
    for (const auto& p : rep.pairs)
        pairs.push_back({{"m", p.m},
                         {"n", p.n},
                         {"verdict", std::string(to_string(p.verdict))},
                         {"relative", p.relative ? Json(*p.relative) : Json(nullptr)}});
    Json j = ortho_report(rep.gram);
    j["gamma"] = rational(rep.gamma);
    j["integrable_degree_sum_bound"] = rational(rep.integrable_degree_sum_bound);
    j["colliding_degrees"] = rep.colliding_degrees;
    j["pairs"] = pairs;
    return j;
}

inline Json normalization(const AffineNormalization& n) {
    return Json{{"s", rational(n.s)},
                {"t", rational(n.t)},
                {"c", rational(n.c)},
                {"normal_form", std::string(to_string(n.normal_form))}};
}

}  // namespace specpoly::json

#endif
