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

#ifndef SPECPOLY_FAMILIES_HPP
#define SPECPOLY_FAMILIES_HPP

#include <map>
#include <optional>
#include <string>
#include <string_view>

#include "errors.hpp"
#include "operator.hpp"
#include "poly.hpp"

namespace specpoly {

enum class FamilyKind { Jacobi, Laguerre, Hermite, Romanovski, ChaudhryQadir };

inline std::string_view to_string(FamilyKind k) {
    switch (k) {
        case FamilyKind::Jacobi: return "jacobi";
        case FamilyKind::Laguerre: return "laguerre";
        case FamilyKind::Hermite: return "hermite";
        case FamilyKind::Romanovski: return "romanovski";
        case FamilyKind::ChaudhryQadir: return "chaudhry-qadir";
    }
    return "?";
}

inline FamilyKind parse_family_kind(std::string_view name) {
    if (name == "jacobi") return FamilyKind::Jacobi;
    if (name == "laguerre") return FamilyKind::Laguerre;
    if (name == "hermite") return FamilyKind::Hermite;
    if (name == "romanovski") return FamilyKind::Romanovski;
    if (name == "chaudhry-qadir") return FamilyKind::ChaudhryQadir;
    throw InvalidArgument("unknown family '" + std::string(name) + "'");
}

/**
 * Parameters of a second-order family a(x) y'' + (alpha x + beta) y'.
 *
 *   jacobi, eps = -1 : a = 1 - x^2
 *   jacobi, eps = +1 : a = x^2 + 1 (same operator as romanovski)
 *   laguerre         : a = x
 *   hermite          : a = 1
 *   romanovski       : a = 1 + x^2
 *   chaudhry-qadir   : t(1 - t) y'' + (1 - t) y', no free parameters
 */
struct FamilySpec {
    FamilyKind kind = FamilyKind::Jacobi;
    int eps = -1;
    Rational alpha = 0;
    Rational beta = 0;

    static FamilySpec jacobi(int eps, Rational alpha, Rational beta) {
        if (eps != 1 && eps != -1) throw InvalidArgument("eps must be +1 or -1");
        return {FamilyKind::Jacobi, eps, std::move(alpha), std::move(beta)};
    }
    static FamilySpec laguerre(Rational alpha, Rational beta) {
        return {FamilyKind::Laguerre, 0, std::move(alpha), std::move(beta)};
    }
    static FamilySpec hermite(Rational alpha, Rational beta) {
        return {FamilyKind::Hermite, 0, std::move(alpha), std::move(beta)};
    }
    static FamilySpec romanovski(Rational alpha, Rational beta) {
        return {FamilyKind::Romanovski, 1, std::move(alpha), std::move(beta)};
    }
    static FamilySpec chaudhry_qadir() { return {FamilyKind::ChaudhryQadir, 0, 0, 0}; }

    friend bool operator==(const FamilySpec&, const FamilySpec&) = default;
};

inline Poly leading_coefficient(const FamilySpec& spec) {
    switch (spec.kind) {
        case FamilyKind::Jacobi: return spec.eps < 0 ? Poly{1, 0, -1} : Poly{1, 0, 1};
        case FamilyKind::Laguerre: return Poly{0, 1};
        case FamilyKind::Hermite: return Poly{1};
        case FamilyKind::Romanovski: return Poly{1, 0, 1};
        case FamilyKind::ChaudhryQadir: return Poly{0, 1, -1};
    }
    return {};
}

inline Poly first_order_coefficient(const FamilySpec& spec) {
    if (spec.kind == FamilyKind::ChaudhryQadir) return Poly{1, -1};
    return Poly{spec.beta, spec.alpha};
}

inline DiffOperator build_operator(const FamilySpec& spec) {
    return DiffOperator({Poly{}, first_order_coefficient(spec), leading_coefficient(spec)});
}

/// Named presets. Chebyshev kinds follow the standard ODEs: T <-> alpha = -1, U <-> alpha = -3.
/// The Laguerre preset x y'' + (1 - x) y' is the classical Laguerre operator.
inline std::map<std::string, FamilySpec> classical_presets() {
    return {
        {"legendre", FamilySpec::jacobi(-1, -2, 0)},
        {"chebyshev1", FamilySpec::jacobi(-1, -1, 0)},
        {"chebyshev2", FamilySpec::jacobi(-1, -3, 0)},
        {"hermite", FamilySpec::hermite(-2, 0)},
        {"laguerre", FamilySpec::laguerre(-1, 1)},
    };
}

/// classical_presets() plus the non-classical chaudhry-qadir operator.
inline std::map<std::string, FamilySpec> named_presets() {
    auto presets = classical_presets();
    presets.emplace("chaudhry-qadir", FamilySpec::chaudhry_qadir());
    return presets;
}

inline FamilySpec preset(std::string_view name) {
    auto presets = named_presets();
    auto it = presets.find(std::string(name));
    if (it == presets.end()) throw InvalidArgument("unknown preset '" + std::string(name) + "'");
    return it->second;
}

// ---------------------------------------------------------------------------
// Bochner normalization

enum class NormalForm { XSquaredMinusOne, XSquaredPlusOne, XSquared, X, One };

inline std::string_view to_string(NormalForm f) {
    switch (f) {
        case NormalForm::XSquaredMinusOne: return "x^2-1";
        case NormalForm::XSquaredPlusOne: return "x^2+1";
        case NormalForm::XSquared: return "x^2";
        case NormalForm::X: return "x";
        case NormalForm::One: return "1";
    }
    return "?";
}

inline Poly normal_form_poly(NormalForm f) {
    switch (f) {
        case NormalForm::XSquaredMinusOne: return Poly{-1, 0, 1};
        case NormalForm::XSquaredPlusOne: return Poly{1, 0, 1};
        case NormalForm::XSquared: return Poly{0, 0, 1};
        case NormalForm::X: return Poly{0, 1};
        case NormalForm::One: return Poly{1};
    }
    return {};
}

/// a(s*u + t) == c * normal_form(u). s > 0 always; c carries the sign of the leading
/// coefficient, so 1 - x^2 normalizes with c = -1.
struct AffineNormalization {
    Rational s = 1;
    Rational t = 0;
    Rational c = 1;
    NormalForm normal_form = NormalForm::One;
};

/// Exact square root of a nonnegative rational, if it has one.
inline std::optional<Rational> rational_sqrt(const Rational& q) {
    if (q < 0) return std::nullopt;
    const Integer num = boost::multiprecision::numerator(q);
    const Integer den = boost::multiprecision::denominator(q);
    const Integer rn = boost::multiprecision::sqrt(num);
    const Integer rd = boost::multiprecision::sqrt(den);
    if (rn * rn != num || rd * rd != den) return std::nullopt;
    return Rational(rn, rd);
}

inline AffineNormalization bochner_normalize(const Poly& a) {
    const auto deg = a.degree();
    if (!deg) throw InvalidArgument("cannot normalize the zero polynomial");
    if (*deg > 2) throw InvalidArgument("normalization needs deg(a) <= 2, got " + std::to_string(*deg));

    if (*deg == 0) return {1, 0, a.coeff(0), NormalForm::One};
    if (*deg == 1) {
        // t at the root; s = 1 leaves c = a1.
        const Rational a1 = a.coeff(1);
        const Rational root = -a.coeff(0) / a1;
        return {1, root, a1, NormalForm::X};
    }

    const Rational a2 = a.coeff(2), a1 = a.coeff(1), a0 = a.coeff(0);
    const Rational t = -a1 / (2 * a2);
    const Rational disc = a1 * a1 - 4 * a2 * a0;
    if (disc == 0) return {1, t, a2, NormalForm::XSquared};

    // a(s u + t) = a2 s^2 u^2 + a(t) and a(t) = -disc / (4 a2).
    const Rational s_sq = (disc > 0 ? disc : Rational(-disc)) / (4 * a2 * a2);
    const auto s = rational_sqrt(s_sq);
    if (!s)
        throw UnsupportedLeadingCoefficient("leading coefficient " + to_string(a) +
                                            " needs an irrational scale to normalize");
    return {*s, t, a2 * s_sq, disc > 0 ? NormalForm::XSquaredMinusOne : NormalForm::XSquaredPlusOne};
}

/// The second-order operator rewritten in the normalized variable u (x = s u + t), divided by
/// c / s^2 so that its leading coefficient is exactly the normal form.
inline DiffOperator normalized_operator(const DiffOperator& op, const AffineNormalization& n) {
    if (op.order() != 2) throw InvalidArgument("normalization applies to second-order operators");
    const Rational k = n.s * n.s / n.c;
    std::vector<Poly> coeffs(3);
    for (std::size_t order = 0; order <= 2; ++order) {
        // y^(order)(x) = s^-order Y^(order)(u); rescale so a_2 becomes the normal form.
        Rational factor = k;
        for (std::size_t i = 0; i < order; ++i) factor /= n.s;
        coeffs[order] = factor * affine_substitute(op.coeff(order), n.s, n.t);
    }
    return DiffOperator(std::move(coeffs));
}

}  // namespace specpoly

#endif
