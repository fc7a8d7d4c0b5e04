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

#include <gtest/gtest.h>

#include <specpoly/eigensolver.hpp>
#include <specpoly/families.hpp>

#include "support/oracles.hpp"

namespace specpoly {
namespace {

TEST(BuildOperator, Legendre) {
    const auto op = build_operator(FamilySpec::jacobi(-1, -2, 0));
    EXPECT_EQ(op, DiffOperator({Poly{}, Poly{0, -2}, Poly{1, 0, -1}}));
}

TEST(BuildOperator, ChaudhryQadir) {
    EXPECT_EQ(build_operator(FamilySpec::chaudhry_qadir()), DiffOperator({Poly{}, Poly{1, -1}, Poly{0, 1, -1}}));
}

TEST(BuildOperator, Romanovski) {
    const Rational alpha(-13, 2), beta(1);
    EXPECT_EQ(build_operator(FamilySpec::romanovski(alpha, beta)), DiffOperator({Poly{}, Poly{beta, alpha}, Poly{1, 0, 1}}));
    EXPECT_EQ(build_operator(FamilySpec::romanovski(alpha, beta)), build_operator(FamilySpec::jacobi(1, alpha, beta)));
}

TEST(BuildOperator, AllKindsValidate) {
    testing::Generator gen(5);
    for (int i = 0; i < 20; ++i) {
        const Rational a = gen.rational(), b = gen.rational();
        for (const auto& spec : {FamilySpec::jacobi(-1, a, b), FamilySpec::jacobi(1, a, b), FamilySpec::laguerre(a, b),
                                 FamilySpec::hermite(a, b), FamilySpec::romanovski(a, b), FamilySpec::chaudhry_qadir()}) {
            const auto op = build_operator(spec);
            EXPECT_NO_THROW(validate_operator(op.coeffs()));
            EXPECT_EQ(op.order(), 2u);
        }
    }
    EXPECT_THROW(FamilySpec::jacobi(0, 1, 1), InvalidArgument);
}

TEST(BochnerNormalize, Examples) {
    const auto sq = bochner_normalize(Poly{2, -2, 1});
    EXPECT_EQ(sq.s, 1);
    EXPECT_EQ(sq.t, 1);
    EXPECT_EQ(sq.c, 1);
    EXPECT_EQ(sq.normal_form, NormalForm::XSquaredPlusOne);

    const auto c = bochner_normalize(Poly{3});
    EXPECT_EQ(c.s, 1);
    EXPECT_EQ(c.t, 0);
    EXPECT_EQ(c.c, 3);
    EXPECT_EQ(c.normal_form, NormalForm::One);

    const auto d = bochner_normalize(Poly{-8, 0, 2});
    EXPECT_EQ(d.s, 2);
    EXPECT_EQ(d.t, 0);
    EXPECT_EQ(d.c, 8);
    EXPECT_EQ(d.normal_form, NormalForm::XSquaredMinusOne);
}

TEST(BochnerNormalize, OtherShapes) {
    EXPECT_EQ(bochner_normalize(Poly{1, 0, -1}).c, -1);
    EXPECT_EQ(bochner_normalize(Poly{4, 4, 1}).normal_form, NormalForm::XSquared);
    const auto lin = bochner_normalize(Poly{6, -3});
    EXPECT_EQ(lin.normal_form, NormalForm::X);
    EXPECT_EQ(lin.t, 2);
    EXPECT_THROW(bochner_normalize(Poly{0, 0, 0, 1}), InvalidArgument);
    EXPECT_THROW(bochner_normalize(Poly{}), InvalidArgument);
    EXPECT_THROW(bochner_normalize(Poly{-2, 0, 1}), UnsupportedLeadingCoefficient);
}

TEST(BochnerNormalize, RoundTrip) {
    testing::Generator gen(9);
    int checked = 0;
    for (int i = 0; i < 200; ++i) {
        // Build a from a known normal form so the scale is rational.
        const std::size_t form = static_cast<std::size_t>(gen.integer(0, 4));
        const NormalForm nf = static_cast<NormalForm>(form);
        Rational s = gen.rational(), c = gen.rational();
        if (s == 0 || c == 0) continue;
        const Rational t = gen.rational();
        // a(x) = c * nf((x - t) / s)
        const Poly a = c * affine_substitute(normal_form_poly(nf), 1 / s, -t / s);
        const auto n = bochner_normalize(a);
        EXPECT_EQ(n.normal_form, nf);
        EXPECT_GT(n.s, 0);
        EXPECT_EQ(affine_substitute(a, n.s, n.t), n.c * normal_form_poly(n.normal_form));
        ++checked;
    }
    EXPECT_GT(checked, 100);
}

TEST(NormalizedOperator, LeadingCoefficientIsNormalForm) {
    const DiffOperator op({Poly{}, Poly{1, Rational(-13, 2)}, Poly{2, -2, 1}});
    const auto n = bochner_normalize(op.coeff(2));
    const auto normalized = normalized_operator(op, n);
    EXPECT_EQ(normalized.coeff(2), (Poly{1, 0, 1}));
    // (s^2/c) L in the new variable: spectra agree up to the factor s^2 / c.
    const auto a = spectrum(op, 6), b = spectrum(normalized, 6);
    for (std::size_t j = 0; j <= 6; ++j) EXPECT_EQ(b.values[j], a.values[j] * n.s * n.s / n.c);
}

TEST(Presets, ClassicalAssignments) {
    const auto presets = classical_presets();
    EXPECT_EQ(presets.size(), 5u);
    EXPECT_EQ(build_operator(presets.at("legendre")), DiffOperator({Poly{}, Poly{0, -2}, Poly{1, 0, -1}}));
    EXPECT_EQ(presets.at("chebyshev1"), FamilySpec::jacobi(-1, -1, 0));
    EXPECT_EQ(presets.at("chebyshev2"), FamilySpec::jacobi(-1, -3, 0));
    EXPECT_EQ(presets.at("hermite"), FamilySpec::hermite(-2, 0));
    EXPECT_EQ(presets.at("laguerre"), FamilySpec::laguerre(-1, 1));
    EXPECT_EQ(preset("chaudhry-qadir"), FamilySpec::chaudhry_qadir());
    EXPECT_THROW(preset("bessel"), InvalidArgument);
}

TEST(Presets, ChebyshevFirstKindDegreeTwo) {
    const auto r = monic_eigenfunction(build_operator(preset("chebyshev1")), 2);
    EXPECT_EQ(*r.monic, (Poly{Rational(-1, 2), 0, 1}));
}

TEST(Presets, HermiteSpectrumIsMinusTwoN) {
    const auto s = spectrum(build_operator(preset("hermite")), 10);
    for (std::size_t n = 0; n <= 10; ++n) EXPECT_EQ(s.values[n], -2 * Rational(static_cast<long long>(n)));
}

TEST(Presets, EigenfunctionsMatchRecurrences) {
    const std::size_t n_max = 8;
    const std::vector<std::pair<std::string, std::vector<Poly>>> cases{
        {"legendre", testing::monic_legendre(n_max)},
        {"chebyshev1", testing::monic_chebyshev_t(n_max)},
        {"chebyshev2", testing::monic_chebyshev_u(n_max)},
        {"hermite", testing::monic_hermite(n_max)},
        {"laguerre", testing::monic_laguerre(n_max)},
    };
    for (const auto& [name, expected] : cases) {
        const auto table = eigentable(build_operator(preset(name)), n_max);
        for (std::size_t n = 0; n <= n_max; ++n) EXPECT_EQ(*table[n].monic, expected[n]) << name << " degree " << n;
    }
}

TEST(Families, JacobiSpectrumIndependentOfBeta) {
    testing::Generator gen(31);
    for (int i = 0; i < 10; ++i) {
        const Rational alpha = gen.rational(), beta = gen.rational();
        for (int eps : {-1, 1}) {
            EXPECT_EQ(spectrum(build_operator(FamilySpec::jacobi(eps, alpha, 0)), 8).values,
                      spectrum(build_operator(FamilySpec::jacobi(eps, alpha, beta)), 8).values);
        }
    }
}

}  // namespace
}  // namespace specpoly
