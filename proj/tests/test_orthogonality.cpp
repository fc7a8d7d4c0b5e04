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

#include <cmath>
#include <numbers>

#include <specpoly/orthogonality.hpp>
#include <specpoly/quadrature.hpp>

#include "support/oracles.hpp"

namespace specpoly {
namespace {

const Rational kAlpha(-13, 2);

TEST(TanhSinh, SmoothAndEndpointSingular) {
    const auto smooth = tanh_sinh([](double x, double, double) { return std::exp(x); }, 1e-12);
    EXPECT_NEAR(smooth.value, std::exp(1.0) - std::exp(-1.0), 1e-13);

    // 1 / sqrt(1 - x), evaluated through the accurate complement
    const auto sing = tanh_sinh([](double, double, double dr) { return 1.0 / std::sqrt(dr); }, 1e-12);
    EXPECT_NEAR(sing.value, 2.0 * std::sqrt(2.0), 1e-12);

    const auto both = tanh_sinh([](double, double dl, double dr) { return std::pow(dl * dr, -0.75); }, 1e-10);
    // int_{-1}^{1} (1 - x^2)^(-3/4) dx = B(1/2, 1/4)
    const double expected = std::tgamma(0.5) * std::tgamma(0.25) / std::tgamma(0.75);
    EXPECT_NEAR(both.value, expected, 1e-9 * expected);
}

TEST(TanhSinh, ReportsNoConvergence) {
    EXPECT_THROW(tanh_sinh([](double x, double, double) { return std::abs(x) < 0.3 ? 1.0 : 0.0; }, 1e-14, 6),
                 NoConvergence);
}

TEST(InnerProductExact, Legendre) {
    const auto w = derive_weight(preset("legendre"));
    const Poly p2{Rational(-1, 3), 0, 1};
    EXPECT_EQ(inner_product_exact(w, Poly{0, 1}, p2, w.interval), 0);
    EXPECT_EQ(inner_product_exact(w, p2, p2, w.interval), Rational(8, 45));
}

TEST(InnerProductExact, ChaudhryQadirCancelsTheSingularFactor) {
    const auto w = derive_weight(FamilySpec::chaudhry_qadir());
    const Poly p1{-1, 1};
    const Poly p2 = Poly{-1, 1} * Poly{Rational(-1, 3), 1};
    EXPECT_EQ(inner_product_exact(w, p1, p2, w.interval), 0);
    EXPECT_EQ(inner_product_exact(w, p1, p1, w.interval), Rational(1, 2));
    EXPECT_THROW(inner_product_exact(w, Poly{1}, Poly{1}, w.interval), NotPolynomialReducible);
}

TEST(InnerProductExact, RejectsTranscendentalWeights) {
    const auto rom = derive_weight(FamilySpec::romanovski(kAlpha, 1));
    EXPECT_THROW(inner_product_exact(rom, Poly{1}, Poly{1}, rom.interval), NotPolynomialReducible);
    const auto cheb = derive_weight(preset("chebyshev1"));
    EXPECT_THROW(inner_product_exact(cheb, Poly{1}, Poly{1}, cheb.interval), NotPolynomialReducible);
}

TEST(InnerProductNumeric, RomanovskiFirstPair) {
    const auto w = derive_weight(FamilySpec::romanovski(kAlpha, 1));
    const Poly p1{Rational(-2, 13), 1};
    const auto r = inner_product_numeric(w, Poly{1}, p1, w.interval);
    EXPECT_LT(std::abs(r.value) / r.abs_mass, 1e-8);
    EXPECT_GT(r.abs_mass, 0.1);
}

TEST(InnerProductNumeric, ChebyshevOddPair) {
    const auto w = derive_weight(preset("chebyshev1"));
    EXPECT_NEAR(inner_product_numeric(w, Poly{1}, Poly{0, 1}, w.interval).value, 0.0, 1e-12);
    EXPECT_NEAR(inner_product_numeric(w, Poly{1}, Poly{1}, w.interval).value, std::numbers::pi, 1e-10);
    EXPECT_NEAR(inner_product_numeric(w, Poly{0, 1}, Poly{0, 1}, w.interval).value, std::numbers::pi / 2, 1e-10);
}

TEST(InnerProductNumeric, UnboundedIntervals) {
    const auto her = derive_weight(preset("hermite"));
    EXPECT_NEAR(inner_product_numeric(her, Poly{1}, Poly{1}, her.interval).value, std::sqrt(std::numbers::pi), 1e-10);
    EXPECT_NEAR(inner_product_numeric(her, Poly{0, 1}, Poly{0, 1}, her.interval).value,
                std::sqrt(std::numbers::pi) / 2, 1e-10);

    const auto lag = derive_weight(preset("laguerre"));
    for (std::size_t k = 0; k <= 6; ++k)
        EXPECT_NEAR(inner_product_numeric(lag, Poly{1}, Poly::monomial(k), lag.interval).value, std::tgamma(k + 1.0),
                    1e-9 * std::tgamma(k + 1.0));

    // x^(1/2) e^(-x) on (0, inf): Gamma(3/2)
    const auto gen_lag = derive_weight(FamilySpec::laguerre(-1, Rational(3, 2)));
    EXPECT_NEAR(inner_product_numeric(gen_lag, Poly{1}, Poly{1}, gen_lag.interval).value, std::sqrt(std::numbers::pi) / 2,
                1e-10);

    // reflected half-line (-inf, 0)
    // e^x on (-inf, 0)
    const auto refl = derive_weight(Poly{0, -1}, Poly{-1, -1});
    EXPECT_EQ(refl.interval, Interval::below(0));
    EXPECT_NEAR(inner_product_numeric(refl, Poly{1}, Poly{1}, refl.interval).value, 1.0, 1e-10);
}

TEST(InnerProductNumeric, NonIntegrablePair) {
    const auto w = derive_weight(FamilySpec::romanovski(kAlpha, 1));
    EXPECT_THROW(inner_product_numeric(w, Poly::monomial(4), Poly::monomial(4), w.interval), NonIntegrable);
    EXPECT_NO_THROW(inner_product_numeric(w, Poly::monomial(3), Poly::monomial(4), w.interval));
}

TEST(InnerProduct, ExactAndNumericAgreeOnLegendre) {
    const auto w = derive_weight(preset("legendre"));
    const auto ps = testing::monic_legendre(6);
    for (std::size_t m = 0; m <= 6; ++m) {
        for (std::size_t n = m; n <= 6; ++n) {
            const double exact = to_double(inner_product_exact(w, ps[m], ps[n], w.interval));
            const double numeric = inner_product_numeric(w, ps[m], ps[n], w.interval).value;
            EXPECT_LT(std::abs(numeric - exact), 1e-10 * (1 + std::abs(exact))) << m << "," << n;
        }
    }
}

TEST(InnerProduct, Bilinearity) {
    testing::Generator gen(41);
    const auto leg = derive_weight(preset("legendre"));
    const auto cheb = derive_weight(preset("chebyshev2"));
    const double tol = 1e-10;
    for (int i = 0; i < 10; ++i) {
        const Poly f = gen.poly(4), g = gen.poly(4), h = gen.poly(4);
        EXPECT_EQ(inner_product_exact(leg, f, g + h, leg.interval),
                  inner_product_exact(leg, f, g, leg.interval) + inner_product_exact(leg, f, h, leg.interval));
        const auto lhs = inner_product_numeric(cheb, f, g + h, cheb.interval, tol);
        const auto a = inner_product_numeric(cheb, f, g, cheb.interval, tol);
        const auto b = inner_product_numeric(cheb, f, h, cheb.interval, tol);
        EXPECT_LT(std::abs(lhs.value - a.value - b.value), 2 * tol * (1 + std::abs(lhs.value)));
    }
}

TEST(InnerProduct, SelfAdjointJacobiInsideWindow) {
    // alpha < beta < -alpha: boundary term vanishes, so <Lf, g> = <f, Lg> for all polynomials
    testing::Generator gen(43);
    const auto spec = FamilySpec::jacobi(-1, -3, Rational(1, 2));
    const auto op = build_operator(spec);
    const auto w = derive_weight(op);
    for (int i = 0; i < 10; ++i) {
        const Poly f = gen.poly(5), g = gen.poly(5);
        const double lhs = inner_product_numeric(w, apply(op, f), g, w.interval).value;
        const double rhs = inner_product_numeric(w, f, apply(op, g), w.interval).value;
        EXPECT_LT(std::abs(lhs - rhs), 1e-8 * (1 + std::abs(lhs)));
    }
}

TEST(InnerProduct, RomanovskiBoundaryTermFollowsPowerLaw) {
    const Rational beta(1);
    const auto spec = FamilySpec::romanovski(kAlpha, beta);
    const auto table = eigentable(build_operator(spec), 4);
    const double gamma = to_double(kAlpha - 2);
    for (std::size_t m = 0; m <= 4; ++m) {
        for (std::size_t n = m + 1; n <= 4; ++n) {
            const Poly& f = *table[m].monic;
            const Poly& g = *table[n].monic;
            const Poly wr = f * derive(g) - derive(f) * g;
            const double k = static_cast<double>(m + n) + gamma + 1;
            for (double x : {1e3, -1e3}) {
                const double p = std::pow(x * x + 1, gamma / 2) * std::exp(to_double(beta) * std::atan(x));
                const double boundary = (x * x + 1) * p * wr(x);
                const double leading = static_cast<double>(n - m) * std::exp(to_double(beta) * std::atan(x)) *
                                       std::pow(std::abs(x), k);
                const double ratio = std::abs(boundary) / leading;
                EXPECT_GT(ratio, 0.5) << m << "," << n << " at " << x;
                EXPECT_LT(ratio, 2.0) << m << "," << n << " at " << x;
            }
        }
    }
}

TEST(GramMatrix, LegendreExactZeros) {
    const auto rep = gram_matrix(preset("legendre"), 8);
    EXPECT_EQ(rep.degrees.size(), 9u);
    EXPECT_TRUE(rep.excluded.empty());
    int off = 0;
    for (const auto& e : rep.entries) {
        EXPECT_EQ(e.method, EntryMethod::Exact);
        if (e.m == e.n) {
            EXPECT_GT(*e.exact, 0);
        } else {
            EXPECT_EQ(*e.exact, 0);
            ++off;
        }
    }
    EXPECT_EQ(off, 36);
    EXPECT_EQ(rep.off_diagonal_max_relative, 0.0);
    EXPECT_EQ(*rep.entry(2, 2)->exact, Rational(8, 45));
}

TEST(GramMatrix, ChaudhryQadirOnMultiplesOfOneMinusT) {
    const auto rep = gram_matrix(FamilySpec::chaudhry_qadir(), 8);
    ASSERT_EQ(rep.excluded.size(), 1u);
    EXPECT_EQ(rep.excluded[0].degree, 0u);
    EXPECT_EQ(rep.degrees.size(), 8u);
    for (const auto& e : rep.entries) {
        ASSERT_TRUE(e.exact.has_value());
        if (e.m != e.n) EXPECT_EQ(*e.exact, 0);
    }
    EXPECT_EQ(*rep.entry(1, 1)->exact, Rational(1, 2));
    EXPECT_EQ(*rep.entry(2, 2)->exact, Rational(1, 36));
    EXPECT_EQ(*rep.entry(3, 3)->exact, Rational(1, 600));
    EXPECT_EQ(*rep.entry(4, 4)->exact, Rational(1, 9800));
}

TEST(GramMatrix, ClassicalNumericFamilies) {
    for (const char* name : {"chebyshev1", "chebyshev2", "hermite", "laguerre"}) {
        const auto rep = gram_matrix(preset(name), 6);
        EXPECT_EQ(rep.degrees.size(), 7u) << name;
        for (const auto& e : rep.entries) EXPECT_EQ(e.method, EntryMethod::Quadrature) << name;
        EXPECT_LT(rep.off_diagonal_max_relative, 1e-9) << name;
    }
}

TEST(GramMatrix, JacobiOutsideWindowExcludesDegrees) {
    const auto rep = gram_matrix(FamilySpec::jacobi(-1, 1, 0), 3);
    EXPECT_TRUE(rep.degrees.empty());
    EXPECT_EQ(rep.excluded.size(), 4u);
}

TEST(FiniteOrthogonality, RomanovskiThirteenHalves) {
    const auto rep = finite_orthogonality_report(kAlpha, 1, 5);
    EXPECT_EQ(rep.gamma, Rational(-17, 2));
    EXPECT_EQ(rep.integrable_degree_sum_bound, Rational(15, 2));
    EXPECT_TRUE(rep.colliding_degrees.empty());
    for (const auto& p : rep.pairs) {
        if (p.m + p.n <= 7) {
            EXPECT_EQ(p.verdict, PairVerdict::Orthogonal) << p.m << "," << p.n;
            ASSERT_TRUE(p.relative.has_value());
            EXPECT_LT(*p.relative, 1e-8);
        } else {
            EXPECT_EQ(p.verdict, PairVerdict::NonIntegrable) << p.m << "," << p.n;
            EXPECT_FALSE(rep.gram.entry(p.m, p.n)->has_value());
        }
    }
    EXPECT_FALSE(rep.gram.entry(4, 4)->integrable);
}

// mu_m = mu_n needs m + n = 1 - alpha, which is exactly the first non-integrable degree sum,
// so a colliding pair is reported but never reaches the orthogonality test.
TEST(FiniteOrthogonality, IntegerAlphaFlagsCollisions) {
    const auto rep = finite_orthogonality_report(-6, 0, 4);
    EXPECT_EQ(rep.colliding_degrees, (std::vector<std::size_t>{3, 4}));
    EXPECT_EQ(rep.gram.eigen[4].status, EigenStatus::Degenerate);
    bool seen = false;
    for (const auto& p : rep.pairs) {
        if (p.m == 3 && p.n == 4) {
            EXPECT_EQ(p.verdict, PairVerdict::NonIntegrable);
            seen = true;
        }
    }
    EXPECT_TRUE(seen);
}

TEST(FiniteOrthogonality, EvenWeightFirstPair) {
    const auto rep = finite_orthogonality_report(Rational(-9, 2), 0, 1);
    EXPECT_EQ(*rep.gram.eigen[1].monic, (Poly{0, 1}));
    ASSERT_EQ(rep.pairs.size(), 1u);
    EXPECT_EQ(rep.pairs[0].verdict, PairVerdict::Orthogonal);
    EXPECT_LT(std::abs(rep.gram.entry(0, 1)->value()), 1e-14);
}

}  // namespace
}  // namespace specpoly
