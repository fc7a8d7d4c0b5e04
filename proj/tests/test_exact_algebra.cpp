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

#include <specpoly/poly.hpp>
#include <specpoly/rational.hpp>

#include "support/oracles.hpp"

namespace specpoly {
namespace {

const Rational third(1, 3);

TEST(Rational, AlwaysReduced) {
    const Rational r(-6, 8);
    EXPECT_EQ(to_string(r), "-3/4");
    EXPECT_EQ(Rational(2, 4), Rational(1, 2));
    EXPECT_EQ(to_string(Rational(10, 5)), "2");
}

TEST(Rational, ParsesFractionsIntegersAndDecimals) {
    EXPECT_EQ(parse_rational("-13/2"), Rational(-13, 2));
    EXPECT_EQ(parse_rational(" 7 "), Rational(7));
    EXPECT_EQ(parse_rational("-6.5"), Rational(-13, 2));
}

TEST(Rational, RejectsMalformedText) {
    EXPECT_THROW(parse_rational(""), InvalidArgument);
    EXPECT_THROW(parse_rational("1/0"), InvalidArgument);
    EXPECT_THROW(parse_rational("abc"), InvalidArgument);
    EXPECT_THROW(parse_rational("1/-2"), InvalidArgument);
    EXPECT_THROW(parse_rational("1.2.3"), InvalidArgument);
}

TEST(Poly, ZeroHasNoDegree) {
    EXPECT_FALSE(Poly{}.degree().has_value());
    EXPECT_FALSE((Poly{1, 2} - Poly{1, 2}).degree().has_value());
    EXPECT_TRUE(Poly({Rational(0), Rational(0)}).is_zero());
    EXPECT_EQ(Poly({Rational(1), Rational(0)}).degree(), 0u);
}

TEST(Poly, Arithmetic) {
    EXPECT_EQ((Poly{1, 1} * Poly{-1, 1}), (Poly{-1, 0, 1}));
    const Poly p{3, -1, third};
    EXPECT_EQ(p + Poly{}, p);

    const Poly q{-third, 0, 1};
    const Poly sq = q * q;
    EXPECT_EQ(sq, (Poly{Rational(1, 9), 0, Rational(-2, 3), 0, 1}));
    // cross-check by evaluation at three rational points
    for (const Rational x : {Rational(0), Rational(1, 2), Rational(-3)}) EXPECT_EQ(sq(x), q(x) * q(x));
    EXPECT_EQ(Rational(2) * (Poly{1, 1}), (Poly{2, 2}));
}

TEST(Poly, Derivatives) {
    EXPECT_EQ(derive(Poly::monomial(3), 2), (Poly{0, 6}));
    EXPECT_TRUE(derive(Poly{7}, 1).is_zero());
    EXPECT_TRUE(derive(Poly::monomial(2), 3).is_zero());
    const Poly p{1, 2, 3};
    EXPECT_EQ(derive(p, 0), p);
}

TEST(Poly, Evaluation) {
    const Poly q{-third, 0, 1};
    EXPECT_EQ(q(Rational(1)), Rational(2, 3));
    EXPECT_EQ(Poly{}(Rational(17, 3)), 0);
    EXPECT_DOUBLE_EQ(Poly{}(2.5), 0.0);
    EXPECT_NEAR(q(0.5), 0.25 - 1.0 / 3, 1e-15);
    const Poly psi{2, -1, 5};
    EXPECT_EQ((Poly{1, -1} * psi)(Rational(1)), 0);
}

TEST(Poly, AffineSubstitution) {
    EXPECT_EQ(affine_substitute(Poly::monomial(2), 2, 0), (Poly{0, 0, 4}));
    EXPECT_EQ(affine_substitute(Poly{2, -2, 1}, 1, 1), (Poly{1, 0, 1}));
    const Poly p{third, -4, 0, 2};
    EXPECT_EQ(affine_substitute(p, 1, 0), p);
    EXPECT_THROW(affine_substitute(p, 0, 1), InvalidArgument);
}

TEST(Poly, DefiniteIntegral) {
    EXPECT_EQ(definite_integral(Poly::monomial(2), -1, 1), Rational(2, 3));
    EXPECT_EQ(definite_integral(Poly::monomial(1) * Poly{-third, 0, 1}, -1, 1), 0);
    const Poly q{-third, 0, 1};
    EXPECT_EQ(definite_integral(q * q, -1, 1), Rational(8, 45));
    EXPECT_EQ(testing::monomial_integral(q * q, -1, 1), Rational(8, 45));
    EXPECT_THROW(definite_integral(q, 1, -1), InvalidArgument);
}

TEST(Poly, DivideLinear) {
    EXPECT_EQ(divide_linear(Poly{-1, 0, 1}, 1), (Poly{1, 1}));
    EXPECT_EQ(divide_linear(Poly{1, -1}, 1), (Poly{-1}));
    const Poly p = Poly{1, -1} * Poly{2, 1};
    EXPECT_EQ(divide_linear(p, 1), -(Poly{2, 1}));
}

TEST(Poly, DivideLinearReportsRemainder) {
    try {
        divide_linear(Poly{-1, 0, 1}, 2);
        FAIL() << "expected NonzeroRemainder";
    } catch (const NonzeroRemainder& e) {
        EXPECT_EQ(e.remainder(), "3");
    }
}

TEST(Poly, RootMultiplicityAndPrinting) {
    const Poly p = Poly{-1, 1} * Poly{-1, 1} * Poly{2, 1};
    EXPECT_EQ(root_multiplicity(p, 1), 2u);
    EXPECT_EQ(root_multiplicity(p, -2), 1u);
    EXPECT_EQ(root_multiplicity(p, 0), 0u);
    EXPECT_EQ(to_string(Poly{-third, 0, 1}), "x^2 - 1/3");
    EXPECT_EQ(to_string(Poly{1, -1}, "t"), "-t + 1");
    EXPECT_EQ(to_string(Poly{}), "0");
}

class PolyProperties : public ::testing::TestWithParam<unsigned> {};

TEST_P(PolyProperties, RingAndCalculusIdentities) {
    testing::Generator gen(GetParam());
    for (int trial = 0; trial < 25; ++trial) {
        const Poly p = gen.poly(5), q = gen.poly(5), r = gen.poly(4);
        EXPECT_EQ((p + q) * r, p * r + q * r);
        EXPECT_EQ(derive(p * q), derive(p) * q + p * derive(q));

        Rational s = gen.rational();
        if (s == 0) s = 1;
        const Rational t = gen.rational();
        EXPECT_EQ(affine_substitute(affine_substitute(p, s, t), 1 / s, -t / s), p);

        const Rational a = gen.rational(), b = a + Rational(gen.integer(0, 3)), c = b + Rational(gen.integer(0, 3));
        EXPECT_EQ(definite_integral(p, a, b) + definite_integral(p, b, c), definite_integral(p, a, c));
        EXPECT_EQ(definite_integral(p, a, c), testing::monomial_integral(p, a, c));

        const Rational root = gen.rational();
        const Poly with_root = p * Poly::linear_factor(root);
        EXPECT_EQ(divide_linear(with_root, root) * Poly::linear_factor(root), with_root);
    }
}

INSTANTIATE_TEST_SUITE_P(Seeds, PolyProperties, ::testing::Values(1u, 2u, 3u, 4u));

}  // namespace
}  // namespace specpoly
