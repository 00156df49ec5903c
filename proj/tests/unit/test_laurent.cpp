/*
   Copyright 2026 The umbral-flow Authors

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

#include "oracles.hpp"
#include "umbral/error.hpp"
#include "umbral/laurent.hpp"

namespace umbral {
namespace {

class LaurentTest : public ::testing::Test {
   protected:
    FieldPtr f = FieldCtx::create(2);
    LaurentF t = LaurentF::monomial(f, -1);
    LaurentF s = LaurentF::monomial(f, 1);  // 1/t
    LaurentF one = LaurentF::one(f);
};

TEST_F(LaurentTest, AddExamples) {
    EXPECT_TRUE((t + t).is_exact_zero());
    EXPECT_EQ((t * t + t).valuation(), -2);
    const LaurentF x = LaurentF::from_coeffs(f, 0, {1, 1}, 10);
    const LaurentF y = LaurentF::from_coeffs(f, 1, {1}, 5);
    EXPECT_EQ((x + y).prec(), 5);
}

TEST_F(LaurentTest, MulExamples) {
    EXPECT_EQ((t * t).valuation(), -2);
    EXPECT_TRUE((t * LaurentF::zero(f)).is_exact_zero());
    const LaurentF x = LaurentF::from_coeffs(f, 0, {1, 1}, 10);
    EXPECT_TRUE((x * LaurentF::zero(f)).is_exact_zero());
    EXPECT_EQ((s * s).valuation(), 2);
    EXPECT_EQ(s * s, LaurentF::monomial(f, 2));
}

TEST_F(LaurentTest, MulPrecisionRule) {
    const LaurentF x = LaurentF::from_coeffs(f, 1, {1, 0, 1}, 10);
    const LaurentF y = LaurentF::from_coeffs(f, -2, {1, 1}, 6);
    const LaurentF z = lau_mul(x, y);
    EXPECT_EQ(z.valuation(), -1);
    EXPECT_EQ(z.prec(), std::min<std::int64_t>(10 - 2, 6 + 1));
}

TEST_F(LaurentTest, InverseExamples) {
    EXPECT_EQ(lau_inv(t), s);
    EXPECT_EQ(lau_inv(one), one);
    const LaurentF x = t * t + t;
    const LaurentF inv = lau_inv(x, 40);
    EXPECT_EQ(inv.valuation(), 2);
    for (std::int64_t e = 2; e < 40; ++e) EXPECT_EQ(inv.coeff(e), 1) << e;
    EXPECT_GE(agreement(lau_mul(inv, x, kPrecInf), one), 38);
    EXPECT_THROW(lau_inv(LaurentF::zero(f)), ZeroInverse);
    EXPECT_THROW(lau_inv(LaurentF::zero_to_precision(f, 5)), ZeroInverse);
}

TEST_F(LaurentTest, InversePrecisionRule) {
    const LaurentF x = LaurentF::from_coeffs(f, -3, {1, 1, 0, 1}, 20);
    const LaurentF inv = lau_inv(x);
    EXPECT_EQ(inv.valuation(), 3);
    EXPECT_EQ(inv.prec(), 20 + 6);
    EXPECT_GE(agreement(x * inv, one), 20 - 3);
}

TEST_F(LaurentTest, ValuationExamples) {
    EXPECT_EQ(valuation(t * t + t), -2);
    EXPECT_EQ(valuation(s), 1);
    EXPECT_EQ(valuation(LaurentF::zero(f)), kValInf);
    EXPECT_THROW(valuation(LaurentF::zero_to_precision(f, 7)), PrecisionLoss);
    EXPECT_EQ(LaurentF::zero_to_precision(f, 7).valuation_floor(), 7);
    EXPECT_TRUE(s.valuation() >= 1);
    EXPECT_TRUE(one.is_unit());
    EXPECT_TRUE(s.in_ring_of_integers());
    EXPECT_FALSE(t.in_ring_of_integers());
}

TEST_F(LaurentTest, CancellationToPrecision) {
    const LaurentF x = LaurentF::from_coeffs(f, 0, {1, 1, 1}, 3);
    const LaurentF d = x - x;
    EXPECT_TRUE(d.is_zero_to_precision());
    EXPECT_FALSE(d.is_exact_zero());
    EXPECT_EQ(d.prec(), 3);
    EXPECT_THROW(d.coeff(3), PrecisionLoss);
}

TEST_F(LaurentTest, FromPolyRing) {
    const PolyA a(f, {1, 0, 1});
    const LaurentF x = LaurentF::from_poly(a);
    EXPECT_TRUE(x.is_polynomial());
    EXPECT_EQ(x.valuation(), -2);
    EXPECT_EQ(x.to_poly(), a);
    EXPECT_FALSE(s.is_polynomial());
}

class LaurentProperties : public ::testing::TestWithParam<int> {};

FieldPtr field_for(int which) {
    switch (which) {
        case 0:
            return FieldCtx::create(2);
        case 1:
            return FieldCtx::create(3);
        default:
            return FieldCtx::create(2, 2, {1, 1, 1});
    }
}

TEST_P(LaurentProperties, UltrametricAndMultiplicative) {
    const FieldPtr g = field_for(GetParam());
    oracle::Rand r(100 + GetParam());
    for (int i = 0; i < 1000; ++i) {
        const LaurentF x = r.exact(g, -5, 5, 1 + r.below(8));
        const LaurentF y = r.exact(g, -5, 5, 1 + r.below(8));
        const LaurentF sum = x + y;
        const std::int64_t vx = x.valuation(), vy = y.valuation();
        EXPECT_GE(sum.valuation(), std::min(vx, vy));
        if (vx != vy) EXPECT_EQ(sum.valuation(), std::min(vx, vy));
        EXPECT_EQ((x * y).valuation(), vx + vy);
        // Exact product against the schoolbook oracle.
        EXPECT_EQ(x * y, oracle::from_dense(g, oracle::dense_mul(*g, oracle::dense(x), oracle::dense(y))));
    }
}

TEST_P(LaurentProperties, InverseRoundTrip) {
    const FieldPtr g = field_for(GetParam());
    oracle::Rand r(200 + GetParam());
    const LaurentF one = LaurentF::one(g);
    for (int i = 0; i < 200; ++i) {
        const LaurentF x = r.tail(g, static_cast<std::int64_t>(r.below(7)) - 3, 30);
        const LaurentF inv = lau_inv(x);
        EXPECT_EQ(inv.valuation(), -x.valuation());
        EXPECT_GE(agreement(x * inv, one), 30 - x.valuation());
        const LaurentF e = r.exact(g, -4, 4, 5);
        EXPECT_GE(agreement(lau_mul(e, lau_inv(e, 50)), one), 50 + e.valuation());
    }
}

TEST_P(LaurentProperties, PolynomialEmbeddingIsARingMap) {
    const FieldPtr g = field_for(GetParam());
    oracle::Rand r(300 + GetParam());
    for (int i = 0; i < 200; ++i) {
        const PolyA a = r.poly(g, 5), b = r.poly(g, 5);
        EXPECT_EQ(LaurentF::from_poly(a + b), LaurentF::from_poly(a) + LaurentF::from_poly(b));
        EXPECT_EQ(LaurentF::from_poly(a * b), LaurentF::from_poly(a) * LaurentF::from_poly(b));
        EXPECT_EQ(LaurentF::from_poly(a - b), LaurentF::from_poly(a) - LaurentF::from_poly(b));
    }
}

TEST_P(LaurentProperties, PowerAndFrobenius) {
    const FieldPtr g = field_for(GetParam());
    oracle::Rand r(400 + GetParam());
    for (int i = 0; i < 50; ++i) {
        // x is a truncation of x_full; every digit lau_pow claims must hold for it.
        const LaurentF x_full = r.tail(g, 1, 400);
        const LaurentF x = lau_truncate(x_full, 40);
        const std::uint64_t n = 1 + r.below(20);
        const LaurentF a = lau_pow(x, n, 200);
        const LaurentF b = oracle::pow_naive(x, n, 200);
        EXPECT_GE(agreement(a, b), std::min(a.prec(), b.prec()));
        EXPECT_GE(a.prec(), b.prec());
        EXPECT_GE(agreement(a, oracle::pow_naive(x_full, n, 400)), a.prec());
        const LaurentF e = r.exact(g, -3, 3, 4);
        EXPECT_EQ(lau_frobenius(e, 1), oracle::pow_naive(e, g->p(), kPrecInf));
        EXPECT_EQ(lau_pow(e, n), oracle::pow_naive(e, n, kPrecInf));
    }
}

INSTANTIATE_TEST_SUITE_P(Fields, LaurentProperties, ::testing::Values(0, 1, 2));

}  // namespace
}  // namespace umbral
