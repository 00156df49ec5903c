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

#include <thread>

#include "oracles.hpp"
#include "umbral/carlitz.hpp"
#include "umbral/error.hpp"

namespace umbral {
namespace {

std::vector<FieldPtr> small_fields() {
    return {FieldCtx::create(2), FieldCtx::create(3), FieldCtx::create(2, 2, {1, 1, 1})};
}

TEST(Carlitz, DkExamples) {
    const FieldPtr f = FieldCtx::create(2);
    const CarlitzPtr c = CarlitzCtx::create(f);
    EXPECT_EQ(c->dk(0), PolyA::constant(f, 1));
    EXPECT_EQ(c->dk(1), PolyA(f, {0, 1, 1}));
    for (const FieldPtr& g : small_fields()) {
        const CarlitzPtr cg = CarlitzCtx::create(g);
        EXPECT_EQ(cg->dk(1), PolyA::monomial(g, g->q()) - PolyA::monomial(g, 1));
    }
}

TEST(Carlitz, DkDegreeAndRecursion) {
    for (const FieldPtr& g : small_fields()) {
        const CarlitzPtr c = CarlitzCtx::create(g);
        std::uint64_t qk = 1;
        for (std::size_t k = 0; k <= 3; ++k, qk *= g->q()) {
            const PolyA& dk = c->dk(k);
            EXPECT_TRUE(dk.is_monic());
            EXPECT_EQ(dk.degree(), static_cast<std::int64_t>(k * qk));
            EXPECT_EQ(LaurentF::from_poly(dk).valuation(), -static_cast<std::int64_t>(k * qk));
            EXPECT_EQ(dk, oracle::dk_recursive(g, k)) << g->describe() << " k=" << k;
            EXPECT_EQ(dk, oracle::dk_product(g, k));
        }
    }
}

TEST(Carlitz, DkCacheIsThreadSafe) {
    const FieldPtr f = FieldCtx::create(3);
    const CarlitzPtr c = CarlitzCtx::create(f);
    std::vector<std::thread> pool;
    std::vector<PolyA> got(8, PolyA::zero(f));
    for (int i = 0; i < 8; ++i) pool.emplace_back([&, i] { got[i] = c->dk(1 + i % 3); });
    for (auto& th : pool) th.join();
    for (int i = 0; i < 8; ++i) EXPECT_EQ(got[i], oracle::dk_recursive(f, 1 + i % 3));
}

TEST(Carlitz, EkExamples) {
    const FieldPtr f = FieldCtx::create(2);
    const CarlitzPtr c = CarlitzCtx::create(f);
    oracle::Rand r(1);
    const LaurentF x = r.exact(f, -2, 3, 5);
    EXPECT_EQ(c->ek(0, x), x);
    EXPECT_EQ(c->ek(1, x), x * x + x);
    const LaurentF t = LaurentF::monomial(f, -1);
    const LaurentF one = LaurentF::one(f);
    const LaurentF x2 = x * x;
    EXPECT_EQ(c->ek(2, x), x2 * x2 + (t * t + t + one) * x2 + (t * t + t) * x);
}

TEST(Carlitz, EkAgainstRecursionAndProduct) {
    for (const FieldPtr& g : small_fields()) {
        const CarlitzPtr c = CarlitzCtx::create(g);
        oracle::Rand r(2);
        for (int i = 0; i < 10; ++i) {
            const PolyA x = r.poly(g, 3);
            for (std::size_t k = 0; k <= 2; ++k) {
                EXPECT_EQ(c->ek(k, x), oracle::ek_recursive(g, k, x));
                EXPECT_EQ(c->ek(k, x), oracle::ek_product(g, k, x));
                EXPECT_EQ(c->ek(k, LaurentF::from_poly(x)), LaurentF::from_poly(oracle::ek_product(g, k, x)));
            }
        }
    }
}

TEST(Carlitz, EkIsLinear) {
    for (const FieldPtr& g : small_fields()) {
        const CarlitzPtr c = CarlitzCtx::create(g);
        oracle::Rand r(3);
        for (int i = 0; i < 20; ++i) {
            const LaurentF a = r.tail(g, -1, 30), b = r.tail(g, 0, 30);
            const Fq s = r.fq(*g);
            for (std::size_t k = 0; k <= 2; ++k) {
                const LaurentF sum = c->ek(k, a, 60) + c->ek(k, b, 60);
                const LaurentF sc = c->ek(k, a, 60).scaled(s);
                EXPECT_GE(agreement(c->ek(k, a + b, 60), sum), std::min<std::int64_t>(sum.prec(), 60));
                EXPECT_GE(agreement(c->ek(k, a.scaled(s), 60), sc), std::min<std::int64_t>(sc.prec(), 60));
                EXPECT_GE(sum.prec(), 30 - static_cast<std::int64_t>(g->q() * g->q()));
            }
        }
    }
}

TEST(Carlitz, EkVanishesOnSmallPolynomials) {
    for (const FieldPtr& g : small_fields()) {
        const CarlitzPtr c = CarlitzCtx::create(g);
        for (std::size_t k = 0; k <= 2; ++k)
            for (const PolyA& eps : enumerate_polys(g, static_cast<std::int64_t>(k), false))
                EXPECT_TRUE(c->ek(k, eps).is_zero()) << eps.to_string();
    }
}

TEST(Carlitz, EkOverDkIsExactOnA) {
    const FieldPtr f = FieldCtx::create(2);
    const CarlitzPtr c = CarlitzCtx::create(f);
    const LaurentF x = LaurentF::from_poly(PolyA(f, {1, 1, 0, 1}));
    for (std::size_t k = 0; k <= 4; ++k) {
        const LaurentF r = c->ek_over_dk(k, x, 64);
        EXPECT_TRUE(r.is_exact()) << k;
        EXPECT_TRUE(r.is_polynomial()) << k;
    }
}

TEST(Carlitz, ExpExamples) {
    const FieldPtr f = FieldCtx::create(2);
    const CarlitzPtr c = CarlitzCtx::create(f);
    EXPECT_TRUE(c->exp(LaurentF::zero(f), 16).is_exact_zero());
    const LaurentF s = LaurentF::monomial(f, 1);
    const LaurentF e = c->exp(s, 16);
    EXPECT_EQ(e.valuation(), 1);
    EXPECT_GE(e.prec(), 16);
    // 1/t + (1/t)^2 / (t^2 + t) + ...
    const LaurentF two = s + lau_div(s * s, LaurentF::from_poly(c->dk(1)), 64);
    EXPECT_GE(agreement(e, two), 8);
    EXPECT_THROW(c->exp(LaurentF::one(f), 16), OutsideConvergenceDomain);
    EXPECT_THROW(c->exp(LaurentF::monomial(f, -1), 16), OutsideConvergenceDomain);
}

TEST(Carlitz, ExpProperties) {
    for (const FieldPtr& g : small_fields()) {
        const CarlitzPtr c = CarlitzCtx::create(g);
        oracle::Rand r(4);
        const std::int64_t N = 48;
        const LaurentF t = LaurentF::monomial(g, -1);
        for (int i = 0; i < 100; ++i) {
            const LaurentF a = r.tail(g, 1 + static_cast<std::int64_t>(r.below(2)), N);
            const LaurentF b = r.tail(g, 2, N);
            const LaurentF ea = c->exp(a, N);
            EXPECT_GE(ea.valuation(), 1);
            EXPECT_EQ(ea.valuation(), a.valuation());
            EXPECT_GE(agreement(c->exp(a + b, N), ea + c->exp(b, N)), N);
            // e_C(t x) = t e_C(x) + e_C(x)^q.
            const LaurentF eb = c->exp(b, N);
            EXPECT_GE(agreement(c->exp(t * b, N - 1), t * eb + lau_pow(eb, g->q(), N)), N - 1);
        }
    }
}

TEST(Carlitz, EntireExpAtOne) {
    const FieldPtr f = FieldCtx::create(2);
    const CarlitzPtr c = CarlitzCtx::create(f);
    const LaurentF e = c->exp_entire(LaurentF::one(f), 40);
    // 1 + 1/D_1 + 1/D_2 + ..., each term computed independently.
    LaurentF want = LaurentF::zero(f);
    for (std::size_t k = 0; k < 8; ++k) want = want + lau_inv(LaurentF::from_poly(oracle::dk_recursive(f, k)), 40);
    EXPECT_GE(agreement(e, want), 40);
    EXPECT_EQ(e.valuation(), 0);
}

TEST(Carlitz, EnumerationCap) {
    const FieldPtr f = FieldCtx::create(2);
    CarlitzParams p;
    p.enumeration_cap = 16;
    const CarlitzPtr c = CarlitzCtx::create(f, p);
    EXPECT_NO_THROW(c->dk(3));
    EXPECT_THROW(c->dk(5), EnumerationCapExceeded);
    EXPECT_THROW(c->ek(5, LaurentF::one(f)), EnumerationCapExceeded);
}

}  // namespace
}  // namespace umbral
