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
#include "umbral/additive.hpp"
#include "umbral/error.hpp"
#include "umbral/series.hpp"

namespace umbral {
namespace {

TruncSeries poly_series(const FieldPtr& f, std::size_t M, const std::vector<int>& c) {
    TruncSeries P(f, M);
    for (std::size_t j = 0; j < c.size() && j < M; ++j) P[j] = LaurentF::from_int(f, c[j]);
    return P;
}

LaurentF T(const FieldPtr& f) { return LaurentF::monomial(f, -1); }

TEST(Binomial, Examples) {
    EXPECT_EQ(binom_mod_p(3, 1, 2), 1u);
    EXPECT_EQ(binom_mod_p(4, 2, 2), 0u);
    for (std::uint64_t n = 0; n < 40; ++n) EXPECT_EQ(binom_mod_p(n, 0, 3), 1u);
    EXPECT_EQ(binom_mod_p(2, 5, 2), 0u);
}

TEST(Binomial, MatchesPascalTriangle) {
    for (std::uint32_t p : {2u, 3u, 5u, 7u}) {
        const oracle::Pascal C(64, p);
        for (std::size_t n = 0; n <= 64; ++n)
            for (std::size_t k = 0; k <= n; ++k) EXPECT_EQ(binom_mod_p(n, k, p), C(n, k)) << n << " " << k;
    }
}

TEST(Hasse, Examples) {
    const FieldPtr f = FieldCtx::create(2);
    const TruncSeries T2 = TruncSeries::monomial(f, 8, 2);
    const TruncSeries d1 = hasse_derivative(T2, 1);
    EXPECT_EQ(d1.trunc(), 7u);
    for (std::size_t j = 0; j < d1.trunc(); ++j) EXPECT_TRUE(d1[j].is_exact_zero());
    const TruncSeries d2 = hasse_derivative(TruncSeries::monomial(f, 8, 3), 2);
    EXPECT_EQ(d2, TruncSeries::monomial(f, 6, 1));
    const TruncSeries P = poly_series(f, 8, {1, 1, 1, 1});
    EXPECT_EQ(hasse_derivative(P, 0), P);
    const TruncSeries big = hasse_derivative(P, 9);
    for (std::size_t j = 0; j < big.trunc(); ++j) EXPECT_TRUE(big[j].is_exact_zero());
}

TEST(Hasse, AgainstDirectFormulaAndBounded) {
    for (const FieldPtr& f : {FieldCtx::create(2), FieldCtx::create(3)}) {
        oracle::Rand r(5);
        for (int i = 0; i < 50; ++i) {
            const TruncSeries P = r.series(f, 12);
            for (std::size_t k = 0; k < 12; ++k) {
                const TruncSeries D = hasse_derivative(P, k);
                EXPECT_EQ(D, oracle::hasse_direct(P, k));
                EXPECT_GE(sup_valuation(D), sup_valuation(P));
            }
        }
    }
}

TEST(Taylor, Examples) {
    const FieldPtr f = FieldCtx::create(2);
    oracle::Rand r(9);
    const LaurentF c = r.exact(f, 1, 3, 4);
    const TruncSeries T3 = TruncSeries::monomial(f, 6, 3);
    const TruncSeries s = taylor_shift(T3, c);
    EXPECT_EQ(s[3], LaurentF::one(f));
    EXPECT_EQ(s[2], c);
    EXPECT_EQ(s[1], c * c);
    EXPECT_EQ(s[0], c * c * c);
    EXPECT_TRUE(s[4].is_exact_zero());
    const TruncSeries P = r.series(f, 6);
    EXPECT_EQ(taylor_shift(P, LaurentF::zero(f)), P);
    const TruncSeries lin = taylor_shift(TruncSeries::monomial(f, 6, 1), c);
    EXPECT_EQ(lin[0], c);
    EXPECT_EQ(lin[1], LaurentF::one(f));
}

TEST(Taylor, AgainstDirectSumAndHomomorphism) {
    for (const FieldPtr& f : {FieldCtx::create(2), FieldCtx::create(3), FieldCtx::create(2, 2, {1, 1, 1})}) {
        oracle::Rand r(13);
        for (int i = 0; i < 40; ++i) {
            const std::size_t M = 10;
            // Polynomials of degree < M/2, so that the product survives truncation.
            TruncSeries P(f, M), Q(f, M);
            const TruncSeries p5 = r.series(f, M / 2), q5 = r.series(f, M / 2);
            for (std::size_t j = 0; j < M / 2; ++j) {
                P[j] = p5[j];
                Q[j] = q5[j];
            }
            const LaurentF c = r.tail(f, 1, 40), c2 = r.tail(f, 1, 40);
            const std::int64_t cap = 80;
            const TruncSeries a = taylor_shift(P, c, cap);
            EXPECT_GE(agreement(a, oracle::taylor_direct(P, c, cap)), 40);
            EXPECT_GE(agreement(taylor_shift(series_mul(P, Q, cap), c, cap),
                                series_mul(a, taylor_shift(Q, c, cap), cap)),
                      40);
            EXPECT_GE(agreement(taylor_shift(a, c2, cap), taylor_shift(P, c + c2, cap)), 40);
        }
    }
}

TEST(SeriesOps, Examples) {
    const FieldPtr f = FieldCtx::create(2);
    const TruncSeries onePlusT = poly_series(f, 6, {1, 1});
    EXPECT_EQ(series_mul(onePlusT, onePlusT), poly_series(f, 6, {1, 0, 1}));
    EXPECT_EQ(series_pow(TruncSeries::monomial(f, 8, 1), 5), TruncSeries::monomial(f, 8, 5));
    EXPECT_EQ(series_pow(TruncSeries::monomial(f, 5, 1), 5), TruncSeries(f, 5));
    const TruncSeries H = poly_series(f, 8, {0, 1, 1});
    EXPECT_EQ(series_compose(TruncSeries::monomial(f, 8, 2), H), poly_series(f, 8, {0, 0, 1, 0, 1}));
    EXPECT_THROW(series_compose(H, onePlusT), CompositionConstantTerm);
}

TEST(SeriesOps, ComposeAgainstDirectExpansion) {
    const FieldPtr f = FieldCtx::create(3);
    oracle::Rand r(17);
    for (int i = 0; i < 30; ++i) {
        const TruncSeries P = r.series(f, 9);
        TruncSeries Q = r.series(f, 9);
        Q[0] = LaurentF::zero(f);
        EXPECT_EQ(series_compose(P, Q), oracle::compose_direct(P, Q, kPrecInf));
    }
}

TEST(SeriesOps, CompositionWithGeneratorStaysBounded) {
    // Integer bound: each a_k H^k has coefficients of valuation at least
    // v(a_k) + k * min(0, min_i v(h_i)), and only k < M matter mod T^M.
    for (const FieldPtr& f : {FieldCtx::create(2), FieldCtx::create(3)}) {
        oracle::Rand r(19);
        for (int i = 0; i < 50; ++i) {
            const std::size_t M = 12;
            std::vector<LaurentF> h{LaurentF::constant(f, r.nonzero(*f))};
            for (int j = 1; j < 3; ++j) h.push_back(r.exact(f, -1, 2, 3));
            const AdditiveSeries H(f, h, true);
            std::int64_t bh = 0;
            for (const LaurentF& c : h) bh = std::min(bh, c.valuation_floor());
            const TruncSeries P = r.series(f, M);
            const TruncSeries out = series_compose(P, H.to_series(M));
            EXPECT_GE(sup_valuation(out), sup_valuation(P) + static_cast<std::int64_t>(M - 1) * bh);
            if (bh == 0) EXPECT_GE(sup_valuation(out), sup_valuation(P));
        }
    }
}

TEST(Additive, ComposeExamples) {
    const FieldPtr f = FieldCtx::create(2);
    const LaurentF one = LaurentF::one(f);
    const AdditiveSeries H(f, {one, one}, true);
    const AdditiveSeries HH = additive_compose(H, H);
    ASSERT_TRUE(HH.exact());
    ASSERT_EQ(HH.size(), 3u);
    EXPECT_EQ(HH[0], one);
    EXPECT_TRUE(HH[1].is_exact_zero());
    EXPECT_EQ(HH[2], one);
    const AdditiveSeries HI = additive_compose(H, AdditiveSeries::identity(f));
    EXPECT_EQ(HI.to_series(16), H.to_series(16));
    const LaurentF g = LaurentF::from_coeffs(f, 0, {1, 1}), d = LaurentF::from_coeffs(f, 0, {1, 0, 1});
    const AdditiveSeries gd = additive_compose(AdditiveSeries::linear(f, g), AdditiveSeries::linear(f, d));
    EXPECT_EQ(gd.to_series(8), AdditiveSeries::linear(f, g * d).to_series(8));
}

TEST(Additive, InverseExamples) {
    const FieldPtr f = FieldCtx::create(2);
    const LaurentF one = LaurentF::one(f);
    const LaurentF g = LaurentF::from_coeffs(f, 0, {1, 1});
    const AdditiveSeries gi = additive_inverse(AdditiveSeries::linear(f, g), 1, 40);
    EXPECT_GE(agreement(gi[0], lau_inv(g, 40)), 40);
    const AdditiveSeries H(f, {one, one}, true);
    const AdditiveSeries Hi = additive_inverse(H, 6);
    ASSERT_EQ(Hi.size(), 6u);
    EXPECT_FALSE(Hi.exact());
    for (std::size_t i = 0; i < 6; ++i) EXPECT_GE(agreement(Hi[i], one), kDefaultPrec) << i;
    const AdditiveSeries id = additive_inverse(AdditiveSeries::identity(f));
    EXPECT_EQ(id.to_series(20), AdditiveSeries::identity(f).to_series(20));
    EXPECT_THROW(additive_inverse(AdditiveSeries::linear(f, LaurentF::monomial(f, 1))), NotAGenerator);
}

TEST(Additive, InverseRoundTrip) {
    for (const FieldPtr& f : {FieldCtx::create(2), FieldCtx::create(3), FieldCtx::create(2, 2, {1, 1, 1})}) {
        oracle::Rand r(23);
        for (int i = 0; i < 30; ++i) {
            std::vector<LaurentF> h{r.exact(f, 0, 0, 3)};
            for (int j = 1; j < 4; ++j) h.push_back(r.exact(f, -1, 3, 3));
            const AdditiveSeries H(f, h, true);
            const AdditiveSeries Hi = additive_inverse(H, 7, 60);
            const AdditiveSeries left = additive_compose(H, Hi, 60);
            const AdditiveSeries right = additive_compose(Hi, H, 60);
            for (std::size_t k = 0; k < 7; ++k) {
                const LaurentF want = k == 0 ? LaurentF::one(f) : LaurentF::zero(f);
                // Inverse coefficients may grow, so compare every known digit.
                EXPECT_GE(agreement(left[k], want), left[k].prec()) << k;
                EXPECT_GE(agreement(right[k], want), right[k].prec()) << k;
                if (k < 3) EXPECT_GE(std::min(left[k].prec(), right[k].prec()), 30) << k;
            }
        }
    }
}

TEST(Additive, GeneratorCheck) {
    const FieldPtr f = FieldCtx::create(2);
    const LaurentF one = LaurentF::one(f);
    EXPECT_TRUE(is_generator(AdditiveSeries(f, {one, one}, true)).ok);
    EXPECT_TRUE(is_generator(AdditiveSeries(f, {one, LaurentF::monomial(f, 1)}, true)).ok);
    const GeneratorCheck bad = is_generator(AdditiveSeries::linear(f, LaurentF::monomial(f, 1)));
    EXPECT_FALSE(bad.ok);
    EXPECT_EQ(bad.linear_valuation, 1);
}

TEST(Additive, ToSeries) {
    const FieldPtr f = FieldCtx::create(2);
    const LaurentF one = LaurentF::one(f);
    const AdditiveSeries H(f, {one, one});  // known below T^4
    EXPECT_EQ(H.exponent_bound(), 4);
    const TruncSeries S = H.to_series(4);
    EXPECT_EQ(S, poly_series(f, 4, {0, 1, 1, 0}));
    EXPECT_THROW(H.to_series(5), TruncationMismatch);
    EXPECT_NO_THROW(AdditiveSeries(f, {one, one}, true).to_series(50));
    // Frobenius twist in the skew product.
    const LaurentF g = T(f) + one;
    const AdditiveSeries G = AdditiveSeries::linear(f, g);
    const AdditiveSeries HG = additive_compose(AdditiveSeries(f, {one, one}, true), G);
    EXPECT_EQ(HG[1], g * g);
}

}  // namespace
}  // namespace umbral
