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
#include "umbral/flow.hpp"

namespace umbral {
namespace {

class UmbralTest : public ::testing::Test {
   protected:
    FieldPtr f = FieldCtx::create(2);
    UmbralContext ctx{f};
    LaurentF one = LaurentF::one(f);
    LaurentF t = LaurentF::monomial(f, -1);
    LaurentF s = LaurentF::monomial(f, 1);
    std::int64_t wp = ctx.eval.working_prec();
};

TEST_F(UmbralTest, MomentExamples) {
    oracle::Rand r(1);
    const LaurentF x = r.exact(f, -2, 2, 4);
    EXPECT_GE(agreement(moment(UmbralMap::additive(), x, 3, ctx), x * x * x), wp);
    const LaurentF y = r.tail(f, 1, 40);
    const LaurentF T2 = moment(UmbralMap::twisted(), y, 2, ctx);
    EXPECT_GE(agreement(T2, lau_div(y * y + y, t * t + t, 200)), 40);
    EXPECT_TRUE(moment(UmbralMap::twisted(), one, 2, ctx).is_exact_zero());
    for (const UmbralMap& m : {UmbralMap::additive(), UmbralMap::naive(), UmbralMap::twisted(),
                               UmbralMap::geometric(IdentityFn{})})
        EXPECT_EQ(moment(m, s, 0, ctx), one) << m.name();
}

TEST_F(UmbralTest, TwistedAgainstDigitProducts) {
    for (const FieldPtr& g : {FieldCtx::create(2), FieldCtx::create(3)}) {
        UmbralContext c(g);
        oracle::Rand r(2);
        for (int i = 0; i < 10; ++i) {
            const PolyA x = r.poly(g, 3);
            Moments F(UmbralMap::twisted(), LaurentF::from_poly(x), c);
            for (std::uint64_t n = 0; n < 3 * g->q() * g->q(); ++n)
                EXPECT_EQ(F(n), LaurentF::from_poly(oracle::twisted_direct(g, n, x))) << n;
        }
    }
}

TEST_F(UmbralTest, TwistedOneMomentIsX) {
    oracle::Rand r(3);
    for (int i = 0; i < 10; ++i) {
        const LaurentF x = r.tail(f, -2, 30);
        EXPECT_EQ(moment(UmbralMap::twisted(), x, 1, ctx), x);
    }
}

TEST_F(UmbralTest, GeometricMomentsArePowers) {
    oracle::Rand r(4);
    const PolyA gamma(f, {0, 1, 1});
    for (const UmbralMap& m : {UmbralMap::additive(), UmbralMap::naive(), UmbralMap::geometric(CarlitzExpFn{}),
                               UmbralMap::geometric(PolyFn{gamma})}) {
        const LaurentF x = r.tail(f, 1, 64);
        Moments F(m, x, ctx);
        for (std::size_t k = 0; k < 12; ++k)
            EXPECT_GE(agreement(F(k), oracle::pow_naive(F(1), k, wp)), ctx.eval.prec) << m.name() << " " << k;
    }
    const LaurentF x = r.tail(f, 1, 64);
    EXPECT_GE(agreement(moment(UmbralMap::naive(), x, 1, ctx), ctx.carlitz->exp(x, wp)), 64);
    EXPECT_GE(agreement(moment(UmbralMap::geometric(PolyFn{gamma}), x, 1, ctx), x * x + x), 64);
}

TEST_F(UmbralTest, NaiveNeedsSmallX) { EXPECT_THROW(moment(UmbralMap::naive(), one, 1, ctx), OutsideConvergenceDomain); }

TEST_F(UmbralTest, AdmissibilityExamples) {
    const AdmissibilityParams p{64, 3, 64};
    const Admissibility a = admissible_heuristic(UmbralMap::additive(), s, p, ctx);
    EXPECT_TRUE(a.apparent);
    const Admissibility b = admissible_heuristic(UmbralMap::additive(), t, p, ctx);
    EXPECT_FALSE(b.apparent);
    const Admissibility c = admissible_heuristic(UmbralMap::twisted(), one, p, ctx);
    EXPECT_TRUE(c.apparent);
    const Admissibility d = admissible_heuristic(UmbralMap::additive(), one, p, ctx);
    EXPECT_FALSE(d.apparent);
}

TEST_F(UmbralTest, FlowCoefficientExamples) {
    oracle::Rand r(5);
    const LaurentF x = r.tail(f, 1, 64);
    const TruncSeries T2 = TruncSeries::monomial(f, 8, 2);
    EXPECT_TRUE(flow_coefficient(UmbralMap::additive(), x, T2, 1, ctx).is_zero_to_precision());
    EXPECT_GE(agreement(flow_coefficient(UmbralMap::additive(), x, T2, 0, ctx), x * x), 64);
    TruncSeries P = T2;
    P[0] = one;
    EXPECT_GE(agreement(flow_coefficient(UmbralMap::additive(), x, P, 0, ctx), x * x + one), 64);
    EXPECT_TRUE(flow_coefficient(UmbralMap::additive(), x, P, 8, ctx).is_exact_zero());
    EXPECT_TRUE(flow_coefficient(UmbralMap::additive(), x, P, 20, ctx).is_exact_zero());
}

TEST_F(UmbralTest, ApplyFlowExamples) {
    oracle::Rand r(6);
    const LaurentF x = r.tail(f, 1, 64);
    TruncSeries want(f, 8);
    want[0] = x * x;
    want[2] = one;
    EXPECT_GE(agreement(apply_flow(UmbralMap::additive(), x, TruncSeries::monomial(f, 8, 2), ctx), want), 64);
    // Zero moments past F_0 give the identity flow.
    const TruncSeries P = r.series(f, 8);
    EXPECT_EQ(apply_flow(UmbralMap::additive(), LaurentF::zero(f), P, ctx), P);
    const TruncSeries Q = r.series(f, 10);
    EXPECT_GE(agreement(apply_flow(UmbralMap::naive(), x, Q, ctx), taylor_shift(Q, ctx.carlitz->exp(x, wp), wp)),
              64);
}

TEST_F(UmbralTest, FlowMatchesDoubleSum) {
    oracle::Rand r(7);
    for (const UmbralMap& m : {UmbralMap::additive(), UmbralMap::naive(), UmbralMap::twisted()}) {
        for (int i = 0; i < 20; ++i) {
            const std::size_t M = 4 + r.below(5);
            const LaurentF x = m.kind() == UmbralMap::Kind::Twisted ? LaurentF::from_poly(r.poly(f, 4))
                                                                     : r.tail(f, 1, 64);
            const TruncSeries P = r.series(f, M);
            Moments F(m, x, ctx);
            std::vector<LaurentF> mom;
            for (std::size_t k = 0; k < M; ++k) mom.push_back(F(k));
            EXPECT_GE(agreement(apply_flow(F, P), oracle::flow_double_sum(P, mom, wp)), 64) << m.name();
        }
    }
}

TEST_F(UmbralTest, GeometricFlowIsTaylorShift) {
    oracle::Rand r(8);
    for (const FieldPtr& g : {FieldCtx::create(2), FieldCtx::create(3), FieldCtx::create(2, 2, {1, 1, 1})}) {
        UmbralContext c(g);
        for (int i = 0; i < 30; ++i) {
            const LaurentF x = r.tail(g, 1, 64);
            const TruncSeries P = r.series(g, 12);
            const LaurentF gamma = moment(UmbralMap::geometric(CarlitzExpFn{}), x, 1, c);
            EXPECT_GE(agreement(apply_flow(UmbralMap::geometric(CarlitzExpFn{}), x, P, c),
                                oracle::taylor_direct(P, gamma, c.eval.working_prec())),
                      64);
        }
    }
}

TEST_F(UmbralTest, UmbralEvalExamples) {
    oracle::Rand r(9);
    const LaurentF x = r.tail(f, 1, 64);
    TruncSeries Q(f, 2);
    Q[0] = one;
    Q[1] = one;
    EXPECT_GE(agreement(umbral_eval(Q, true, UmbralMap::additive(), x, ctx), one + x), 64);
    for (std::size_t k = 0; k < 6; ++k) {
        const TruncSeries Tk = TruncSeries::monomial(f, k + 1, k);
        EXPECT_GE(agreement(umbral_eval(Tk, true, UmbralMap::twisted(), x, ctx),
                            moment(UmbralMap::twisted(), x, k, ctx)),
                  64);
    }
}

TEST_F(UmbralTest, GeometricEvalIsSubstitution) {
    // eval(Q(F(x))) = Q(F_1(x)) and eval(Q^k) = eval(Q)^k.
    oracle::Rand r(10);
    for (int i = 0; i < 20; ++i) {
        const LaurentF x = r.tail(f, 1, 64);
        const TruncSeries Q = r.series(f, 8);
        const UmbralMap m = UmbralMap::geometric(CarlitzExpFn{});
        Moments F(m, x, ctx);
        const LaurentF g = F(1);
        LaurentF direct = LaurentF::zero(f);
        for (std::size_t j = 0; j < 8; ++j) direct = direct + lau_mul(Q[j], oracle::pow_naive(g, j, wp), wp);
        const LaurentF e = umbral_eval(Q, true, F);
        EXPECT_GE(agreement(e, direct), 64);
        // Q^k has degree 7k; evaluate the full polynomial power.
        TruncSeries Qk(f, 7 * 3 + 1);
        for (std::size_t j = 0; j < 8; ++j) Qk[j] = Q[j];
        EXPECT_GE(agreement(umbral_eval(series_pow(Qk, 3, wp), true, F), lau_pow(e, 3, wp)), 64);
    }
}

TEST_F(UmbralTest, BoundednessOfFlows) {
    oracle::Rand r(11);
    for (const UmbralMap& m : {UmbralMap::additive(), UmbralMap::naive(), UmbralMap::twisted()}) {
        for (int i = 0; i < 30; ++i) {
            const LaurentF x = m.kind() == UmbralMap::Kind::Twisted ? LaurentF::from_poly(r.poly(f, 4))
                                                                     : r.tail(f, 1, 64);
            const TruncSeries P = r.series(f, 12);
            Moments F(m, x, ctx);
            std::int64_t mv = kValInf;
            for (std::size_t k = 0; k < 12; ++k) mv = std::min(mv, F(k).valuation_floor());
            EXPECT_GE(sup_valuation(apply_flow(F, P)), sup_valuation(P) + mv);
        }
    }
}

}  // namespace
}  // namespace umbral
