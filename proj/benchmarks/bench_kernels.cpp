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
#include <benchmark/benchmark.h>

#include <random>

#include "umbral/duality.hpp"
#include "umbral/flow.hpp"

namespace {

using namespace umbral;

LaurentF random_tail(const FieldPtr& f, std::mt19937_64& rng, std::int64_t v, std::int64_t prec) {
    std::vector<Fq> c(static_cast<std::size_t>(prec - v));
    for (auto& x : c) x = static_cast<Fq>(rng() % f->q());
    c[0] = static_cast<Fq>(1 + rng() % (f->q() - 1));
    return LaurentF::from_coeffs(f, v, c, prec);
}

TruncSeries random_series(const FieldPtr& f, std::mt19937_64& rng, std::size_t M) {
    TruncSeries P(f, M);
    for (std::size_t j = 0; j < M; ++j) {
        std::vector<Fq> c(8);
        for (auto& x : c) x = static_cast<Fq>(rng() % f->q());
        P[j] = LaurentF::from_coeffs(f, 0, c);
    }
    return P;
}

void BM_LaurentMul(benchmark::State& state) {
    const FieldPtr f = FieldCtx::create(2, static_cast<std::uint32_t>(state.range(1)));
    std::mt19937_64 rng(1);
    const std::int64_t n = state.range(0);
    const LaurentF a = random_tail(f, rng, 0, n), b = random_tail(f, rng, 0, n);
    for (auto _ : state) benchmark::DoNotOptimize(a * b);
}
BENCHMARK(BM_LaurentMul)->Args({64, 1})->Args({256, 1})->Args({1024, 1})->Args({256, 4});

void BM_LaurentInv(benchmark::State& state) {
    const FieldPtr f = FieldCtx::create(3);
    std::mt19937_64 rng(2);
    const LaurentF a = random_tail(f, rng, 0, state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(lau_inv(a, state.range(0)));
}
BENCHMARK(BM_LaurentInv)->Arg(64)->Arg(256);

void BM_CarlitzFactorial(benchmark::State& state) {
    const FieldPtr f = FieldCtx::create(2);
    for (auto _ : state) {
        const CarlitzPtr c = CarlitzCtx::create(f);
        benchmark::DoNotOptimize(c->dk(static_cast<std::size_t>(state.range(0))));
    }
}
BENCHMARK(BM_CarlitzFactorial)->Arg(4)->Arg(8)->Arg(10);

void BM_ApplyFlow(benchmark::State& state) {
    const FieldPtr f = FieldCtx::create(2);
    const UmbralContext ctx(f);
    std::mt19937_64 rng(3);
    const std::size_t M = static_cast<std::size_t>(state.range(0));
    const LaurentF x = random_tail(f, rng, 1, ctx.eval.prec);
    const TruncSeries P = random_series(f, rng, M);
    const UmbralMap map = state.range(1) == 0 ? UmbralMap::additive() : UmbralMap::naive();
    for (auto _ : state) benchmark::DoNotOptimize(apply_flow(map, x, P, ctx));
}
BENCHMARK(BM_ApplyFlow)->Args({16, 0})->Args({64, 0})->Args({16, 1})->Args({64, 1});

void BM_TwistedMoments(benchmark::State& state) {
    const FieldPtr f = FieldCtx::create(2);
    const UmbralContext ctx(f);
    const LaurentF x = LaurentF::from_poly(PolyA(f, {1, 1, 0, 1, 1}));
    for (auto _ : state) {
        Moments F(UmbralMap::twisted(), x, ctx);
        for (std::size_t n = 0; n < 32; ++n) benchmark::DoNotOptimize(F(n));
    }
}
BENCHMARK(BM_TwistedMoments);

void BM_DualityDiagram(benchmark::State& state) {
    const FieldPtr f = FieldCtx::create(2);
    const UmbralContext ctx(f);
    std::mt19937_64 rng(4);
    const std::int64_t wp = ctx.eval.working_prec();
    const AdditiveIso iso = carlitz_exp_iso(*ctx.carlitz, carlitz_exp_terms(2, 1, wp), 8, wp + ctx.eval.prec);
    const LaurentF x = random_tail(f, rng, 1, ctx.eval.prec);
    for (auto _ : state) benchmark::DoNotOptimize(check_duality_diagram(UmbralMap::additive(), iso, x, 12, 16, ctx));
}
BENCHMARK(BM_DualityDiagram)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
