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

#include <algorithm>

#include "umbral/error.hpp"
#include "umbral/flow.hpp"

namespace umbral {

Admissibility admissible_heuristic(Moments& F, const AdmissibilityParams& params) {
    Admissibility out;
    const UmbralMap& map = F.map();
    if (map.structurally_geometric()) {
        try {
            const LaurentF& g = F(1);
            out.apparent = g.valuation_floor() >= 1;
            out.rule = "exact rule: v(F_1(x)) >= 1";
        } catch (const OutsideConvergenceDomain& e) {
            out.apparent = false;
            out.rule = e.what();
        }
        if (!out.apparent) out.witness = 1;
        return out;
    }
    if (map.kind() == UmbralMap::Kind::Twisted) {
        out.apparent = true;
        out.rule = "exact rule: the twisted map is admissible on all of F";
        return out;
    }
    try {
        const MomentDecay& d = F.decay();
        if (d.support) {
            out.apparent = true;
            out.rule = "moments vanish from index " + std::to_string(*d.support);
            return out;
        }
        if (d.rate && *d.rate >= 1) {
            out.apparent = true;
            out.rule = "v(F_k(x)) >= " + std::to_string(*d.rate) + " k";
            return out;
        }
        std::size_t quiet = 0;
        for (std::size_t k = 0; k <= params.k_max; ++k) {
            if (F(k).valuation_floor() >= params.prec) {
                if (++quiet >= params.window) {
                    out.apparent = true;
                    out.rule = "window of " + std::to_string(params.window) + " moments below precision";
                    return out;
                }
            } else {
                quiet = 0;
                out.witness = k;
            }
        }
        out.rule = "no window of small moments up to k_max = " + std::to_string(params.k_max);
    } catch (const Error& e) {
        out.rule = e.what();
    }
    out.apparent = false;
    return out;
}

Admissibility admissible_heuristic(const UmbralMap& map, const LaurentF& x, const AdmissibilityParams& params,
                                   const UmbralContext& ctx) {
    Moments F(map, x, ctx);
    return admissible_heuristic(F, params);
}

LaurentF flow_coefficient(Moments& F, const TruncSeries& P, std::size_t h) {
    const std::size_t M = P.trunc();
    const FieldCtx& f = *P.field();
    LaurentF sum = LaurentF::zero(P.field());
    if (h >= M) return sum;
    const std::int64_t wp = F.working_prec();
    const std::optional<std::size_t> support = F.decay().support;
    for (std::size_t k = 0; k + h < M; ++k) {
        if (support && k >= *support) break;
        const LaurentF& a = P[k + h];
        if (a.is_exact_zero()) continue;
        const std::uint32_t b = binom_mod_p(k + h, h, f.p());
        if (b == 0) continue;
        const LaurentF& m = F(k);
        if (m.is_exact_zero()) continue;
        sum = sum + mul_capped(a.scaled(f.from_int(b)), m, wp);
    }
    return sum;
}

LaurentF flow_coefficient(const UmbralMap& map, const LaurentF& x, const TruncSeries& P, std::size_t h,
                          const UmbralContext& ctx) {
    Moments F(map, x, ctx);
    return flow_coefficient(F, P, h);
}

TruncSeries apply_flow(Moments& F, const TruncSeries& P, std::optional<std::size_t> out_trunc) {
    const std::size_t n = std::min(out_trunc.value_or(P.trunc()), P.trunc());
    TruncSeries out(P.field(), n);
    for (std::size_t h = 0; h < n; ++h) out[h] = flow_coefficient(F, P, h);
    return out;
}

TruncSeries apply_flow(const UmbralMap& map, const LaurentF& x, const TruncSeries& P, const UmbralContext& ctx,
                       std::optional<std::size_t> out_trunc) {
    Moments F(map, x, ctx);
    return apply_flow(F, P, out_trunc);
}

LaurentF umbral_eval(const TruncSeries& Q, bool complete, Moments& F) {
    const std::int64_t wp = F.working_prec();
    const std::int64_t bq = sup_valuation(Q);
    if (bq >= kValInf) return complete ? LaurentF::zero(Q.field()) : LaurentF::zero_to_precision(Q.field(), wp);
    std::size_t needed = Q.trunc();
    try {
        needed = F.tail_start(wp, bq);
    } catch (const NoConvergenceDetected&) {
        if (!complete) throw;
    }
    const std::size_t use = std::min(needed, Q.trunc());
    if (!complete && needed > Q.trunc()) {
        const std::size_t w = std::min(F.ctx().eval.window, Q.trunc());
        for (std::size_t m = Q.trunc() - w; m < Q.trunc(); ++m) {
            const std::int64_t vq = Q[m].valuation_floor();
            const std::int64_t vf = F(m).valuation_floor();
            if (vq < kValInf && vf < kValInf && vq + vf < wp) {
                throw NoConvergenceDetected("umbral evaluation: terms at the end of the series are not negligible");
            }
        }
    }
    LaurentF sum = LaurentF::zero(Q.field());
    for (std::size_t m = 0; m < use; ++m) {
        if (Q[m].is_exact_zero()) continue;
        const LaurentF& f = F(m);
        if (f.is_exact_zero()) continue;
        sum = sum + mul_capped(Q[m], f, wp);
    }
    const bool dropped = !complete || use < Q.trunc();
    bool all_zero_beyond = false;
    if (dropped && complete) {
        const auto& d = F.decay();
        all_zero_beyond = d.support && *d.support <= use;
    }
    if ((!dropped || all_zero_beyond) && sum.is_exact()) return sum;
    return lau_truncate(sum, wp);
}

LaurentF umbral_eval(const TruncSeries& Q, bool complete, const UmbralMap& map, const LaurentF& x,
                     const UmbralContext& ctx) {
    Moments F(map, x, ctx);
    return umbral_eval(Q, complete, F);
}

}  // namespace umbral
