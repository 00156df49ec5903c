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

#include "umbral/duality.hpp"

#include <algorithm>

#include "umbral/error.hpp"

namespace umbral {

namespace {

std::int64_t min_valuation(const AdditiveSeries& H) {
    std::int64_t v = kValInf;
    for (const auto& h : H.pcoeffs()) {
        if (!h.is_exact_zero()) v = std::min(v, h.valuation_floor());
    }
    return v;
}

std::int64_t scaled_bound(std::size_t k, std::int64_t b) {
    if (b >= kValInf) return kValInf;
    return static_cast<std::int64_t>(k) * std::min<std::int64_t>(b, 0);
}

void require_admissible(Moments& F, const AdmissibilityParams& params, const std::string& what) {
    const Admissibility a = admissible_heuristic(F, params);
    if (!a.apparent) {
        throw PreconditionFailed(what + " is not apparently admissible at x (" + a.rule + ")");
    }
}

AdmissibilityParams params_of(const UmbralContext& ctx) {
    AdmissibilityParams p;
    p.k_max = ctx.eval.k_max;
    p.window = ctx.eval.window;
    p.prec = ctx.eval.prec;
    return p;
}

}  // namespace

AdditiveIso::AdditiveIso(AdditiveSeries H, AdditiveSeries Hinv) : H_(std::move(H)), Hinv_(std::move(Hinv)) {
    require_same_field(H_.field(), Hinv_.field());
    const GeneratorCheck g = is_generator(H_);
    if (!g.ok) throw NotAGenerator("generator: " + g.reason);
    const GeneratorCheck gi = is_generator(Hinv_);
    if (!gi.ok) throw NotAGenerator("inverse generator: " + gi.reason);
}

AdditiveIso AdditiveIso::from_generator(const AdditiveSeries& H, std::size_t range, std::int64_t cap) {
    return AdditiveIso(H, additive_inverse(H, range, cap));
}

AdditiveIso AdditiveIso::from_inverse(const AdditiveSeries& Hinv, std::size_t range, std::int64_t cap) {
    return AdditiveIso(additive_inverse(Hinv, range, cap), Hinv);
}

AdditiveIso AdditiveIso::identity(FieldPtr field) {
    return AdditiveIso(AdditiveSeries::identity(field), AdditiveSeries::identity(field));
}

AdditiveIso AdditiveIso::linear(const LaurentF& gamma, std::int64_t cap) {
    return AdditiveIso(AdditiveSeries::linear(gamma.field(), gamma),
                       AdditiveSeries::linear(gamma.field(), lau_inv(gamma, cap)));
}

void DualityReport::merge(const DualityReport& other) {
    trials += other.trials;
    failures.insert(failures.end(), other.failures.begin(), other.failures.end());
    witnesses.insert(witnesses.end(), other.witnesses.begin(), other.witnesses.end());
    min_agreement_valuation = std::min(min_agreement_valuation, other.min_agreement_valuation);
    precision_limited = precision_limited || other.precision_limited;
    for (const auto& [k, v] : other.counters) counters[k] += v;
}

bool DualityReport::expect_agree(const LaurentF& a, const LaurentF& b, const ReportEntry& where) {
    const LaurentF diff = a - b;
    const std::int64_t v = diff.valuation_floor();
    min_agreement_valuation = std::min(min_agreement_valuation, v);
    if (v >= target_precision) return true;
    ReportEntry e = where;
    e.valuation = v;
    if (diff.is_zero_to_precision()) {
        precision_limited = true;
        e.note = (e.note.empty() ? "" : e.note + "; ") + "undecided at working precision";
    }
    fail(std::move(e));
    return false;
}

void DualityReport::fail(ReportEntry entry) { failures.push_back(std::move(entry)); }

TruncSeries apply_iso(const AdditiveIso& iso, const TruncSeries& P) {
    return series_compose(P, iso.H().to_series(P.trunc()));
}

TruncSeries apply_iso_inverse(const AdditiveIso& iso, const TruncSeries& P) {
    return series_compose(P, iso.Hinv().to_series(P.trunc()));
}

LaurentF dual_moment(const UmbralMap& inner, const AdditiveIso& iso, const LaurentF& x, std::size_t k,
                     const UmbralContext& ctx) {
    if (k == 0) return LaurentF::one(x.field());
    Moments F(inner, x, ctx);
    const std::int64_t wp = F.working_prec();
    const AdditiveSeries& hinv = iso.Hinv();
    const std::size_t needed = F.tail_start(wp, scaled_bound(k, min_valuation(hinv)));

    // Hinv is a polynomial (exact) or known below T^(p^m), in which case
    // Hinv^k is known below T^(p^m + k - 1).
    std::size_t len = needed;
    bool complete = false;
    std::size_t degree = 0;
    {
        std::size_t e = 1;
        for (std::size_t i = 0; i < hinv.size(); ++i, e *= x.field()->p()) {
            if (!hinv[i].is_exact_zero()) degree = e;
        }
    }
    if (hinv.exact()) {
        if (k * degree + 1 <= len) {
            len = k * degree + 1;
            complete = true;
        }
    } else {
        const auto valid = static_cast<std::size_t>(std::min<std::int64_t>(
            hinv.exponent_bound() + static_cast<std::int64_t>(k) - 1, static_cast<std::int64_t>(ctx.eval.eval_max)));
        if (valid < needed) {
            len = valid;
        }
    }
    std::int64_t lowest = 0;
    for (std::size_t m = 0; m < len; ++m) {
        const std::int64_t v = F(m).valuation_floor();
        if (v < kValInf) lowest = std::min(lowest, v);
    }
    const std::int64_t cap = wp - lowest;
    TruncSeries base(x.field(), len);
    {
        std::size_t e = 1;
        for (std::size_t i = 0; i < hinv.size() && e < len; ++i, e *= x.field()->p()) base[e] = hinv[i];
    }
    const TruncSeries R = series_pow(base, k, cap);
    try {
        return umbral_eval(R, complete, F);
    } catch (const NoConvergenceDetected& e) {
        if (!hinv.exact() && len < needed) {
            throw TruncationMismatch(std::string("additive series range too short: ") + e.what());
        }
        throw;
    }
}

DualityReport check_duality_diagram(const UmbralMap& inner, const AdditiveIso& iso, const LaurentF& x,
                                    std::size_t J, std::size_t M, const UmbralContext& ctx,
                                    const std::optional<Perturbation>& perturb) {
    DualityReport report;
    report.claim = "duality-diagram";
    report.trials = 1;
    report.target_precision = ctx.eval.prec;
    if (J > M) throw InvalidArgument("basis size J must not exceed the truncation M");

    const UmbralMap dual = UmbralMap::dual(inner, iso);
    Moments F(inner, x, ctx);
    Moments Fd(dual, x, ctx);
    const AdmissibilityParams params = params_of(ctx);
    require_admissible(F, params, inner.name());
    require_admissible(Fd, params, dual.name());
    if (perturb) Fd.override_moment(perturb->k, Fd(perturb->k) + perturb->delta);

    // phi(T^j) = H^j has infinitely many terms; D_Fhat applied to its
    // truncation at T^M loses the terms a_n Fhat_{n-h}, n >= M. Carry the
    // powers far enough that those are below target precision.
    const std::int64_t N = ctx.eval.prec;
    const std::int64_t ba = scaled_bound(J == 0 ? 0 : J - 1, min_valuation(iso.H()));
    const MomentDecay& decay = Fd.decay();
    const std::size_t horizon = Fd.tail_start(N, ba);
    const bool tail_vanishes = decay.support && *decay.support <= horizon;
    const std::size_t M_ext = M + horizon;
    if (iso.H().exponent_bound() < static_cast<std::int64_t>(M_ext)) {
        throw TruncationMismatch("generator known below T^" + std::to_string(iso.H().exponent_bound()) +
                                 " only; the duality check needs T^" + std::to_string(M_ext));
    }
    const TruncSeries Hs = iso.H().to_series(M_ext);
    const std::int64_t wp = ctx.eval.working_prec();
    std::vector<TruncSeries> powers;
    powers.push_back(TruncSeries::monomial(x.field(), M_ext, 0));
    const std::size_t npow = std::max(M, J);
    while (powers.size() < npow) powers.push_back(series_mul(powers.back(), Hs, wp));

    for (std::size_t j = 0; j < J; ++j) {
        const TruncSeries lhs_inner = apply_flow(F, TruncSeries::monomial(x.field(), M, j));
        TruncSeries lhs(x.field(), M);
        for (std::size_t h = 0; h < M; ++h) {
            if (lhs_inner[h].is_exact_zero()) continue;
            lhs = lhs + powers[h].truncated(M).scaled(lhs_inner[h], wp);
        }
        TruncSeries rhs = apply_flow(Fd, powers[j], M);
        if (!tail_vanishes) rhs = rhs.with_precision(N);
        for (std::size_t h = 0; h < M; ++h) {
            ReportEntry where;
            where.x = x;
            where.basis = j;
            where.index = h;
            report.expect_agree(lhs[h], rhs[h], where);
        }
    }
    report.counters["extended_truncation"] = static_cast<std::int64_t>(M_ext);
    return report;
}

GeometricCheck is_geometric_at(Moments& F, std::size_t k_max) {
    GeometricCheck out;
    const std::int64_t N = F.ctx().eval.prec;
    const LaurentF& g = F(1);
    const std::int64_t cap = g.is_exact() ? kPrecInf : F.working_prec();
    for (std::size_t k = 2; k <= k_max; ++k) {
        const LaurentF diff = F(k) - lau_pow(g, k, cap);
        const std::int64_t v = diff.valuation_floor();
        out.min_agreement = std::min(out.min_agreement, v);
        if (v >= N) continue;
        if (diff.is_zero_to_precision()) {
            out.precision_limited = true;
            continue;
        }
        out.geometric = false;
        out.first_failure = k;
        break;
    }
    return out;
}

GeometricCheck is_geometric_at(const UmbralMap& map, const LaurentF& x, std::size_t k_max,
                               const UmbralContext& ctx) {
    Moments F(map, x, ctx);
    return is_geometric_at(F, k_max);
}

DualityReport check_geometric_criterion(const UmbralMap& inner, const AdditiveIso& iso, const LaurentF& x,
                                        std::size_t J, std::size_t M, std::size_t k_max,
                                        const UmbralContext& ctx) {
    DualityReport report;
    report.claim = "geometric-criterion";
    report.trials = 1;
    report.target_precision = ctx.eval.prec;
    if (J > M) throw InvalidArgument("basis size J must not exceed the truncation M");

    const UmbralMap dual = UmbralMap::dual(inner, iso);
    Moments F(inner, x, ctx);
    Moments Fd(dual, x, ctx);
    const AdmissibilityParams params = params_of(ctx);
    require_admissible(F, params, inner.name());
    require_admissible(Fd, params, dual.name());

    const std::int64_t N = ctx.eval.prec;
    const std::int64_t wp = ctx.eval.working_prec();
    const LaurentF f1 = Fd(1);
    const bool small_f1 = f1.valuation_floor() >= 1;
    report.counters["first_dual_moment_small"] = small_f1 ? 1 : 0;

    // Both flows are finite sums on T^j, so the comparison is exact at M.
    bool agree = true;
    bool undecided = false;
    std::optional<ReportEntry> witness;
    std::int64_t min_seen = kValInf;
    for (std::size_t j = 0; j < J; ++j) {
        const TruncSeries P = TruncSeries::monomial(x.field(), M, j);
        const TruncSeries e = taylor_shift(P, f1, wp);
        const TruncSeries d = apply_flow(Fd, P);
        for (std::size_t h = 0; h < M; ++h) {
            const LaurentF diff = e[h] - d[h];
            const std::int64_t v = diff.valuation_floor();
            min_seen = std::min(min_seen, v);
            if (v >= N) continue;
            if (diff.is_zero_to_precision()) {
                undecided = true;
                continue;
            }
            agree = false;
            if (!witness) {
                ReportEntry w;
                w.x = x;
                w.basis = j;
                w.index = h;
                w.valuation = v;
                w.note = "flows differ";
                witness = w;
            }
        }
    }
    const GeometricCheck geo = is_geometric_at(F, k_max);
    report.counters["flows_agree"] = agree ? 1 : 0;
    report.counters["geometric"] = geo.geometric ? 1 : 0;
    if (geo.first_failure) report.counters["witness_k"] = static_cast<std::int64_t>(*geo.first_failure);
    if (witness) report.witnesses.push_back(*witness);
    if (agree) report.min_agreement_valuation = min_seen;

    if ((undecided && agree) || (geo.precision_limited && geo.geometric)) {
        report.precision_limited = true;
        ReportEntry e;
        e.x = x;
        e.note = "undecided at working precision";
        e.valuation = min_seen;
        report.fail(e);
        return report;
    }
    if (agree != geo.geometric) {
        ReportEntry e;
        e.x = x;
        e.valuation = min_seen;
        e.note = agree ? "flows agree but the map is not geometric at x" : "flows differ but the map is geometric at x";
        if (witness) {
            e.basis = witness->basis;
            e.index = witness->index;
        }
        report.fail(e);
    }
    return report;
}

DualityReport check_binomial(const UmbralMap& map, const LaurentF& x, const LaurentF& y, std::size_t n_max,
                             const UmbralContext& ctx) {
    DualityReport report;
    report.claim = "binomial";
    report.trials = 1;
    report.target_precision = ctx.eval.prec;
    Moments Fx(map, x, ctx);
    Moments Fy(map, y, ctx);
    Moments Fxy(map, x + y, ctx);
    const AdmissibilityParams params = params_of(ctx);
    require_admissible(Fx, params, map.name() + " at x");
    require_admissible(Fy, params, map.name() + " at y");
    require_admissible(Fxy, params, map.name() + " at x+y");
    const std::int64_t wp = ctx.eval.working_prec();
    const FieldCtx& f = *x.field();
    for (std::size_t n = 0; n <= n_max; ++n) {
        LaurentF rhs = LaurentF::zero(x.field());
        for (std::size_t k = 0; k <= n; ++k) {
            const std::uint32_t b = binom_mod_p(n, k, f.p());
            if (b == 0) continue;
            const LaurentF& a = Fx(k);
            const LaurentF& c = Fy(n - k);
            if (a.is_exact_zero() || c.is_exact_zero()) continue;
            rhs = rhs + mul_capped(a, c, wp).scaled(f.from_int(b));
        }
        ReportEntry where;
        where.x = x;
        where.index = n;
        report.expect_agree(Fxy(n), rhs, where);
    }
    return report;
}

AdditiveIso compose_isos(const AdditiveIso& a, const AdditiveIso& b, std::int64_t cap) {
    require_same_field(a.field(), b.field());
    AdditiveSeries H = additive_compose(a.H(), b.H(), cap);
    AdditiveSeries Hinv = additive_compose(b.Hinv(), a.Hinv(), cap);
    if (H.range() == 0 || Hinv.range() == 0) throw TruncationMismatch("composite isomorphism has no known terms");
    return AdditiveIso(std::move(H), std::move(Hinv));
}

std::size_t carlitz_exp_terms(std::uint64_t q, std::int64_t v, std::int64_t prec) {
    std::size_t K = 0;
    long double qk = 1;
    while (qk * static_cast<long double>(v + static_cast<std::int64_t>(K)) < static_cast<long double>(prec)) {
        ++K;
        qk *= static_cast<long double>(q);
    }
    return K;
}

AdditiveIso carlitz_exp_iso(const CarlitzCtx& carlitz, std::size_t terms, std::size_t range, std::int64_t prec) {
    const FieldPtr& field = carlitz.field();
    const std::size_t d = field->d();
    std::vector<LaurentF> h(terms == 0 ? 1 : (terms - 1) * d + 1, LaurentF::zero(field));
    for (std::size_t k = 0; k < std::max<std::size_t>(terms, 1); ++k) {
        h[k * d] = lau_inv(LaurentF::from_poly(carlitz.dk(k)), prec);
    }
    return AdditiveIso::from_inverse(AdditiveSeries(field, std::move(h), true), range, prec);
}

AdditiveIso carlitz_exp_one_iso(const CarlitzCtx& carlitz, std::size_t terms, std::size_t range,
                                std::int64_t prec) {
    const FieldPtr& field = carlitz.field();
    const std::size_t d = field->d();
    const LaurentF c = carlitz.exp_entire(LaurentF::one(field), prec);
    std::vector<LaurentF> h(terms == 0 ? 1 : (terms - 1) * d + 1, LaurentF::zero(field));
    for (std::size_t k = 0; k < std::max<std::size_t>(terms, 1); ++k) {
        h[k * d] = lau_truncate(lau_frobenius(c, k * d), prec);
    }
    return AdditiveIso::from_inverse(AdditiveSeries(field, std::move(h), true), range, prec);
}

}  // namespace umbral
