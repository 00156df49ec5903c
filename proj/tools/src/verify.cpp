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
#include "umbral_cli/verify.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <exception>
#include <functional>
#include <mutex>
#include <optional>
#include <sstream>
#include <thread>

#include "umbral/error.hpp"
#include "umbral_cli/sampling.hpp"

namespace umbral::cli {
namespace {

// Everything one attempt at one claim needs.
struct Env {
    const Config& cfg;
    FieldPtr field;
    std::int64_t prec;
    std::int64_t guard;
    UmbralContext ctx;

    std::int64_t wp() const { return ctx.eval.working_prec(); }
    std::size_t count(std::size_t fallback) const { return cfg.trials.value_or(fallback); }
    Sampler sampler(const std::string& stream, std::uint64_t trial) const {
        return Sampler(field, cfg.seed, stream, trial);
    }
    DualityReport blank(const std::string& claim) const {
        DualityReport r;
        r.claim = claim;
        r.trials = 1;
        r.target_precision = prec;
        return r;
    }
};

// A recoverable error inside one trial becomes a failure of that trial.
DualityReport guarded(const Env& env, const std::string& claim, const std::function<DualityReport()>& fn) {
    try {
        return fn();
    } catch (const PrecisionLoss& e) {
        DualityReport r = env.blank(claim);
        r.precision_limited = true;
        r.fail(ReportEntry{{}, {}, 0, kValInf, std::string("undecided: ") + e.what()});
        return r;
    } catch (const NoConvergenceDetected& e) {
        DualityReport r = env.blank(claim);
        r.precision_limited = true;
        r.fail(ReportEntry{{}, {}, 0, kValInf, std::string("undecided: ") + e.what()});
        return r;
    } catch (const Error& e) {
        DualityReport r = env.blank(claim);
        r.fail(ReportEntry{{}, {}, 0, kValInf, std::string("error: ") + e.what()});
        return r;
    }
}

// Runs fn(0..n-1) on a thread pool and merges the reports in index order,
// so the result does not depend on scheduling.
DualityReport run_trials(const Env& env, const std::string& claim, std::size_t n,
                         const std::function<DualityReport(std::size_t)>& fn) {
    std::vector<std::optional<DualityReport>> out(n);
    std::atomic<std::size_t> next{0};
    std::exception_ptr first_error;
    std::mutex error_mutex;
    auto worker = [&] {
        for (;;) {
            const std::size_t i = next.fetch_add(1);
            if (i >= n) return;
            try {
                out[i] = guarded(env, claim, [&] { return fn(i); });
            } catch (...) {
                std::lock_guard<std::mutex> lock(error_mutex);
                if (!first_error) first_error = std::current_exception();
            }
        }
    };
    const std::size_t hw = std::max(1u, std::thread::hardware_concurrency());
    const std::size_t threads = std::min<std::size_t>({hw, 16, n});
    std::vector<std::thread> pool;
    for (std::size_t t = 1; t < threads; ++t) pool.emplace_back(worker);
    worker();
    for (auto& th : pool) th.join();
    if (first_error) std::rethrow_exception(first_error);

    DualityReport total = env.blank(claim);
    total.trials = 0;
    for (auto& r : out) total.merge(*r);
    return total;
}

void compare_series(DualityReport& r, const TruncSeries& a, const TruncSeries& b, const LaurentF& x,
                    std::optional<std::size_t> basis = {}) {
    const std::size_t m = std::min(a.trunc(), b.trunc());
    for (std::size_t h = 0; h < m; ++h) r.expect_agree(a[h], b[h], ReportEntry{x, basis, h, kValInf, ""});
}

std::size_t q_of(const Env& env) { return env.field->q(); }

// Smallest r with p^r >= bound.
std::size_t p_range(const FieldCtx& f, std::int64_t bound) {
    std::size_t r = 0;
    std::int64_t pw = 1;
    while (pw < bound) {
        pw *= f.p();
        ++r;
    }
    return r;
}

// Enough p-power terms for the extended truncations the duality checks use.
std::size_t iso_range(const Env& env) {
    return p_range(*env.field, static_cast<std::int64_t>(env.cfg.trunc) + 2 * env.wp());
}

// Degree bound of the A-elements drawn by the suites.
constexpr int kMaxDeg = 4;

// Hinv = the Carlitz exponential cut to a polynomial; its dual over the
// additive map is the naive map.
AdditiveIso exp_iso(const Env& env) {
    const std::size_t K = carlitz_exp_terms(q_of(env), 1, env.wp());
    return carlitz_exp_iso(*env.ctx.carlitz, K, iso_range(env), env.wp() + env.prec);
}

// Hinv = sum (e_C(1) T)^(q^k); its dual over the twisted map has first
// moment e_C(x) on A-elements of degree <= kMaxDeg.
AdditiveIso exp_one_iso(const Env& env) {
    return carlitz_exp_one_iso(*env.ctx.carlitz, kMaxDeg + 2, iso_range(env), 2 * env.wp());
}

LaurentF sample_a(Sampler& s, bool nonzero) { return LaurentF::from_poly(s.polynomial(kMaxDeg, nonzero)); }

// ---- suites ---------------------------------------------------------

DualityReport suite_taylor(const Env& env) {
    const std::size_t M = env.cfg.trunc;
    return run_trials(env, "taylor", env.count(200), [&](std::size_t i) {
        Sampler s = env.sampler("taylor", i);
        const LaurentF x = s.tail(1, env.prec);
        const TruncSeries P = s.series(M);
        Moments F(UmbralMap::additive(), x, env.ctx);
        DualityReport r = env.blank("taylor");
        compare_series(r, apply_flow(F, P), taylor_shift(P, x, env.wp()), x);
        return r;
    });
}

DualityReport suite_naive_flow(const Env& env) {
    const std::size_t M = env.cfg.trunc;
    return run_trials(env, "naive-flow", env.count(100), [&](std::size_t i) {
        Sampler s = env.sampler("naive-flow", i);
        const LaurentF x = s.tail(1, env.prec);
        const TruncSeries P = s.series(M);
        Moments F(UmbralMap::naive(), x, env.ctx);
        const LaurentF shift = env.ctx.carlitz->exp(x, env.wp());
        DualityReport r = env.blank("naive-flow");
        compare_series(r, apply_flow(F, P), taylor_shift(P, shift, env.wp()), x);
        return r;
    });
}

// target_precision is 0 here and the agreement values are the slack
// v(coefficient) - bound, so pass still means every slack is >= target.
DualityReport suite_boundedness(const Env& env) {
    const std::size_t M = env.cfg.trunc;
    const std::size_t n = env.count(100);
    const std::vector<UmbralMap> maps = {UmbralMap::additive(), UmbralMap::naive(), UmbralMap::twisted()};
    DualityReport total = run_trials(env, "boundedness", maps.size() * n, [&](std::size_t i) {
        const UmbralMap& map = maps[i / n];
        Sampler s = env.sampler("boundedness/" + map.name(), i % n);
        const LaurentF x =
            map.kind() == UmbralMap::Kind::Twisted ? sample_a(s, false) : s.tail(1, env.prec);
        const TruncSeries P = s.series(M);
        Moments F(map, x, env.ctx);
        std::int64_t min_moment = kValInf;
        for (std::size_t k = 0; k < M; ++k) min_moment = std::min(min_moment, F(k).valuation_floor());
        const std::int64_t bound = sup_valuation(P) + min_moment;
        const TruncSeries out = apply_flow(F, P);
        DualityReport r = env.blank("boundedness");
        r.target_precision = 0;
        for (std::size_t h = 0; h < M; ++h) {
            const LaurentF& c = out[h];
            if (c.is_exact_zero()) continue;
            const std::int64_t slack = c.valuation_floor() - bound;
            r.min_agreement_valuation = std::min(r.min_agreement_valuation, slack);
            if (slack >= 0) continue;
            ReportEntry e{x, {}, h, c.valuation_floor(), map.name() + ": below bound " + std::to_string(bound)};
            if (c.is_zero_to_precision()) {
                r.precision_limited = true;
                e.note += "; undecided at working precision";
            }
            r.fail(std::move(e));
        }
        return r;
    });
    total.target_precision = 0;
    return total;
}

// All compositions of n into h positive parts.
void compositions(std::size_t n, std::size_t h, std::vector<std::size_t>& cur,
                  std::vector<std::vector<std::size_t>>& out) {
    if (h == 0) {
        if (n == 0) out.push_back(cur);
        return;
    }
    for (std::size_t i = 1; i + (h - 1) <= n; ++i) {
        cur.push_back(i);
        compositions(n - i, h - 1, cur, out);
        cur.pop_back();
    }
}

DualityReport suite_power_rule(const Env& env) {
    const std::size_t M = env.cfg.trunc;
    const FieldPtr& f = env.field;
    return run_trials(env, "power-rule", env.count(50), [&](std::size_t i) {
        Sampler s = env.sampler("power-rule", i);
        const TruncSeries P = s.series(M);
        const std::int64_t cap = env.wp();
        DualityReport r = env.blank("power-rule");
        const LaurentF tag = LaurentF::zero(f);
        for (std::size_t k = 2; k <= 4; ++k) {
            for (std::size_t n = 1; n <= 4 && n < M; ++n) {
                const std::size_t out_m = M - n;
                const TruncSeries lhs = hasse_derivative(series_pow(P, k, cap), n);
                TruncSeries rhs(f, out_m);
                for (std::size_t h = 1; h <= k; ++h) {
                    const std::uint32_t b = binom_mod_p(k, h, f->p());
                    if (b == 0) continue;
                    std::vector<std::vector<std::size_t>> parts;
                    std::vector<std::size_t> cur;
                    compositions(n, h, cur, parts);
                    TruncSeries inner(f, out_m);
                    for (const auto& c : parts) {
                        TruncSeries prod = TruncSeries::monomial(f, out_m, 0);
                        for (std::size_t idx : c) prod = series_mul(prod, hasse_derivative(P, idx).truncated(out_m), cap);
                        inner = inner + prod;
                    }
                    const TruncSeries term =
                        series_mul(series_pow(P.truncated(out_m), k - h, cap), inner, cap);
                    rhs = rhs + term.scaled(LaurentF::from_int(f, b), cap);
                }
                for (std::size_t j = 0; j < out_m; ++j)
                    r.expect_agree(lhs[j], rhs[j], ReportEntry{{}, k, j, kValInf, "n=" + std::to_string(n)});
            }
        }
        return r;
    });
}

DualityReport suite_binomial(const Env& env, const std::string& claim, bool dual) {
    const std::size_t q = q_of(env);
    std::optional<UmbralMap> map;
    if (dual)
        map = UmbralMap::dual(UmbralMap::twisted(), exp_one_iso(env));
    else
        map = UmbralMap::twisted();
    return run_trials(env, claim, env.count(20), [&](std::size_t i) {
        // Both claims draw from the same stream, so they see the same pairs.
        Sampler s = env.sampler("binomial", i);
        const LaurentF x = sample_a(s, false);
        const LaurentF y = sample_a(s, false);
        DualityReport r = check_binomial(*map, x, y, q * q * q, env.ctx);
        r.claim = claim;
        return r;
    });
}

DualityReport suite_flow_composition(const Env& env) {
    const std::size_t M = env.cfg.trunc;
    const UmbralMap T = UmbralMap::twisted();
    return run_trials(env, "flow-composition", env.count(50), [&](std::size_t i) {
        Sampler s = env.sampler("flow-composition", i);
        const LaurentF x = sample_a(s, false);
        const LaurentF y = sample_a(s, false);
        const TruncSeries P = s.series(M);
        const TruncSeries lhs = apply_flow(T, x + y, P, env.ctx);
        const TruncSeries rhs = apply_flow(T, x, apply_flow(T, y, P, env.ctx), env.ctx);
        DualityReport r = env.blank("flow-composition");
        compare_series(r, lhs, rhs, x + y);
        return r;
    });
}

DualityReport suite_duality(const Env& env) {
    const std::size_t M = env.cfg.trunc;
    const std::size_t J = env.cfg.basis;
    const AdditiveIso iso57 = exp_iso(env);
    const AdditiveIso iso58 = exp_one_iso(env);
    const std::size_t n = env.count(50);

    DualityReport total = run_trials(env, "duality", 2 * n, [&](std::size_t i) {
        if (i < n) {
            Sampler s = env.sampler("duality/additive", i);
            return check_duality_diagram(UmbralMap::additive(), iso57, s.tail(1, env.prec), J, M, env.ctx);
        }
        Sampler s = env.sampler("duality/twisted", i - n);
        return check_duality_diagram(UmbralMap::twisted(), iso58, sample_a(s, true), J, M, env.ctx);
    });

    const std::size_t np = env.count(20);
    std::vector<std::int64_t> detected(np, 0);
    DualityReport perturbed = run_trials(env, "duality", np, [&](std::size_t i) {
        Sampler s = env.sampler("duality/perturbed", i);
        const bool additive = i % 2 == 0;
        const LaurentF x = additive ? s.tail(1, env.prec) : sample_a(s, true);
        const std::size_t k = 1 + static_cast<std::size_t>(s.engine()() % (J - 1));
        const Perturbation pert{k, LaurentF::constant(env.field, s.nonzero_element())};
        const DualityReport d =
            additive ? check_duality_diagram(UmbralMap::additive(), iso57, x, J, M, env.ctx, pert)
                     : check_duality_diagram(UmbralMap::twisted(), iso58, x, J, M, env.ctx, pert);
        DualityReport r = env.blank("duality");
        const bool seen = std::any_of(d.failures.begin(), d.failures.end(),
                                      [&](const ReportEntry& e) { return e.valuation < env.prec; });
        if (seen) {
            r.counters["perturbations_detected"] = 1;
            r.witnesses.push_back(ReportEntry{x, k, 0, d.min_agreement_valuation, "perturbed moment detected"});
        } else {
            r.fail(ReportEntry{x, k, 0, d.min_agreement_valuation, "perturbed moment not detected"});
        }
        return r;
    });
    // The discrepancies of perturbed runs are expected, so only their
    // verdicts are merged.
    total.trials += perturbed.trials;
    total.failures.insert(total.failures.end(), perturbed.failures.begin(), perturbed.failures.end());
    total.witnesses.insert(total.witnesses.end(), perturbed.witnesses.begin(), perturbed.witnesses.end());
    total.counters["perturbed_trials"] = static_cast<std::int64_t>(np);
    total.counters["perturbations_detected"] = perturbed.counters["perturbations_detected"];
    total.counters.erase("extended_truncation");
    return total;
}

std::int64_t counter(const DualityReport& r, const std::string& key) {
    auto it = r.counters.find(key);
    return it == r.counters.end() ? -1 : it->second;
}

DualityReport suite_geometric(const Env& env) {
    const std::size_t M = env.cfg.trunc;
    const std::size_t J = env.cfg.basis;
    const std::size_t q = q_of(env);
    const AdditiveIso iso57 = exp_iso(env);
    const AdditiveIso iso58 = exp_one_iso(env);
    const std::size_t na = env.count(50);
    const std::size_t nb = 1 + env.count(10);

    return run_trials(env, "geometric", na + nb, [&](std::size_t i) {
        if (i < na) {
            Sampler s = env.sampler("geometric/additive", i);
            const LaurentF x = s.tail(1, env.prec);
            DualityReport r = check_geometric_criterion(UmbralMap::additive(), iso57, x, J, M, env.cfg.k_max, env.ctx);
            if (counter(r, "flows_agree") != 1 || counter(r, "geometric") != 1)
                r.fail(ReportEntry{x, {}, 0, r.min_agreement_valuation, "expected agreeing flows of a geometric map"});
            r.counters.erase("witness_k");
            r.counters["additive_trials"] = 1;
            return r;
        }
        LaurentF x = LaurentF::one(env.field);
        if (i > na) {
            Sampler s = env.sampler("geometric/twisted", i - na - 1);
            do {
                x = sample_a(s, true);
            } while (x == LaurentF::one(env.field));
        }
        DualityReport r = check_geometric_criterion(UmbralMap::twisted(), iso58, x, J, M, env.cfg.k_max, env.ctx);
        const std::int64_t wk = counter(r, "witness_k");
        if (counter(r, "flows_agree") != 0 || counter(r, "geometric") != 0)
            r.fail(ReportEntry{x, {}, 0, r.min_agreement_valuation, "expected differing flows of a non-geometric map"});
        else if (wk < 0 || wk > static_cast<std::int64_t>(q * q))
            r.fail(ReportEntry{x, {}, static_cast<std::size_t>(std::max<std::int64_t>(wk, 0)), kValInf,
                               "non-geometric witness beyond q^2"});
        // The differing flows are the expected outcome here; they are
        // witnesses, not disagreements.
        r.min_agreement_valuation = kValInf;
        r.counters["witness_within_q2"] = wk >= 0 && wk <= static_cast<std::int64_t>(q * q) ? 1 : 0;
        r.counters.erase("witness_k");
        r.counters["twisted_trials"] = 1;
        return r;
    });
}

DualityReport suite_example57(const Env& env) {
    const std::size_t M = env.cfg.trunc;
    const std::size_t J = env.cfg.basis;
    const AdditiveIso iso57 = exp_iso(env);
    const UmbralMap dual = UmbralMap::dual(UmbralMap::additive(), iso57);
    return run_trials(env, "example57", env.count(50), [&](std::size_t i) {
        Sampler s = env.sampler("example57", i);
        const LaurentF x = s.tail(1, env.prec);
        Moments Fd(dual, x, env.ctx);
        Moments Fn(UmbralMap::naive(), x, env.ctx);
        DualityReport r = env.blank("example57");
        for (std::size_t k = 0; k < M; ++k) r.expect_agree(Fd(k), Fn(k), ReportEntry{x, {}, k, kValInf, "moment"});
        for (std::size_t j = 0; j < J; ++j) {
            const TruncSeries P = TruncSeries::monomial(env.field, M, j);
            compare_series(r, apply_flow(Fd, P), apply_flow(Fn, P), x, j);
        }
        return r;
    });
}

DualityReport suite_example58(const Env& env) {
    const FieldPtr& f = env.field;
    const LaurentF t = LaurentF::monomial(f, -1);
    const LaurentF one = LaurentF::one(f);
    const std::vector<LaurentF> xs = {t, t + one, t * t, t * t + t + one};
    const AdditiveIso iso58 = exp_one_iso(env);
    const UmbralMap dual = UmbralMap::dual(UmbralMap::twisted(), iso58);
    const std::int64_t wp = env.wp();
    const LaurentF c = env.ctx.carlitz->exp_entire(one, 2 * wp);
    const std::size_t q = q_of(env);
    return run_trials(env, "example58", xs.size(), [&](std::size_t i) {
        const LaurentF& x = xs[i];
        const LaurentF target = env.ctx.carlitz->exp_entire(x, wp);
        // Direct sum; e_k(x) vanishes once k exceeds deg x.
        LaurentF sum = LaurentF::zero(f);
        LaurentF ck = c;
        for (std::size_t k = 0; k <= static_cast<std::size_t>(kMaxDeg) + 1; ++k) {
            sum = sum + lau_mul(ck, env.ctx.carlitz->ek_over_dk(k, x, wp), wp);
            ck = lau_pow(ck, q, 2 * wp);
        }
        DualityReport r = env.blank("example58");
        r.expect_agree(sum, target, ReportEntry{x, {}, 1, kValInf, "closed sum"});
        Moments Fd(dual, x, env.ctx);
        r.expect_agree(Fd(1), target, ReportEntry{x, {}, 1, kValInf, "dual first moment"});
        return r;
    });
}

DualityReport suite_iso_roundtrip(const Env& env) {
    const std::size_t M = env.cfg.trunc;
    const FieldPtr& f = env.field;
    const std::int64_t cap = env.wp() + env.prec;
    const std::size_t range = iso_range(env);
    const std::size_t n_inv = env.count(20);
    const std::size_t n_sym = env.count(20);
    const std::size_t n_tri = env.count(10);

    // Alternates an additive map at a tail with a twisted map at an
    // A-element.
    auto point = [&](Sampler& s, std::size_t i) {
        return i % 2 == 0 ? std::pair{UmbralMap::additive(), s.tail(1, env.prec)}
                          : std::pair{UmbralMap::twisted(), LaurentF::from_poly(s.polynomial(2, true))};
    };
    auto same_moments = [&](DualityReport& r, const UmbralMap& a, const UmbralMap& b, const LaurentF& x) {
        Moments Fa(a, x, env.ctx);
        Moments Fb(b, x, env.ctx);
        for (std::size_t k = 0; k < M; ++k) r.expect_agree(Fa(k), Fb(k), ReportEntry{x, {}, k, kValInf, b.name()});
    };

    return run_trials(env, "iso-roundtrip", n_inv + n_sym + n_tri, [&](std::size_t i) {
        DualityReport r = env.blank("iso-roundtrip");
        if (i < n_inv) {
            Sampler s = env.sampler("iso-roundtrip/inverse", i);
            const AdditiveSeries H = s.generator(3);
            const AdditiveSeries Hinv = additive_inverse(H, range, cap);
            const AdditiveSeries id = AdditiveSeries::identity(f);
            const AdditiveSeries left = additive_compose(H, Hinv, cap);
            const AdditiveSeries right = additive_compose(Hinv, H, cap);
            for (std::size_t k = 0; k < std::min(left.range(), right.range()); ++k) {
                const LaurentF want = k == 0 ? LaurentF::one(f) : LaurentF::zero(f);
                r.expect_agree(left[k], want, ReportEntry{{}, {}, k, kValInf, "H o Hinv"});
                r.expect_agree(right[k], want, ReportEntry{{}, {}, k, kValInf, "Hinv o H"});
            }
            r.counters["inverse_trials"] = 1;
            return r;
        }
        if (i < n_inv + n_sym) {
            const std::size_t j = i - n_inv;
            Sampler s = env.sampler("iso-roundtrip/symmetry", j);
            const auto [map, x] = point(s, j);
            const AdditiveIso iso = AdditiveIso::from_generator(s.generator(3), range, cap);
            const UmbralMap back = UmbralMap::dual(UmbralMap::dual(map, iso), iso.inverse());
            same_moments(r, map, back, x);
            r.counters["symmetry_trials"] = 1;
            return r;
        }
        const std::size_t j = i - n_inv - n_sym;
        Sampler s = env.sampler("iso-roundtrip/transitivity", j);
        const auto [map, x] = point(s, j);
        const AdditiveIso a = AdditiveIso::from_generator(s.generator(3), range, cap);
        const AdditiveIso b = AdditiveIso::from_generator(s.generator(3), range, cap);
        const UmbralMap iterated = UmbralMap::dual(UmbralMap::dual(map, a), b);
        const UmbralMap composite = UmbralMap::dual(map, compose_isos(a, b, cap));
        same_moments(r, iterated, composite, x);
        r.counters["transitivity_trials"] = 1;
        return r;
    });
}

// ---- dispatch -------------------------------------------------------

struct ClaimEntry {
    std::string name;
    // Target precision when --prec is not given; 0 keeps the config value.
    std::int64_t default_prec;
    std::function<DualityReport(const Env&)> run;
};

const std::vector<ClaimEntry>& claim_table() {
    static const std::vector<ClaimEntry> table = {
        {"taylor", 0, suite_taylor},
        {"naive-flow", 0, suite_naive_flow},
        {"boundedness", 0, suite_boundedness},
        {"power-rule", 0, suite_power_rule},
        {"binomial-twisted", 128, [](const Env& e) { return suite_binomial(e, "binomial-twisted", false); }},
        {"flow-composition", 0, suite_flow_composition},
        {"duality", 0, suite_duality},
        {"dual-binomial", 128, [](const Env& e) { return suite_binomial(e, "dual-binomial", true); }},
        {"geometric", 0, suite_geometric},
        {"example57", 0, suite_example57},
        {"example58", 48, suite_example58},
        {"iso-roundtrip", 0, suite_iso_roundtrip},
    };
    return table;
}

constexpr int kMaxRetries = 2;

ClaimResult run_claim(const ClaimEntry& entry, const Config& cfg) {
    const auto start = std::chrono::steady_clock::now();
    const FieldPtr field = cfg.make_field();
    const std::int64_t prec = (cfg.prec_explicit || entry.default_prec == 0) ? cfg.prec : entry.default_prec;
    ClaimResult res;
    std::int64_t guard = cfg.guard;
    for (int attempt = 0;; ++attempt) {
        Env env{cfg, field, prec, guard, make_context(cfg, field, prec, guard)};
        res.report = entry.run(env);
        res.report.claim = entry.name;
        res.guard = guard;
        res.attempts = static_cast<std::size_t>(attempt) + 1;
        if (res.report.pass() || !res.report.precision_limited || attempt == kMaxRetries) break;
        guard = std::max<std::int64_t>(2 * guard, 8);
    }
    res.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return res;
}

ClaimResult run_determinism(const Config& cfg) {
    const auto start = std::chrono::steady_clock::now();
    Config small = cfg;
    small.trials = cfg.trials.value_or(3);
    ClaimResult res;
    res.guard = cfg.guard;
    DualityReport& r = res.report;
    r.claim = "determinism";
    r.target_precision = cfg.prec;
    const int runs = 3;
    std::string first;
    for (int i = 0; i < runs; ++i) {
        RunReport run{small, {}};
        for (const ClaimEntry& entry : claim_table()) run.claims.push_back(run_claim(entry, small));
        const std::string bytes = run.to_json().dump();
        if (i == 0)
            first = bytes;
        else if (bytes != first)
            r.fail(ReportEntry{{}, {}, static_cast<std::size_t>(i), kValInf, "report bytes differ from run 0"});
        ++r.trials;
    }
    r.counters["runs"] = runs;
    r.counters["report_bytes"] = static_cast<std::int64_t>(first.size());
    res.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return res;
}

}  // namespace

bool RunReport::pass() const noexcept {
    return std::all_of(claims.begin(), claims.end(), [](const ClaimResult& c) { return c.report.pass(); });
}

Json RunReport::to_json() const {
    Json j;
    j["config"] = config.to_json();
    j["field"] = field_json(*config.make_field());
    Json list = Json::array();
    for (const ClaimResult& c : claims) {
        Json e = umbral::to_json(c.report);
        e["guard"] = c.guard;
        e["attempts"] = c.attempts;
        list.push_back(std::move(e));
    }
    j["claims"] = std::move(list);
    j["pass"] = pass();
    return j;
}

const std::vector<std::string>& claim_names() {
    static const std::vector<std::string> names = [] {
        std::vector<std::string> v;
        for (const ClaimEntry& s : claim_table()) v.push_back(s.name);
        v.push_back("determinism");
        return v;
    }();
    return names;
}

RunReport run_verify(const std::string& claim, const Config& cfg) {
    cfg.validate();
    RunReport out{cfg, {}};
    if (claim == "all") {
        for (const ClaimEntry& entry : claim_table()) out.claims.push_back(run_claim(entry, cfg));
        out.claims.push_back(run_determinism(cfg));
        return out;
    }
    if (claim == "determinism") {
        out.claims.push_back(run_determinism(cfg));
        return out;
    }
    for (const ClaimEntry& entry : claim_table()) {
        if (entry.name == claim) {
            out.claims.push_back(run_claim(entry, cfg));
            return out;
        }
    }
    throw UnknownClaim("unknown claim '" + claim + "'");
}

std::string summary(const RunReport& report) {
    std::ostringstream os;
    for (const ClaimResult& c : report.claims) {
        os << (c.report.pass() ? "PASS " : "FAIL ") << c.report.claim << ": " << c.report.trials << " trials, "
           << c.report.failures.size() << " failures, min agreement ";
        if (c.report.min_agreement_valuation >= kValInf)
            os << "inf";
        else
            os << c.report.min_agreement_valuation;
        os << " (target " << c.report.target_precision << ", guard " << c.guard << ", " << c.seconds << " s)\n";
    }
    return os.str();
}

}  // namespace umbral::cli
