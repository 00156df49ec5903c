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

namespace {

// a + b for valuation bounds, where either side may be kValInf.
std::int64_t val_add(std::int64_t a, std::int64_t b) {
    if (a >= kValInf || b >= kValInf) return kValInf;
    return std::clamp<std::int64_t>(a + b, -kValInf + 1, kValInf);
}

}  // namespace

Moments::Moments(UmbralMap map, LaurentF x, UmbralContext ctx)
    : map_(std::move(map)), x_(std::move(x)), ctx_(std::move(ctx)) {
    require_same_field(x_.field(), ctx_.field);
    if (map_.kind() == UmbralMap::Kind::Dual) {
        inner_ = std::make_shared<Moments>(map_.inner(), x_, ctx_);
        const AdditiveSeries& hinv = map_.iso().Hinv();
        require_same_field(hinv.field(), ctx_.field);
        hinv_min_val_ = kValInf;
        std::size_t e = 1;
        for (std::size_t i = 0; i < hinv.size(); ++i) {
            if (!hinv[i].is_exact_zero()) {
                hinv_terms_.emplace_back(e, hinv[i]);
                hinv_min_val_ = std::min(hinv_min_val_, hinv[i].valuation_floor());
                hinv_degree_ = e;
            }
            e *= ctx_.field->p();
        }
        hinv_exact_ = hinv.exact();
        hinv_known_ = hinv.exponent_bound();
        if (hinv_terms_.empty()) throw NotAGenerator("dual map built from a zero series");
    }
}

const LaurentF& Moments::operator()(std::size_t k) {
    while (cache_.size() <= k) {
        const std::size_t i = cache_.size();
        auto it = overrides_.find(i);
        cache_.push_back(it != overrides_.end() ? it->second : compute(i));
    }
    return cache_[k];
}

void Moments::override_moment(std::size_t k, LaurentF value) {
    // Dual moments are produced in order, so earlier ones are computed from
    // the unmodified recursion first.
    if (map_.kind() == UmbralMap::Kind::Dual && k > 0) (*this)(k - 1);
    overrides_.insert_or_assign(k, value);
    if (k < cache_.size()) cache_[k] = std::move(value);
    decay_.reset();
}

LaurentF Moments::compute(std::size_t k) {
    if (k == 0) {
        // Keep the dual recursion aligned even though F_0 = 1 needs no work.
        return LaurentF::one(ctx_.field);
    }
    switch (map_.kind()) {
        case UmbralMap::Kind::Additive:
        case UmbralMap::Kind::Naive:
        case UmbralMap::Kind::Geometric:
            return geometric_moment(k);
        case UmbralMap::Kind::Twisted:
            return twisted_moment(k);
        case UmbralMap::Kind::Dual:
            return dual_moment_next();
    }
    throw InvalidArgument("unknown umbral map kind");
}

LaurentF Moments::geometric_moment(std::size_t k) {
    const std::int64_t wp = working_prec();
    if (!gamma_) {
        switch (map_.kind()) {
            case UmbralMap::Kind::Additive:
                gamma_ = x_.is_polynomial() ? x_ : lau_truncate(x_, wp);
                break;
            case UmbralMap::Kind::Naive:
                gamma_ = ctx_.carlitz->exp(x_, wp);
                break;
            default:
                gamma_ = eval_scalar(map_.gamma(), ctx_, x_, wp);
                if (!gamma_->is_exact()) gamma_ = lau_truncate(*gamma_, wp);
                break;
        }
    }
    return lau_pow(*gamma_, k, gamma_->is_exact() ? kPrecInf : wp);
}

const LaurentF& Moments::twisted_factor(std::size_t j) {
    while (twisted_factors_.size() <= j) {
        twisted_factors_.push_back(ctx_.carlitz->ek_over_dk(twisted_factors_.size(), x_, working_prec()));
    }
    return twisted_factors_[j];
}

LaurentF Moments::twisted_moment(std::size_t n) {
    if (x_.is_polynomial()) {
        const auto& d = decay();
        if (d.support && n >= *d.support) return LaurentF::zero(ctx_.field);
    }
    const std::int64_t wp = working_prec();
    const std::uint64_t q = ctx_.field->q();
    LaurentF prod = LaurentF::one(ctx_.field);
    std::uint64_t rest = n;
    for (std::size_t j = 0; rest > 0; ++j, rest /= q) {
        const std::uint64_t digit = rest % q;
        if (digit == 0) continue;
        const LaurentF& f = twisted_factor(j);
        for (std::uint64_t s = 0; s < digit; ++s) prod = mul_capped(prod, f, wp);
        if (prod.is_exact_zero()) break;
    }
    return prod;
}

const MomentDecay& Moments::decay() {
    if (decay_) return *decay_;
    MomentDecay d;
    switch (map_.kind()) {
        case UmbralMap::Kind::Additive:
        case UmbralMap::Kind::Naive:
        case UmbralMap::Kind::Geometric: {
            const LaurentF& g = (*this)(1);
            if (g.is_exact_zero()) {
                d.support = 1;
            } else {
                d.rate = g.valuation_floor();
            }
            break;
        }
        case UmbralMap::Kind::Twisted:
            if (x_.is_polynomial()) {
                // Once some x + eps vanishes, every later e_j(x) has that
                // factor too, so T_n(x) = 0 for n >= q^j.
                std::uint64_t qj = 1;
                for (std::size_t j = 0;; ++j) {
                    if (twisted_factor(j).is_exact_zero()) {
                        d.support = qj;
                        break;
                    }
                    qj *= ctx_.field->q();
                }
            }
            break;
        case UmbralMap::Kind::Dual: {
            const MomentDecay& in = inner_->decay();
            d.support = in.support;
            // Hinv(T)^m starts at T^m with coefficients of valuation
            // >= m * min v(h_i).
            if (in.rate && *in.rate >= 0) d.rate = *in.rate + hinv_min_val_;
            break;
        }
    }
    // The bounds hold for the computed sequence; overridden values may
    // break them.
    for (const auto& [k, value] : overrides_) {
        if (value.is_exact_zero()) continue;
        if (d.support && k >= *d.support) d.support = k + 1;
        if (d.rate && value.valuation_floor() < *d.rate * static_cast<std::int64_t>(k)) d.rate.reset();
    }
    decay_ = d;
    return *decay_;
}

std::size_t Moments::tail_start(std::int64_t threshold, std::int64_t offset) {
    const MomentDecay& d = decay();
    std::optional<std::size_t> best = d.support;
    if (d.rate && *d.rate >= 1) {
        const std::int64_t need = threshold - offset;
        const std::size_t by_rate = need <= 0 ? 0 : static_cast<std::size_t>((need + *d.rate - 1) / *d.rate);
        best = best ? std::min(*best, by_rate) : by_rate;
    }
    if (best) return *best;
    const std::size_t window = ctx_.eval.window;
    std::size_t quiet = 0;
    for (std::size_t m = 0; m < ctx_.eval.eval_max; ++m) {
        if (val_add((*this)(m).valuation_floor(), offset) >= threshold) {
            if (++quiet >= window) return m + 1 - window;
        } else {
            quiet = 0;
        }
    }
    throw NoConvergenceDetected("moments of " + map_.name() + " did not fall below precision within " +
                                std::to_string(ctx_.eval.eval_max) + " terms");
}

std::vector<std::int64_t> Moments::dual_caps(std::size_t length) {
    // Coefficient m of Hinv^k multiplies F_m; it is needed to absolute
    // precision wp - v(F_m). A suffix minimum keeps the caps nonincreasing
    // so the recursion never asks a lower index for fewer digits.
    const std::int64_t wp = working_prec();
    std::vector<std::int64_t> caps(length, kValInf);
    std::int64_t env = kValInf;
    for (std::size_t m = length; m-- > 0;) {
        env = std::min(env, (*inner_)(m).valuation_floor());
        caps[m] = env >= kValInf ? -kValInf : wp - env;
    }
    return caps;
}

void Moments::dual_step(std::size_t length) {
    const std::vector<std::int64_t> caps = dual_caps(length);
    std::vector<LaurentF> next(length, LaurentF::zero(ctx_.field));
    for (std::size_t m = 0; m < length; ++m) {
        if (caps[m] <= -kValInf) continue;
        LaurentF s = LaurentF::zero(ctx_.field);
        for (const auto& [e, h] : hinv_terms_) {
            if (e > m) break;
            const LaurentF& r = dual_r_[m - e];
            if (r.is_exact_zero()) continue;
            s = s + mul_capped(h, r, caps[m]);
        }
        next[m] = std::move(s);
    }
    dual_r_ = std::move(next);
    ++dual_k_;
}

void Moments::dual_rebuild(std::size_t k, std::size_t length) {
    dual_r_.assign(length, LaurentF::zero(ctx_.field));
    dual_r_[0] = LaurentF::one(ctx_.field);
    dual_k_ = 0;
    while (dual_k_ < k) dual_step(length);
}

LaurentF Moments::dual_moment_next() {
    const std::size_t k = dual_k_ + 1;
    const std::int64_t wp = working_prec();
    const std::int64_t offset = hinv_min_val_ >= kValInf ? kValInf : static_cast<std::int64_t>(k) * hinv_min_val_;
    const std::size_t needed = inner_->tail_start(wp, offset);

    std::size_t use = needed;
    bool all_terms = false;
    bool windowed = false;
    if (hinv_exact_) {
        const std::size_t complete_len = k * hinv_degree_ + 1;
        if (complete_len <= use) {
            use = complete_len;
            all_terms = true;
        }
    } else {
        const auto valid = static_cast<std::size_t>(std::min<std::int64_t>(hinv_known_ + static_cast<std::int64_t>(k) - 1,
                                                                           static_cast<std::int64_t>(ctx_.eval.eval_max)));
        if (valid < use) {
            use = valid;
            windowed = true;
        }
    }
    const MomentDecay& d = decay();
    if (d.support && *d.support <= use) all_terms = true;

    if (dual_r_.size() < use || dual_r_.empty()) {
        dual_rebuild(k - 1, std::max<std::size_t>(use, 1));
    }
    dual_step(dual_r_.size());

    if (windowed && !all_terms) {
        const std::size_t w = std::min(ctx_.eval.window, use);
        for (std::size_t m = use - w; m < use; ++m) {
            if (val_add(dual_r_[m].valuation_floor(), (*inner_)(m).valuation_floor()) < wp) {
                throw TruncationMismatch("additive series range too short for dual moment " + std::to_string(k));
            }
        }
    }

    LaurentF sum = LaurentF::zero(ctx_.field);
    for (std::size_t m = k; m < use; ++m) {
        const LaurentF& r = dual_r_[m];
        if (r.is_exact_zero()) continue;
        const LaurentF& f = (*inner_)(m);
        if (f.is_exact_zero()) continue;
        sum = sum + mul_capped(r, f, wp);
    }
    if (all_terms && sum.is_exact()) return sum;
    return lau_truncate(sum, wp);
}

LaurentF moment(const UmbralMap& map, const LaurentF& x, std::size_t k, const UmbralContext& ctx) {
    Moments F(map, x, ctx);
    return F(k);
}

}  // namespace umbral
