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

#include "umbral/carlitz.hpp"

#include <algorithm>

#include "umbral/error.hpp"

namespace umbral {

CarlitzCtx::CarlitzCtx(FieldPtr field, CarlitzParams params)
    : field_(std::move(field)), params_(params) {
    if (params_.window < 1 || params_.k_max < params_.window) {
        throw InvalidArgument("Carlitz parameters need k_max >= window >= 1");
    }
}

CarlitzPtr CarlitzCtx::create(FieldPtr field, CarlitzParams params) {
    return std::make_shared<const CarlitzCtx>(std::move(field), params);
}

const PolyA& CarlitzCtx::dk(std::size_t k) const {
    {
        std::lock_guard<std::mutex> lock(mutex_);
        if (k < dk_cache_.size()) return dk_cache_[k];
    }
    std::vector<PolyA> computed;
    std::size_t start = 0;
    {
        std::lock_guard<std::mutex> lock(mutex_);
        start = dk_cache_.size();
    }
    for (std::size_t j = start; j <= k; ++j) {
        PolyA prod = PolyA::constant(field_, 1);
        for (const auto& m : enumerate_polys(field_, static_cast<std::int64_t>(j), true, params_.enumeration_cap)) {
            prod = prod * m;
        }
        computed.push_back(std::move(prod));
    }
    std::lock_guard<std::mutex> lock(mutex_);
    // Another thread may have appended meanwhile; values agree either way.
    for (std::size_t j = dk_cache_.size(); j <= k; ++j) dk_cache_.push_back(computed[j - start]);
    return dk_cache_[k];
}

LaurentF CarlitzCtx::ek(std::size_t k, const LaurentF& x, std::int64_t cap) const {
    LaurentF prod = LaurentF::one(field_);
    for (const auto& eps : enumerate_polys(field_, static_cast<std::int64_t>(k), false, params_.enumeration_cap)) {
        prod = lau_mul(prod, x + LaurentF::from_poly(eps), cap);
        if (prod.is_exact_zero()) break;
    }
    return prod;
}

PolyA CarlitzCtx::ek(std::size_t k, const PolyA& x) const {
    PolyA prod = PolyA::constant(field_, 1);
    for (const auto& eps : enumerate_polys(field_, static_cast<std::int64_t>(k), false, params_.enumeration_cap)) {
        prod = prod * (x + eps);
        if (prod.is_zero()) break;
    }
    return prod;
}

LaurentF CarlitzCtx::ek_over_dk(std::size_t k, const LaurentF& x, std::int64_t cap) const {
    const PolyA& d = dk(k);
    if (x.is_polynomial()) {
        const PolyA e = ek(k, x.to_poly());
        auto [quo, rem] = poly_divrem(e, d);
        if (rem.is_zero()) return LaurentF::from_poly(quo);
        return lau_div(LaurentF::from_poly(e), LaurentF::from_poly(d), cap);
    }
    const LaurentF dl = LaurentF::from_poly(d);
    // v(D_k) = -deg D_k, so e_k(x) is needed to cap - deg D_k.
    const LaurentF e = ek(k, x, cap < kPrecInf ? cap - d.degree() : kPrecInf);
    return lau_div(e, dl, cap);
}

LaurentF CarlitzCtx::exp(const LaurentF& x, std::int64_t prec) const {
    if (x.is_exact_zero()) return x;
    if (x.valuation_floor() < 1) {
        throw OutsideConvergenceDomain("Carlitz exponential needs v(x) >= 1, got v(x) = " +
                                       std::to_string(x.valuation_floor()));
    }
    if (x.is_zero_to_precision()) return LaurentF::zero_to_precision(field_, std::min(prec, x.prec()));
    return exp_sum(x, prec);
}

LaurentF CarlitzCtx::exp_entire(const LaurentF& x, std::int64_t prec) const {
    if (x.is_exact_zero()) return x;
    if (x.is_zero_to_precision()) return LaurentF::zero_to_precision(field_, std::min(prec, x.prec()));
    return exp_sum(x, prec);
}

LaurentF CarlitzCtx::exp_sum(const LaurentF& x, std::int64_t prec) const {
    const std::uint64_t q = field_->q();
    LaurentF sum = LaurentF::zero(field_);
    std::size_t quiet = 0;
    std::uint64_t qk = 1;
    for (std::size_t k = 0; k <= params_.k_max; ++k) {
        const PolyA& d = dk(k);
        // v(x^(q^k) / D_k) = q^k v(x) + deg D_k.
        const long double term_val = static_cast<long double>(qk) * static_cast<long double>(x.v()) +
                                     static_cast<long double>(d.degree());
        if (term_val >= static_cast<long double>(prec)) {
            if (++quiet >= params_.window) {
                return lau_truncate(sum, std::min(prec, x.prec()));
            }
        } else {
            quiet = 0;
            const LaurentF xq = lau_pow(x, qk, prec_add(prec, d.degree()));
            sum = sum + lau_div(xq, LaurentF::from_poly(d), prec);
        }
        if (qk > (1ULL << 40) / q) break;
        qk *= q;
    }
    throw NoConvergenceDetected("Carlitz exponential did not settle within k_max = " +
                                std::to_string(params_.k_max) + " terms");
}

}  // namespace umbral
