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

#include "umbral/series.hpp"

#include <algorithm>

#include "umbral/error.hpp"

namespace umbral {

namespace {

std::uint32_t small_binom(std::uint32_t n, std::uint32_t k, std::uint32_t p) {
    if (k > n) return 0;
    k = std::min(k, n - k);
    std::uint64_t num = 1, den = 1;
    for (std::uint32_t i = 0; i < k; ++i) {
        num = num * ((n - i) % p) % p;
        den = den * ((i + 1) % p) % p;
    }
    // den is a unit since n < p.
    std::uint64_t inv = 1, base = den, e = p - 2;
    while (e > 0) {
        if (e & 1U) inv = inv * base % p;
        base = base * base % p;
        e >>= 1U;
    }
    return static_cast<std::uint32_t>(num * inv % p);
}

}  // namespace

std::uint32_t binom_mod_p(std::uint64_t n, std::uint64_t k, std::uint32_t p) {
    if (k > n) return 0;
    std::uint64_t r = 1;
    while (k > 0 || n > 0) {
        const auto nd = static_cast<std::uint32_t>(n % p);
        const auto kd = static_cast<std::uint32_t>(k % p);
        if (kd > nd) return 0;
        if (kd != 0 && kd != nd) r = r * small_binom(nd, kd, p) % p;
        n /= p;
        k /= p;
    }
    return static_cast<std::uint32_t>(r);
}

TruncSeries::TruncSeries(FieldPtr field, std::size_t trunc)
    : field_(std::move(field)), a_(trunc, LaurentF::zero(field_)) {}

TruncSeries::TruncSeries(FieldPtr field, std::vector<LaurentF> coeffs)
    : field_(std::move(field)), a_(std::move(coeffs)) {
    for (const auto& c : a_) require_same_field(field_, c.field());
}

TruncSeries TruncSeries::monomial(FieldPtr field, std::size_t trunc, std::size_t j, LaurentF c) {
    TruncSeries s(std::move(field), trunc);
    if (j < trunc) s.a_[j] = std::move(c);
    return s;
}

TruncSeries TruncSeries::monomial(FieldPtr field, std::size_t trunc, std::size_t j) {
    LaurentF one = LaurentF::one(field);
    return monomial(std::move(field), trunc, j, std::move(one));
}

TruncSeries TruncSeries::truncated(std::size_t m) const {
    if (m >= a_.size()) return *this;
    return TruncSeries(field_, std::vector<LaurentF>(a_.begin(), a_.begin() + static_cast<std::ptrdiff_t>(m)));
}

TruncSeries TruncSeries::with_precision(std::int64_t prec) const {
    TruncSeries r(*this);
    for (auto& c : r.a_) c = lau_truncate(c, prec);
    return r;
}

std::int64_t TruncSeries::precision() const noexcept {
    std::int64_t p = kPrecInf;
    for (const auto& c : a_) p = std::min(p, c.prec());
    return p;
}

TruncSeries TruncSeries::operator+(const TruncSeries& o) const {
    require_same_field(field_, o.field_);
    const std::size_t m = std::min(trunc(), o.trunc());
    TruncSeries r(field_, m);
    for (std::size_t j = 0; j < m; ++j) r.a_[j] = a_[j] + o.a_[j];
    return r;
}

TruncSeries TruncSeries::operator-(const TruncSeries& o) const {
    require_same_field(field_, o.field_);
    const std::size_t m = std::min(trunc(), o.trunc());
    TruncSeries r(field_, m);
    for (std::size_t j = 0; j < m; ++j) r.a_[j] = a_[j] - o.a_[j];
    return r;
}

TruncSeries TruncSeries::scaled(const LaurentF& c, std::int64_t cap) const {
    TruncSeries r(*this);
    for (auto& x : r.a_) x = lau_mul(x, c, cap);
    return r;
}

TruncSeries hasse_derivative(const TruncSeries& P, std::size_t k) {
    const std::size_t M = P.trunc();
    const std::size_t m = k >= M ? 0 : M - k;
    const FieldCtx& f = *P.field();
    TruncSeries r(P.field(), m);
    for (std::size_t j = 0; j < m; ++j) {
        const std::uint32_t b = binom_mod_p(j + k, k, f.p());
        if (b == 0) continue;
        r[j] = P[j + k].scaled(f.from_int(b));
    }
    return r;
}

TruncSeries taylor_shift(const TruncSeries& P, const LaurentF& c, std::int64_t cap) {
    const std::size_t M = P.trunc();
    TruncSeries acc(P.field(), M);
    // acc <- acc * (T + c) + a_j, from the top coefficient down.
    for (std::size_t j = M; j-- > 0;) {
        TruncSeries next(P.field(), M);
        for (std::size_t i = 0; i < M; ++i) {
            LaurentF term = lau_mul(acc[i], c, cap);
            if (i > 0) term = term + acc[i - 1];
            next[i] = std::move(term);
        }
        next[0] = next[0] + P[j];
        acc = std::move(next);
    }
    return acc;
}

TruncSeries series_mul(const TruncSeries& P, const TruncSeries& Q, std::int64_t cap) {
    require_same_field(P.field(), Q.field());
    const std::size_t M = std::min(P.trunc(), Q.trunc());
    std::vector<LaurentF> out(M, LaurentF::zero(P.field()));
    for (std::size_t i = 0; i < M; ++i) {
        if (P[i].is_exact_zero()) continue;
        for (std::size_t j = 0; i + j < M; ++j) {
            if (Q[j].is_exact_zero()) continue;
            out[i + j] = out[i + j] + lau_mul(P[i], Q[j], cap);
        }
    }
    return TruncSeries(P.field(), std::move(out));
}

TruncSeries series_pow(const TruncSeries& P, std::uint64_t k, std::int64_t cap) {
    TruncSeries result = TruncSeries::monomial(P.field(), P.trunc(), 0);
    TruncSeries base = P;
    while (k > 0) {
        if (k & 1U) result = series_mul(result, base, cap);
        k >>= 1U;
        if (k > 0) base = series_mul(base, base, cap);
    }
    return result;
}

TruncSeries series_compose(const TruncSeries& P, const TruncSeries& Q, std::int64_t cap) {
    require_same_field(P.field(), Q.field());
    const std::size_t M = std::min(P.trunc(), Q.trunc());
    if (M == 0) return TruncSeries(P.field(), 0);
    if (!Q[0].is_zero_to_precision()) {
        throw CompositionConstantTerm("inner series has a nonzero constant term");
    }
    const TruncSeries Qm = Q.truncated(M);
    TruncSeries result = TruncSeries::monomial(P.field(), M, 0, P[0]);
    TruncSeries power = TruncSeries::monomial(P.field(), M, 0);
    for (std::size_t j = 1; j < M; ++j) {
        power = series_mul(power, Qm, cap);
        if (P[j].is_exact_zero()) continue;
        result = result + power.scaled(P[j], cap);
    }
    return result;
}

std::int64_t sup_valuation(const TruncSeries& P) {
    std::int64_t v = kValInf;
    for (const auto& c : P.coeffs()) v = std::min(v, c.valuation_floor());
    return v;
}

std::int64_t agreement(const TruncSeries& P, const TruncSeries& Q) {
    const std::size_t m = std::min(P.trunc(), Q.trunc());
    std::int64_t v = kValInf;
    for (std::size_t j = 0; j < m; ++j) v = std::min(v, agreement(P[j], Q[j]));
    return v;
}

}  // namespace umbral
