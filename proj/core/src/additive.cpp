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

#include "umbral/additive.hpp"

#include <algorithm>
#include <limits>

#include "umbral/error.hpp"

namespace umbral {

namespace {

constexpr std::size_t kUnbounded = std::numeric_limits<std::size_t>::max();

}  // namespace

AdditiveSeries::AdditiveSeries(FieldPtr field, std::vector<LaurentF> pcoeffs, bool exact)
    : field_(std::move(field)), h_(std::move(pcoeffs)), exact_(exact) {
    for (const auto& c : h_) require_same_field(field_, c.field());
    if (exact_) {
        while (!h_.empty() && h_.back().is_exact_zero()) h_.pop_back();
    }
}

AdditiveSeries AdditiveSeries::identity(FieldPtr field) {
    LaurentF one = LaurentF::one(field);
    return AdditiveSeries(std::move(field), {std::move(one)}, true);
}

AdditiveSeries AdditiveSeries::linear(FieldPtr field, LaurentF c) {
    return AdditiveSeries(std::move(field), {std::move(c)}, true);
}

std::size_t AdditiveSeries::range() const noexcept { return exact_ ? kUnbounded : h_.size(); }

std::int64_t AdditiveSeries::exponent_bound() const {
    if (exact_) return kPrecInf;
    std::int64_t b = 1;
    for (std::size_t i = 0; i < h_.size(); ++i) {
        if (b > kPrecInf / field_->p()) return kPrecInf;
        b *= field_->p();
    }
    return b;
}

AdditiveSeries AdditiveSeries::truncated(std::size_t m) const {
    if (m >= h_.size()) return *this;
    return AdditiveSeries(field_, std::vector<LaurentF>(h_.begin(), h_.begin() + static_cast<std::ptrdiff_t>(m)),
                          false);
}

TruncSeries AdditiveSeries::to_series(std::size_t M) const {
    if (static_cast<std::int64_t>(M) > exponent_bound()) {
        throw TruncationMismatch("additive series known below T^" + std::to_string(exponent_bound()) +
                                 " only, requested T^" + std::to_string(M));
    }
    TruncSeries s(field_, M);
    std::uint64_t e = 1;
    for (std::size_t i = 0; i < h_.size() && e < M; ++i) {
        s[e] = h_[i];
        e *= field_->p();
    }
    return s;
}

AdditiveSeries additive_compose(const AdditiveSeries& H, const AdditiveSeries& G, std::int64_t cap) {
    require_same_field(H.field(), G.field());
    const bool exact = H.exact() && G.exact();
    const std::size_t len = exact ? (H.size() == 0 || G.size() == 0 ? 0 : H.size() + G.size() - 1)
                                  : std::min(H.range(), G.range());
    std::vector<LaurentF> c(len, LaurentF::zero(H.field()));
    for (std::size_t i = 0; i < H.size() && i < len; ++i) {
        if (H[i].is_exact_zero()) continue;
        for (std::size_t j = 0; j < G.size() && i + j < len; ++j) {
            if (G[j].is_exact_zero()) continue;
            c[i + j] = c[i + j] + lau_mul(H[i], lau_frobenius(lau_truncate(G[j], cap), i), cap);
        }
    }
    return AdditiveSeries(H.field(), std::move(c), exact);
}

AdditiveSeries additive_inverse(const AdditiveSeries& H, std::optional<std::size_t> range,
                                std::int64_t cap) {
    const GeneratorCheck g = is_generator(H);
    if (!g.ok) throw NotAGenerator(g.reason);
    std::size_t m = range.value_or(H.size());
    if (!H.exact()) m = std::min(m, H.size());
    const LaurentF h0_inv = lau_inv(H[0], cap);
    std::vector<LaurentF> c;
    c.reserve(m);
    if (m > 0) c.push_back(h0_inv);
    for (std::size_t k = 1; k < m; ++k) {
        LaurentF s = LaurentF::zero(H.field());
        for (std::size_t i = 1; i <= k && i < H.size(); ++i) {
            if (H[i].is_exact_zero()) continue;
            s = s + lau_mul(H[i], lau_frobenius(lau_truncate(c[k - i], cap), i), cap);
        }
        c.push_back(-lau_mul(h0_inv, s, cap));
    }
    // A linear generator has a linear inverse.
    const bool exact = H.exact() && H.size() == 1;
    return AdditiveSeries(H.field(), std::move(c), exact);
}

GeneratorCheck is_generator(const AdditiveSeries& H) {
    GeneratorCheck out;
    if (H.size() == 0 || H[0].is_zero_to_precision()) {
        out.reason = "linear coefficient is zero";
        out.linear_valuation = H.size() == 0 ? kValInf : H[0].valuation_floor();
        return out;
    }
    out.linear_valuation = H[0].v();
    out.min_valuation = kValInf;
    for (const auto& h : H.pcoeffs()) out.min_valuation = std::min(out.min_valuation, h.valuation_floor());
    if (out.linear_valuation != 0) {
        out.reason = "linear coefficient has valuation " + std::to_string(out.linear_valuation) +
                     ", not a unit of O_F";
        return out;
    }
    out.ok = true;
    return out;
}

std::int64_t agreement(const AdditiveSeries& H, const AdditiveSeries& G) {
    std::size_t m = std::min(H.range(), G.range());
    if (m == kUnbounded) m = std::max(H.size(), G.size());
    std::int64_t v = kValInf;
    for (std::size_t i = 0; i < m; ++i) {
        const LaurentF a = i < H.size() ? H[i] : LaurentF::zero(H.field());
        const LaurentF b = i < G.size() ? G[i] : LaurentF::zero(G.field());
        v = std::min(v, agreement(a, b));
    }
    return v;
}

}  // namespace umbral
