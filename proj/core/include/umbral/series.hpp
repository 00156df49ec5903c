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

#ifndef UMBRAL_SERIES_HPP
#define UMBRAL_SERIES_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "umbral/laurent.hpp"

namespace umbral {

// C(n, k) mod p by Lucas' theorem.
std::uint32_t binom_mod_p(std::uint64_t n, std::uint64_t k, std::uint32_t p);

// sum_{j < M} a_j T^j + O(T^M) with a_j in F.
class TruncSeries {
   public:
    TruncSeries(FieldPtr field, std::size_t trunc);
    TruncSeries(FieldPtr field, std::vector<LaurentF> coeffs);

    // T^j mod T^M (zero when j >= M).
    static TruncSeries monomial(FieldPtr field, std::size_t trunc, std::size_t j,
                                LaurentF c);
    static TruncSeries monomial(FieldPtr field, std::size_t trunc, std::size_t j);

    const FieldPtr& field() const noexcept { return field_; }
    std::size_t trunc() const noexcept { return a_.size(); }
    const std::vector<LaurentF>& coeffs() const noexcept { return a_; }
    const LaurentF& operator[](std::size_t j) const { return a_.at(j); }
    LaurentF& operator[](std::size_t j) { return a_.at(j); }

    // Drops terms of degree >= m (m <= trunc).
    TruncSeries truncated(std::size_t m) const;
    // Caps every coefficient at absolute precision prec.
    TruncSeries with_precision(std::int64_t prec) const;
    // Minimum coefficient precision.
    std::int64_t precision() const noexcept;

    TruncSeries operator+(const TruncSeries& o) const;
    TruncSeries operator-(const TruncSeries& o) const;
    TruncSeries scaled(const LaurentF& c, std::int64_t cap = kPrecInf) const;

    bool operator==(const TruncSeries& o) const { return a_ == o.a_ && *field_ == *o.field_; }

   private:
    FieldPtr field_;
    std::vector<LaurentF> a_;
};

// Coefficient j of the result is C(j+k, k) a_{j+k}; the truncation drops
// to M - k.
TruncSeries hasse_derivative(const TruncSeries& P, std::size_t k);

// P(T + c) mod T^M, evaluated by Horner's rule in (T + c).
TruncSeries taylor_shift(const TruncSeries& P, const LaurentF& c, std::int64_t cap = kPrecInf);

TruncSeries series_mul(const TruncSeries& P, const TruncSeries& Q, std::int64_t cap = kPrecInf);
TruncSeries series_pow(const TruncSeries& P, std::uint64_t k, std::int64_t cap = kPrecInf);
// P(Q) mod T^min(M_P, M_Q); requires Q(0) = 0.
TruncSeries series_compose(const TruncSeries& P, const TruncSeries& Q,
                           std::int64_t cap = kPrecInf);

// min_j v(a_j), with zeros to precision counted at their precision;
// kValInf for the zero series.
std::int64_t sup_valuation(const TruncSeries& P);

// min_j agreement(P_j, Q_j) over the common truncation.
std::int64_t agreement(const TruncSeries& P, const TruncSeries& Q);

}  // namespace umbral

#endif  // UMBRAL_SERIES_HPP
