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

#ifndef UMBRAL_ADDITIVE_HPP
#define UMBRAL_ADDITIVE_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "umbral/series.hpp"

namespace umbral {

// H(T) = sum_{i < m} h_i T^(p^i). When exact is false the series continues
// with unknown terms from T^(p^m) on; when true H is an additive polynomial.
class AdditiveSeries {
   public:
    AdditiveSeries(FieldPtr field, std::vector<LaurentF> pcoeffs, bool exact = false);

    // T, exact.
    static AdditiveSeries identity(FieldPtr field);
    // c T; the form is exact even when c is only known to some precision.
    static AdditiveSeries linear(FieldPtr field, LaurentF c);

    const FieldPtr& field() const noexcept { return field_; }
    const std::vector<LaurentF>& pcoeffs() const noexcept { return h_; }
    const LaurentF& operator[](std::size_t i) const { return h_.at(i); }
    std::size_t size() const noexcept { return h_.size(); }
    bool exact() const noexcept { return exact_; }
    // Number of p-power terms that are known; unbounded for exact series.
    std::size_t range() const noexcept;
    // p^range, or kPrecInf for exact series.
    std::int64_t exponent_bound() const;

    // Keeps the first m p-coefficients; the result is never exact unless
    // nothing was dropped.
    AdditiveSeries truncated(std::size_t m) const;
    // Expansion as an ordinary series mod T^M. TruncationMismatch if T^M
    // reaches the unknown terms.
    TruncSeries to_series(std::size_t M) const;

   private:
    FieldPtr field_;
    std::vector<LaurentF> h_;
    bool exact_;
};

// Skew product: c_k = sum_{i+j=k} h_i g_j^(p^i).
AdditiveSeries additive_compose(const AdditiveSeries& H, const AdditiveSeries& G,
                                std::int64_t cap = kPrecInf);

// Composition inverse by the triangular solve. `range` defaults to the
// stored length of H.
AdditiveSeries additive_inverse(const AdditiveSeries& H, std::optional<std::size_t> range = {},
                                std::int64_t cap = kDefaultPrec);

struct GeneratorCheck {
    bool ok = false;
    std::int64_t linear_valuation = 0;
    std::int64_t min_valuation = 0;
    std::string reason;
};

// v(h_0) = 0 and every stored coefficient has a finite valuation bound.
GeneratorCheck is_generator(const AdditiveSeries& H);

// min over p-coefficients of agreement, up to the common range.
std::int64_t agreement(const AdditiveSeries& H, const AdditiveSeries& G);

}  // namespace umbral

#endif  // UMBRAL_ADDITIVE_HPP
