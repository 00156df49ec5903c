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

#ifndef UMBRAL_POLY_HPP
#define UMBRAL_POLY_HPP

#include <cstdint>
#include <limits>
#include <string>
#include <utility>
#include <vector>

#include "umbral/field.hpp"

namespace umbral {

// Degree of the zero polynomial; below every integer degree.
inline constexpr std::int64_t kNegInf = std::numeric_limits<std::int64_t>::min();

inline constexpr std::uint64_t kDefaultEnumerationCap = 1000000;

// Element of A = F_q[t]; coefficients lowest degree first, never with a
// trailing zero.
class PolyA {
   public:
    explicit PolyA(FieldPtr field) : field_(std::move(field)) {}
    PolyA(FieldPtr field, std::vector<Fq> coeffs);

    static PolyA zero(FieldPtr field) { return PolyA(std::move(field)); }
    static PolyA constant(FieldPtr field, Fq c);
    // c * t^n.
    static PolyA monomial(FieldPtr field, std::uint64_t n, Fq c = 1);

    const FieldPtr& field() const noexcept { return field_; }
    const std::vector<Fq>& coeffs() const noexcept { return c_; }
    std::int64_t degree() const noexcept {
        return c_.empty() ? kNegInf : static_cast<std::int64_t>(c_.size()) - 1;
    }
    bool is_zero() const noexcept { return c_.empty(); }
    bool is_monic() const noexcept { return !c_.empty() && c_.back() == 1; }
    Fq coeff(std::size_t i) const noexcept { return i < c_.size() ? c_[i] : Fq{0}; }
    Fq leading() const noexcept { return c_.empty() ? Fq{0} : c_.back(); }

    PolyA operator+(const PolyA& o) const;
    PolyA operator-(const PolyA& o) const;
    PolyA operator*(const PolyA& o) const;
    PolyA operator-() const;
    PolyA scaled(Fq c) const;
    bool operator==(const PolyA& o) const noexcept { return c_ == o.c_ && *field_ == *o.field_; }

    std::string to_string() const;

   private:
    void normalize();

    FieldPtr field_;
    std::vector<Fq> c_;
};

// a = quotient * b + remainder with deg(remainder) < deg(b).
std::pair<PolyA, PolyA> poly_divrem(const PolyA& a, const PolyA& b);

// monic_only: the q^max_deg monic polynomials of degree exactly max_deg.
// Otherwise the q^max_deg polynomials of degree < max_deg, zero included.
// Requires q^(max_deg+1) <= cap.
std::vector<PolyA> enumerate_polys(const FieldPtr& field, std::int64_t max_deg, bool monic_only,
                                   std::uint64_t cap = kDefaultEnumerationCap);

// Text form of a field element: an integer for d == 1, a polynomial in u
// otherwise.
std::string fq_to_string(const FieldCtx& field, Fq a);

}  // namespace umbral

#endif  // UMBRAL_POLY_HPP
