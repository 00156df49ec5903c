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

#ifndef UMBRAL_LAURENT_HPP
#define UMBRAL_LAURENT_HPP

#include <cstdint>
#include <limits>
#include <string>
#include <vector>

#include "umbral/field.hpp"
#include "umbral/poly.hpp"

namespace umbral {

// Stands for an infinite precision (an exactly known value) and for the
// valuation of an exact zero.
inline constexpr std::int64_t kPrecInf = std::numeric_limits<std::int64_t>::max() / 4;
inline constexpr std::int64_t kValInf = kPrecInf;

inline constexpr std::int64_t kDefaultPrec = 64;

// Saturating helpers for precision bookkeeping.
std::int64_t prec_add(std::int64_t a, std::int64_t b);
std::int64_t prec_scale(std::int64_t a, std::uint64_t factor);

// Element of F = F_q((1/t)) known modulo (1/t)^prec. The stored
// coefficient i belongs to (1/t)^(v + i), so t^n has valuation -n.
//
// Three states:
//   exact zero         no coefficients, prec = kPrecInf
//   zero to precision  no coefficients, prec finite
//   nonzero            leading stored coefficient nonzero and v < prec
class LaurentF {
   public:
    explicit LaurentF(FieldPtr field) : field_(std::move(field)) {}

    static LaurentF zero(FieldPtr field) { return LaurentF(std::move(field)); }
    static LaurentF zero_to_precision(FieldPtr field, std::int64_t prec);
    static LaurentF one(FieldPtr field) { return constant(std::move(field), 1); }
    static LaurentF constant(FieldPtr field, Fq c);
    static LaurentF from_int(FieldPtr field, std::int64_t n);
    // c * (1/t)^e, exact.
    static LaurentF monomial(FieldPtr field, std::int64_t e, Fq c = 1);
    static LaurentF from_poly(const PolyA& a);
    // Coefficients for exponents v, v+1, ...; leading zeros are stripped.
    static LaurentF from_coeffs(FieldPtr field, std::int64_t v, std::vector<Fq> coeffs,
                                std::int64_t prec = kPrecInf);

    const FieldPtr& field() const noexcept { return field_; }
    bool is_exact_zero() const noexcept { return c_.empty() && prec_ >= kPrecInf; }
    // True for both zero states.
    bool is_zero_to_precision() const noexcept { return c_.empty(); }
    bool is_exact() const noexcept { return prec_ >= kPrecInf; }
    std::int64_t prec() const noexcept { return prec_; }
    // Exponent of the first stored coefficient; meaningless for zeros.
    std::int64_t v() const noexcept { return v_; }
    const std::vector<Fq>& coeffs() const noexcept { return c_; }

    // kValInf for an exact zero; PrecisionLoss for a zero to precision.
    std::int64_t valuation() const;
    // Largest n with the value known to lie in (1/t)^n O_F.
    std::int64_t valuation_floor() const noexcept {
        if (c_.empty()) return prec_;
        return v_;
    }
    // Coefficient of (1/t)^e. PrecisionLoss when e >= prec.
    Fq coeff(std::int64_t e) const;

    bool in_ring_of_integers() const { return valuation_floor() >= 0; }
    bool is_unit() const { return !c_.empty() && v_ == 0; }

    // Some real polynomial has this expansion: exact and no positive
    // exponents.
    bool is_polynomial() const noexcept;
    PolyA to_poly() const;

    LaurentF operator+(const LaurentF& o) const;
    LaurentF operator-(const LaurentF& o) const;
    LaurentF operator*(const LaurentF& o) const;
    LaurentF operator-() const;
    LaurentF& operator+=(const LaurentF& o) { return *this = *this + o; }
    LaurentF& operator-=(const LaurentF& o) { return *this = *this - o; }
    LaurentF& operator*=(const LaurentF& o) { return *this = *this * o; }
    LaurentF scaled(Fq c) const;

    // Structural equality: same state, digits and precision.
    bool operator==(const LaurentF& o) const noexcept;

    std::string to_string() const;

   private:
    friend LaurentF lau_truncate(const LaurentF& x, std::int64_t prec);
    friend LaurentF lau_mul(const LaurentF& x, const LaurentF& y, std::int64_t cap);
    friend LaurentF lau_inv(const LaurentF& x, std::int64_t cap);
    friend LaurentF lau_frobenius(const LaurentF& x, std::uint64_t i);
    void normalize();

    FieldPtr field_;
    std::int64_t v_ = 0;
    std::vector<Fq> c_;
    std::int64_t prec_ = kPrecInf;
};

LaurentF lau_add(const LaurentF& x, const LaurentF& y);
// Result precision is further limited to cap.
LaurentF lau_mul(const LaurentF& x, const LaurentF& y, std::int64_t cap = kPrecInf);
// For an inexact x the result has precision prec(x) - 2 v(x); an exact x is
// inverted to absolute precision cap.
LaurentF lau_inv(const LaurentF& x, std::int64_t cap = kDefaultPrec);
LaurentF lau_div(const LaurentF& x, const LaurentF& y, std::int64_t cap = kDefaultPrec);
// x^n by digits in base p and Frobenius powers.
LaurentF lau_pow(const LaurentF& x, std::uint64_t n, std::int64_t cap = kPrecInf);
// x^(p^i), exact in characteristic p.
LaurentF lau_frobenius(const LaurentF& x, std::uint64_t i);
LaurentF lau_truncate(const LaurentF& x, std::int64_t prec);
std::int64_t valuation(const LaurentF& x);

// valuation_floor(a - b): the largest n for which a and b are known to agree
// modulo (1/t)^n.
std::int64_t agreement(const LaurentF& a, const LaurentF& b);

}  // namespace umbral

#endif  // UMBRAL_LAURENT_HPP
