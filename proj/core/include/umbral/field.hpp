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

#ifndef UMBRAL_FIELD_HPP
#define UMBRAL_FIELD_HPP

#include <cstdint>
#include <memory>
#include <span>
#include <string>
#include <vector>

namespace umbral {

// Packed representative of an element of F_q = F_p[u]/(f(u)): the base-p
// digits are the coefficients of 1, u, ..., u^(d-1).
using Fq = std::uint16_t;

inline constexpr std::uint32_t kMaxFieldOrder = 65536;

class FieldCtx;
using FieldPtr = std::shared_ptr<const FieldCtx>;

// The base field F_q. Immutable after construction and safe to share
// between threads.
class FieldCtx {
    struct Token {};

   public:
    // `modulus` lists the d+1 coefficients of a monic irreducible f(u),
    // lowest degree first. It may be omitted when d == 1.
    static FieldPtr create(std::uint32_t p, std::uint32_t d = 1,
                           std::vector<std::uint32_t> modulus = {});

    FieldCtx(Token, std::uint32_t p, std::uint32_t d, std::vector<std::uint32_t> modulus);

    std::uint32_t p() const noexcept { return p_; }
    std::uint32_t d() const noexcept { return d_; }
    std::uint32_t q() const noexcept { return q_; }
    const std::vector<std::uint32_t>& modulus() const noexcept { return modulus_; }

    Fq add(Fq a, Fq b) const noexcept {
        if (p_ == 2) return static_cast<Fq>(a ^ b);
        if (!add_table_.empty()) return add_table_[index(a, b)];
        return add_digits(a, b);
    }
    Fq mul(Fq a, Fq b) const noexcept {
        if (!mul_table_.empty()) return mul_table_[index(a, b)];
        return mul_digits(a, b);
    }
    Fq neg(Fq a) const noexcept { return neg_table_[a]; }
    Fq sub(Fq a, Fq b) const noexcept { return add(a, neg(b)); }
    // Throws ZeroInverse for a == 0.
    Fq inv(Fq a) const;
    Fq pow(Fq a, std::uint64_t e) const noexcept;
    // a^(p^i).
    Fq frobenius(Fq a, std::uint64_t i) const noexcept;

    Fq from_int(std::int64_t n) const noexcept;
    Fq from_digits(std::span<const std::int64_t> digits) const;
    std::vector<std::uint32_t> digits(Fq a) const;
    // Class of u; equals from_int(0) only when d == 1 and f(u) = u.
    Fq u() const noexcept { return d_ > 1 ? static_cast<Fq>(p_) : modulus_root_; }

    bool operator==(const FieldCtx& other) const noexcept {
        return p_ == other.p_ && d_ == other.d_ && modulus_ == other.modulus_;
    }

    std::string describe() const;

   private:
    std::size_t index(Fq a, Fq b) const noexcept { return static_cast<std::size_t>(a) * q_ + b; }
    Fq add_digits(Fq a, Fq b) const noexcept;
    Fq mul_digits(Fq a, Fq b) const noexcept;

    std::uint32_t p_;
    std::uint32_t d_;
    std::uint32_t q_;
    std::vector<std::uint32_t> modulus_;
    Fq modulus_root_ = 0;
    std::vector<Fq> add_table_;
    std::vector<Fq> mul_table_;
    std::vector<Fq> neg_table_;
    std::vector<Fq> inv_table_;
};

// Throws FieldMismatch unless both contexts describe the same field.
void require_same_field(const FieldPtr& a, const FieldPtr& b);

bool is_prime(std::uint64_t n) noexcept;

// An element of F_q bound to its field.
class FqElem {
   public:
    FqElem(FieldPtr field, Fq rep);
    static FqElem from_coeffs(FieldPtr field, std::span<const std::int64_t> coeffs);
    static FqElem zero(FieldPtr field) { return FqElem(std::move(field), 0); }
    static FqElem one(FieldPtr field) { return FqElem(std::move(field), 1); }

    const FieldPtr& field() const noexcept { return field_; }
    Fq rep() const noexcept { return rep_; }
    // Exactly d coefficients in [0, p).
    std::vector<std::uint32_t> coeffs() const { return field_->digits(rep_); }
    bool is_zero() const noexcept { return rep_ == 0; }

    FqElem operator+(const FqElem& o) const;
    FqElem operator-(const FqElem& o) const;
    FqElem operator*(const FqElem& o) const;
    FqElem operator-() const { return FqElem(field_, field_->neg(rep_)); }
    bool operator==(const FqElem& o) const noexcept { return rep_ == o.rep_ && *field_ == *o.field_; }

   private:
    FieldPtr field_;
    Fq rep_;
};

FqElem ff_inv(const FqElem& a);
FqElem frobenius(const FqElem& a, std::uint64_t i);

}  // namespace umbral

#endif  // UMBRAL_FIELD_HPP
