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

#include "umbral/field.hpp"

#include <algorithm>
#include <sstream>

#include "umbral/error.hpp"

namespace umbral {

namespace {

using DigitPoly = std::vector<std::uint32_t>;

void trim(DigitPoly& a) {
    while (!a.empty() && a.back() == 0) a.pop_back();
}

// Remainder of a modulo the monic polynomial m over F_p.
DigitPoly digit_mod(DigitPoly a, const DigitPoly& m, std::uint32_t p) {
    trim(a);
    const std::size_t dm = m.size() - 1;
    while (a.size() > dm && !a.empty()) {
        const std::uint32_t lead = a.back();
        const std::size_t shift = a.size() - 1 - dm;
        for (std::size_t i = 0; i <= dm; ++i) {
            a[shift + i] = (a[shift + i] + (p - lead) * m[i]) % p;
        }
        trim(a);
    }
    return a;
}

bool is_irreducible(const DigitPoly& f, std::uint32_t p) {
    const std::uint32_t d = static_cast<std::uint32_t>(f.size() - 1);
    // Any reducible f has a monic factor of degree <= d/2.
    for (std::uint32_t k = 1; k <= d / 2; ++k) {
        std::uint64_t count = 1;
        for (std::uint32_t i = 0; i < k; ++i) count *= p;
        for (std::uint64_t idx = 0; idx < count; ++idx) {
            DigitPoly g(k + 1, 0);
            std::uint64_t r = idx;
            for (std::uint32_t i = 0; i < k; ++i) {
                g[i] = static_cast<std::uint32_t>(r % p);
                r /= p;
            }
            g[k] = 1;
            if (digit_mod(f, g, p).empty()) return false;
        }
    }
    return true;
}

DigitPoly first_irreducible(std::uint32_t p, std::uint32_t d) {
    std::uint64_t count = 1;
    for (std::uint32_t i = 0; i < d; ++i) count *= p;
    for (std::uint64_t idx = 0; idx < count; ++idx) {
        DigitPoly f(d + 1, 0);
        std::uint64_t r = idx;
        for (std::uint32_t i = 0; i < d; ++i) {
            f[i] = static_cast<std::uint32_t>(r % p);
            r /= p;
        }
        f[d] = 1;
        if (f[0] != 0 && is_irreducible(f, p)) return f;
    }
    throw InvalidField("no irreducible polynomial found");
}

}  // namespace

bool is_prime(std::uint64_t n) noexcept {
    if (n < 2) return false;
    for (std::uint64_t k = 2; k * k <= n; ++k) {
        if (n % k == 0) return false;
    }
    return true;
}

FieldPtr FieldCtx::create(std::uint32_t p, std::uint32_t d, std::vector<std::uint32_t> modulus) {
    if (!is_prime(p)) throw InvalidField("p = " + std::to_string(p) + " is not prime");
    if (d < 1) throw InvalidField("extension degree must be at least 1");
    std::uint64_t q = 1;
    for (std::uint32_t i = 0; i < d; ++i) {
        q *= p;
        if (q > kMaxFieldOrder) throw InvalidField("field order exceeds 65536");
    }
    if (modulus.empty()) {
        modulus = d == 1 ? DigitPoly{0, 1} : first_irreducible(p, d);
    }
    if (modulus.size() != d + 1) {
        throw InvalidField("modulus must have exactly d+1 coefficients");
    }
    for (auto c : modulus) {
        if (c >= p) throw InvalidField("modulus coefficients must lie in [0, p)");
    }
    if (modulus.back() != 1) throw InvalidField("modulus must be monic");
    if (d > 1 && !is_irreducible(modulus, p)) throw InvalidField("modulus is reducible over F_p");
    return std::make_shared<const FieldCtx>(Token{}, p, d, std::move(modulus));
}

FieldCtx::FieldCtx(Token, std::uint32_t p, std::uint32_t d, std::vector<std::uint32_t> modulus)
    : p_(p), d_(d), q_(1), modulus_(std::move(modulus)) {
    for (std::uint32_t i = 0; i < d_; ++i) q_ *= p_;
    if (d_ == 1) modulus_root_ = static_cast<Fq>((p_ - modulus_[0]) % p_);

    neg_table_.resize(q_);
    for (std::uint32_t a = 0; a < q_; ++a) {
        std::uint32_t r = 0, scale = 1, x = a;
        for (std::uint32_t i = 0; i < d_; ++i) {
            const std::uint32_t digit = x % p_;
            x /= p_;
            r += ((p_ - digit) % p_) * scale;
            scale *= p_;
        }
        neg_table_[a] = static_cast<Fq>(r);
    }
    if (q_ <= 256) {
        add_table_.resize(static_cast<std::size_t>(q_) * q_);
        mul_table_.resize(static_cast<std::size_t>(q_) * q_);
        for (std::uint32_t a = 0; a < q_; ++a) {
            for (std::uint32_t b = 0; b < q_; ++b) {
                add_table_[index(a, b)] = add_digits(a, b);
                mul_table_[index(a, b)] = mul_digits(a, b);
            }
        }
    }
    inv_table_.assign(q_, 0);
    for (std::uint32_t a = 1; a < q_; ++a) inv_table_[a] = pow(static_cast<Fq>(a), q_ - 2);
}

Fq FieldCtx::add_digits(Fq a, Fq b) const noexcept {
    std::uint32_t r = 0, scale = 1, x = a, y = b;
    for (std::uint32_t i = 0; i < d_; ++i) {
        r += ((x % p_ + y % p_) % p_) * scale;
        x /= p_;
        y /= p_;
        scale *= p_;
    }
    return static_cast<Fq>(r);
}

Fq FieldCtx::mul_digits(Fq a, Fq b) const noexcept {
    const auto da = digits(a);
    const auto db = digits(b);
    DigitPoly prod(2 * d_, 0);
    for (std::uint32_t i = 0; i < d_; ++i) {
        if (da[i] == 0) continue;
        for (std::uint32_t j = 0; j < d_; ++j) {
            prod[i + j] = (prod[i + j] + da[i] * db[j]) % p_;
        }
    }
    const DigitPoly r = digit_mod(std::move(prod), modulus_, p_);
    std::uint32_t out = 0, scale = 1;
    for (std::size_t i = 0; i < r.size(); ++i) {
        out += r[i] * scale;
        scale *= p_;
    }
    return static_cast<Fq>(out);
}

Fq FieldCtx::inv(Fq a) const {
    if (a == 0) throw ZeroInverse("inverse of zero in F_q");
    return inv_table_[a];
}

Fq FieldCtx::pow(Fq a, std::uint64_t e) const noexcept {
    Fq result = 1;
    Fq base = a;
    while (e > 0) {
        if (e & 1U) result = mul(result, base);
        base = mul(base, base);
        e >>= 1U;
    }
    return result;
}

Fq FieldCtx::frobenius(Fq a, std::uint64_t i) const noexcept {
    // The Frobenius has order d on F_q.
    i %= d_;
    for (std::uint64_t s = 0; s < i; ++s) a = pow(a, p_);
    return a;
}

Fq FieldCtx::from_int(std::int64_t n) const noexcept {
    std::int64_t r = n % static_cast<std::int64_t>(p_);
    if (r < 0) r += p_;
    return static_cast<Fq>(r);
}

Fq FieldCtx::from_digits(std::span<const std::int64_t> coeffs) const {
    // Reduce an arbitrary-length polynomial in u modulo f.
    DigitPoly poly(coeffs.size());
    for (std::size_t i = 0; i < coeffs.size(); ++i) poly[i] = from_int(coeffs[i]);
    const DigitPoly r = digit_mod(std::move(poly), modulus_, p_);
    std::uint32_t out = 0, scale = 1;
    for (std::size_t i = 0; i < r.size(); ++i) {
        out += r[i] * scale;
        scale *= p_;
    }
    return static_cast<Fq>(out);
}

std::vector<std::uint32_t> FieldCtx::digits(Fq a) const {
    std::vector<std::uint32_t> out(d_);
    std::uint32_t x = a;
    for (std::uint32_t i = 0; i < d_; ++i) {
        out[i] = x % p_;
        x /= p_;
    }
    return out;
}

std::string FieldCtx::describe() const {
    std::ostringstream os;
    os << "F_" << q_ << " = F_" << p_ << "[u]/(";
    bool first = true;
    for (std::size_t i = modulus_.size(); i-- > 0;) {
        if (modulus_[i] == 0) continue;
        if (!first) os << " + ";
        first = false;
        if (modulus_[i] != 1 || i == 0) os << modulus_[i];
        if (i >= 1) os << "u";
        if (i >= 2) os << "^" << i;
    }
    os << ")";
    return os.str();
}

void require_same_field(const FieldPtr& a, const FieldPtr& b) {
    if (a == b) return;
    if (!a || !b || !(*a == *b)) throw FieldMismatch("operands belong to different fields");
}

FqElem::FqElem(FieldPtr field, Fq rep) : field_(std::move(field)), rep_(rep) {
    if (!field_) throw InvalidArgument("null field context");
    if (rep_ >= field_->q()) throw InvalidArgument("field element out of range");
}

FqElem FqElem::from_coeffs(FieldPtr field, std::span<const std::int64_t> coeffs) {
    const Fq rep = field->from_digits(coeffs);
    return FqElem(std::move(field), rep);
}

FqElem FqElem::operator+(const FqElem& o) const {
    require_same_field(field_, o.field_);
    return FqElem(field_, field_->add(rep_, o.rep_));
}

FqElem FqElem::operator-(const FqElem& o) const {
    require_same_field(field_, o.field_);
    return FqElem(field_, field_->sub(rep_, o.rep_));
}

FqElem FqElem::operator*(const FqElem& o) const {
    require_same_field(field_, o.field_);
    return FqElem(field_, field_->mul(rep_, o.rep_));
}

FqElem ff_inv(const FqElem& a) { return FqElem(a.field(), a.field()->inv(a.rep())); }

FqElem frobenius(const FqElem& a, std::uint64_t i) {
    return FqElem(a.field(), a.field()->frobenius(a.rep(), i));
}

}  // namespace umbral
