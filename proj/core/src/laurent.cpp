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

#include "umbral/laurent.hpp"

#include <algorithm>
#include <sstream>

#include "umbral/error.hpp"

namespace umbral {

std::int64_t prec_add(std::int64_t a, std::int64_t b) {
    if (a >= kPrecInf || b >= kPrecInf) return kPrecInf;
    const std::int64_t s = a + b;
    if (s >= kPrecInf || s <= -kPrecInf) throw InvalidArgument("precision overflow");
    return s;
}

std::int64_t prec_scale(std::int64_t a, std::uint64_t factor) {
    if (a >= kPrecInf) return kPrecInf;
    std::int64_t r = 0;
    if (factor > static_cast<std::uint64_t>(kPrecInf) ||
        __builtin_mul_overflow(a, static_cast<std::int64_t>(factor), &r) || r >= kPrecInf ||
        r <= -kPrecInf) {
        throw InvalidArgument("precision overflow");
    }
    return r;
}

LaurentF LaurentF::zero_to_precision(FieldPtr field, std::int64_t prec) {
    LaurentF r(std::move(field));
    r.prec_ = prec;
    r.v_ = prec;
    return r;
}

LaurentF LaurentF::constant(FieldPtr field, Fq c) { return monomial(std::move(field), 0, c); }

LaurentF LaurentF::from_int(FieldPtr field, std::int64_t n) {
    const Fq c = field->from_int(n);
    return constant(std::move(field), c);
}

LaurentF LaurentF::monomial(FieldPtr field, std::int64_t e, Fq c) {
    LaurentF r(std::move(field));
    if (c >= r.field_->q()) throw InvalidArgument("field element out of range");
    if (c == 0) return r;
    r.v_ = e;
    r.c_.push_back(c);
    return r;
}

LaurentF LaurentF::from_poly(const PolyA& a) {
    LaurentF r(a.field());
    if (a.is_zero()) return r;
    const auto& pc = a.coeffs();
    r.v_ = -a.degree();
    r.c_.assign(pc.rbegin(), pc.rend());
    r.normalize();
    return r;
}

LaurentF LaurentF::from_coeffs(FieldPtr field, std::int64_t v, std::vector<Fq> coeffs,
                               std::int64_t prec) {
    LaurentF r(std::move(field));
    for (Fq c : coeffs) {
        if (c >= r.field_->q()) throw InvalidArgument("field element out of range");
    }
    r.v_ = v;
    r.c_ = std::move(coeffs);
    r.prec_ = prec;
    r.normalize();
    return r;
}

void LaurentF::normalize() {
    std::size_t lead = 0;
    while (lead < c_.size() && c_[lead] == 0) ++lead;
    if (lead > 0) {
        c_.erase(c_.begin(), c_.begin() + static_cast<std::ptrdiff_t>(lead));
        v_ += static_cast<std::int64_t>(lead);
    }
    if (prec_ < kPrecInf && !c_.empty()) {
        const std::int64_t keep = prec_ - v_;
        if (keep <= 0) {
            c_.clear();
        } else if (static_cast<std::int64_t>(c_.size()) > keep) {
            c_.resize(static_cast<std::size_t>(keep));
        }
    }
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
    if (c_.empty()) v_ = prec_ >= kPrecInf ? 0 : prec_;
}

std::int64_t LaurentF::valuation() const {
    if (!c_.empty()) return v_;
    if (is_exact_zero()) return kValInf;
    throw PrecisionLoss("valuation unknown: zero to precision " + std::to_string(prec_));
}

Fq LaurentF::coeff(std::int64_t e) const {
    if (e >= prec_) {
        throw PrecisionLoss("coefficient of (1/t)^" + std::to_string(e) + " beyond precision " +
                            std::to_string(prec_));
    }
    if (c_.empty() || e < v_) return 0;
    const std::int64_t i = e - v_;
    return i < static_cast<std::int64_t>(c_.size()) ? c_[static_cast<std::size_t>(i)] : Fq{0};
}

bool LaurentF::is_polynomial() const noexcept {
    if (!is_exact()) return false;
    return c_.empty() || v_ + static_cast<std::int64_t>(c_.size()) - 1 <= 0;
}

PolyA LaurentF::to_poly() const {
    if (!is_polynomial()) throw InvalidArgument("value is not an exact polynomial");
    if (c_.empty()) return PolyA::zero(field_);
    const auto deg = static_cast<std::size_t>(-v_);
    std::vector<Fq> pc(deg + 1, 0);
    for (std::size_t i = 0; i < c_.size(); ++i) pc[deg - i] = c_[i];
    return PolyA(field_, std::move(pc));
}

LaurentF LaurentF::operator+(const LaurentF& o) const { return lau_add(*this, o); }

LaurentF LaurentF::operator-(const LaurentF& o) const { return lau_add(*this, -o); }

LaurentF LaurentF::operator*(const LaurentF& o) const { return lau_mul(*this, o); }

LaurentF LaurentF::operator-() const {
    LaurentF r(*this);
    for (auto& c : r.c_) c = field_->neg(c);
    return r;
}

LaurentF LaurentF::scaled(Fq c) const {
    LaurentF r(*this);
    for (auto& x : r.c_) x = field_->mul(x, c);
    r.normalize();
    return r;
}

bool LaurentF::operator==(const LaurentF& o) const noexcept {
    return prec_ == o.prec_ && c_ == o.c_ && (c_.empty() || v_ == o.v_) && *field_ == *o.field_;
}

std::string LaurentF::to_string() const {
    std::ostringstream os;
    bool first = true;
    for (std::size_t i = 0; i < c_.size(); ++i) {
        if (c_[i] == 0) continue;
        const std::int64_t deg = -(v_ + static_cast<std::int64_t>(i));
        std::string cs = fq_to_string(*field_, c_[i]);
        if (cs.find('+') != std::string::npos) cs = "(" + cs + ")";
        if (!first) os << "+";
        first = false;
        if (deg == 0) {
            os << cs;
            continue;
        }
        if (c_[i] != 1) os << cs << "*";
        os << "t";
        if (deg != 1) os << "^" << deg;
    }
    if (!is_exact()) {
        if (!first) os << "+";
        first = false;
        os << "O(t^" << -prec_ << ")";
    }
    if (first) os << "0";
    return os.str();
}

LaurentF lau_add(const LaurentF& x, const LaurentF& y) {
    require_same_field(x.field(), y.field());
    if (x.is_exact_zero()) return y;
    if (y.is_exact_zero()) return x;
    const FieldCtx& f = *x.field();
    const std::int64_t prec = std::min(x.prec(), y.prec());
    if (x.coeffs().empty() && y.coeffs().empty()) return LaurentF::zero_to_precision(x.field(), prec);
    std::int64_t lo = kPrecInf, hi = -kPrecInf;
    for (const LaurentF* z : {&x, &y}) {
        if (z->coeffs().empty()) continue;
        lo = std::min(lo, z->v());
        hi = std::max(hi, z->v() + static_cast<std::int64_t>(z->coeffs().size()));
    }
    hi = std::min(hi, prec);
    if (hi <= lo) return LaurentF::zero_to_precision(x.field(), prec);
    std::vector<Fq> out(static_cast<std::size_t>(hi - lo), 0);
    for (const LaurentF* z : {&x, &y}) {
        const auto& zc = z->coeffs();
        for (std::size_t i = 0; i < zc.size(); ++i) {
            const std::int64_t e = z->v() + static_cast<std::int64_t>(i);
            if (e >= hi) break;
            auto& slot = out[static_cast<std::size_t>(e - lo)];
            slot = f.add(slot, zc[i]);
        }
    }
    return LaurentF::from_coeffs(x.field(), lo, std::move(out), prec);
}

LaurentF lau_mul(const LaurentF& x, const LaurentF& y, std::int64_t cap) {
    require_same_field(x.field(), y.field());
    if (x.is_exact_zero() || y.is_exact_zero()) return LaurentF::zero(x.field());
    std::int64_t prec = std::min(prec_add(x.prec(), y.valuation_floor()),
                                 prec_add(y.prec(), x.valuation_floor()));
    prec = std::min(prec, cap);
    const auto& xc = x.coeffs();
    const auto& yc = y.coeffs();
    if (xc.empty() || yc.empty()) return LaurentF::zero_to_precision(x.field(), prec);
    const std::int64_t v = x.v() + y.v();
    std::int64_t len = static_cast<std::int64_t>(xc.size() + yc.size()) - 1;
    if (prec < kPrecInf) len = std::min(len, prec - v);
    if (len <= 0) return LaurentF::zero_to_precision(x.field(), prec);
    const FieldCtx& f = *x.field();
    std::vector<Fq> out(static_cast<std::size_t>(len), 0);
    const auto n = static_cast<std::size_t>(len);
    for (std::size_t i = 0; i < xc.size() && i < n; ++i) {
        const Fq a = xc[i];
        if (a == 0) continue;
        const std::size_t jmax = std::min(yc.size(), n - i);
        for (std::size_t j = 0; j < jmax; ++j) {
            if (yc[j] == 0) continue;
            out[i + j] = f.add(out[i + j], f.mul(a, yc[j]));
        }
    }
    LaurentF r(x.field());
    r.v_ = v;
    r.c_ = std::move(out);
    r.prec_ = prec;
    r.normalize();
    return r;
}

LaurentF lau_inv(const LaurentF& x, std::int64_t cap) {
    const auto& xc = x.coeffs();
    if (xc.empty()) throw ZeroInverse("inverse of a zero element of F");
    const std::int64_t v = x.v();
    if (x.is_exact() && xc.size() == 1) return LaurentF::monomial(x.field(), -v, x.field()->inv(xc[0]));
    const std::int64_t prec = x.is_exact() ? cap : x.prec() - 2 * v;
    const std::int64_t len = prec - (-v);
    if (len <= 0) return LaurentF::zero_to_precision(x.field(), prec);
    const FieldCtx& f = *x.field();
    const Fq lead_inv = f.inv(xc[0]);
    const auto n = static_cast<std::size_t>(len);
    std::vector<Fq> z(n, 0);
    z[0] = lead_inv;
    for (std::size_t k = 1; k < n; ++k) {
        Fq s = 0;
        const std::size_t imax = std::min(k, xc.size() - 1);
        for (std::size_t i = 1; i <= imax; ++i) {
            if (xc[i] == 0 || z[k - i] == 0) continue;
            s = f.add(s, f.mul(xc[i], z[k - i]));
        }
        z[k] = f.neg(f.mul(lead_inv, s));
    }
    LaurentF r(x.field());
    r.v_ = -v;
    r.c_ = std::move(z);
    r.prec_ = prec;
    r.normalize();
    return r;
}

LaurentF lau_div(const LaurentF& x, const LaurentF& y, std::int64_t cap) {
    if (x.is_exact_zero()) {
        if (y.coeffs().empty()) throw ZeroInverse("division by a zero element of F");
        return x;
    }
    // Inverting y to cap - v(x) keeps the product accurate up to cap.
    const std::int64_t inv_cap = cap >= kPrecInf ? kPrecInf : cap - x.valuation_floor();
    return lau_mul(x, lau_inv(y, inv_cap), cap);
}

LaurentF lau_frobenius(const LaurentF& x, std::uint64_t i) {
    if (i == 0 || x.is_exact_zero()) return x;
    const FieldCtx& f = *x.field();
    std::uint64_t factor = 1;
    for (std::uint64_t s = 0; s < i; ++s) {
        if (factor > (1ULL << 40) / f.p()) throw InvalidArgument("Frobenius power too large");
        factor *= f.p();
    }
    LaurentF r(x.field());
    r.prec_ = prec_scale(x.prec(), factor);
    const auto& xc = x.coeffs();
    if (xc.empty()) {
        r.v_ = r.prec_;
        return r;
    }
    r.v_ = prec_scale(x.v(), factor);
    r.c_.assign((xc.size() - 1) * factor + 1, 0);
    for (std::size_t k = 0; k < xc.size(); ++k) r.c_[k * factor] = f.frobenius(xc[k], i);
    r.normalize();
    return r;
}

LaurentF lau_truncate(const LaurentF& x, std::int64_t prec) {
    if (prec >= x.prec()) return x;
    LaurentF r(x);
    r.prec_ = prec;
    r.normalize();
    return r;
}

LaurentF lau_pow(const LaurentF& x, std::uint64_t n, std::int64_t cap) {
    if (n == 0) return LaurentF::one(x.field());
    if (x.is_exact_zero()) return x;
    const auto& xc = x.coeffs();
    if (!xc.empty() && x.v() > 0 && cap < kPrecInf &&
        static_cast<long double>(x.v()) * static_cast<long double>(n) >= static_cast<long double>(cap)) {
        return LaurentF::zero_to_precision(x.field(), cap);
    }
    const std::uint32_t p = x.field()->p();
    LaurentF result = LaurentF::one(x.field());
    LaurentF power = lau_truncate(x, cap);
    while (true) {
        const std::uint64_t digit = n % p;
        n /= p;
        for (std::uint64_t k = 0; k < digit; ++k) result = lau_mul(result, power, cap);
        if (n == 0) break;
        power = lau_truncate(lau_frobenius(power, 1), cap);
    }
    return result;
}

std::int64_t valuation(const LaurentF& x) { return x.valuation(); }

std::int64_t agreement(const LaurentF& a, const LaurentF& b) { return (a - b).valuation_floor(); }

}  // namespace umbral
