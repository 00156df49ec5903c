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

#include "umbral/poly.hpp"

#include <sstream>

#include "umbral/error.hpp"

namespace umbral {

PolyA::PolyA(FieldPtr field, std::vector<Fq> coeffs) : field_(std::move(field)), c_(std::move(coeffs)) {
    if (!field_) throw InvalidArgument("null field context");
    for (Fq c : c_) {
        if (c >= field_->q()) throw InvalidArgument("polynomial coefficient out of range");
    }
    normalize();
}

PolyA PolyA::constant(FieldPtr field, Fq c) { return PolyA(std::move(field), std::vector<Fq>{c}); }

PolyA PolyA::monomial(FieldPtr field, std::uint64_t n, Fq c) {
    std::vector<Fq> coeffs(n + 1, 0);
    coeffs[n] = c;
    return PolyA(std::move(field), std::move(coeffs));
}

void PolyA::normalize() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

PolyA PolyA::operator+(const PolyA& o) const {
    require_same_field(field_, o.field_);
    PolyA r(field_);
    r.c_.resize(std::max(c_.size(), o.c_.size()), 0);
    for (std::size_t i = 0; i < r.c_.size(); ++i) r.c_[i] = field_->add(coeff(i), o.coeff(i));
    r.normalize();
    return r;
}

PolyA PolyA::operator-(const PolyA& o) const { return *this + (-o); }

PolyA PolyA::operator-() const {
    PolyA r(*this);
    for (auto& c : r.c_) c = field_->neg(c);
    return r;
}

PolyA PolyA::operator*(const PolyA& o) const {
    require_same_field(field_, o.field_);
    PolyA r(field_);
    if (is_zero() || o.is_zero()) return r;
    r.c_.assign(c_.size() + o.c_.size() - 1, 0);
    const FieldCtx& f = *field_;
    for (std::size_t i = 0; i < c_.size(); ++i) {
        if (c_[i] == 0) continue;
        for (std::size_t j = 0; j < o.c_.size(); ++j) {
            r.c_[i + j] = f.add(r.c_[i + j], f.mul(c_[i], o.c_[j]));
        }
    }
    r.normalize();
    return r;
}

PolyA PolyA::scaled(Fq c) const {
    PolyA r(*this);
    for (auto& x : r.c_) x = field_->mul(x, c);
    r.normalize();
    return r;
}

std::string fq_to_string(const FieldCtx& field, Fq a) {
    if (field.d() == 1) return std::to_string(a);
    const auto dg = field.digits(a);
    std::ostringstream os;
    bool first = true;
    for (std::size_t i = dg.size(); i-- > 0;) {
        if (dg[i] == 0) continue;
        if (!first) os << "+";
        first = false;
        if (dg[i] != 1 || i == 0) os << dg[i];
        if (i >= 1) os << "u";
        if (i >= 2) os << "^" << i;
    }
    if (first) os << "0";
    return os.str();
}

std::string PolyA::to_string() const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (std::size_t i = c_.size(); i-- > 0;) {
        if (c_[i] == 0) continue;
        if (!first) os << "+";
        first = false;
        std::string cs = fq_to_string(*field_, c_[i]);
        const bool compound = cs.find('+') != std::string::npos;
        if (i == 0) {
            os << (compound ? "(" + cs + ")" : cs);
            continue;
        }
        if (c_[i] != 1) os << (compound ? "(" + cs + ")" : cs) << "*";
        os << "t";
        if (i >= 2) os << "^" << i;
    }
    return os.str();
}

std::pair<PolyA, PolyA> poly_divrem(const PolyA& a, const PolyA& b) {
    require_same_field(a.field(), b.field());
    if (b.is_zero()) throw DivisionByZero("polynomial division by zero");
    const FieldCtx& f = *a.field();
    if (a.degree() < b.degree()) return {PolyA::zero(a.field()), a};
    std::vector<Fq> rem = a.coeffs();
    const auto& bc = b.coeffs();
    const std::size_t db = bc.size() - 1;
    const Fq lead_inv = f.inv(bc.back());
    std::vector<Fq> quo(rem.size() - db, 0);
    for (std::size_t i = rem.size(); i-- > db;) {
        const Fq c = f.mul(rem[i], lead_inv);
        if (c == 0) continue;
        const std::size_t shift = i - db;
        quo[shift] = c;
        for (std::size_t j = 0; j <= db; ++j) {
            rem[shift + j] = f.sub(rem[shift + j], f.mul(c, bc[j]));
        }
    }
    rem.resize(db);
    return {PolyA(a.field(), std::move(quo)), PolyA(a.field(), std::move(rem))};
}

std::vector<PolyA> enumerate_polys(const FieldPtr& field, std::int64_t max_deg, bool monic_only,
                                   std::uint64_t cap) {
    if (max_deg < 0) {
        if (monic_only) return {};
        return {PolyA::zero(field)};
    }
    const std::uint64_t q = field->q();
    std::uint64_t count = 1;
    for (std::int64_t i = 0; i <= max_deg; ++i) {
        if (count > cap / q) {
            throw EnumerationCapExceeded("enumerating degree " + std::to_string(max_deg) +
                                         " polynomials exceeds the cap of " + std::to_string(cap));
        }
        count *= q;
    }
    count /= q;  // q^max_deg results
    std::vector<PolyA> out;
    out.reserve(count);
    const auto n = static_cast<std::size_t>(max_deg);
    for (std::uint64_t idx = 0; idx < count; ++idx) {
        std::vector<Fq> c(monic_only ? n + 1 : n, 0);
        std::uint64_t r = idx;
        for (std::size_t i = 0; i < n; ++i) {
            c[i] = static_cast<Fq>(r % q);
            r /= q;
        }
        if (monic_only) c[n] = 1;
        out.emplace_back(field, std::move(c));
    }
    return out;
}

}  // namespace umbral
