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

#include "umbral/umbral_map.hpp"

#include "umbral/error.hpp"

namespace umbral {

std::string describe(const ScalarFn& fn) {
    if (std::holds_alternative<IdentityFn>(fn)) return "identity";
    if (std::holds_alternative<CarlitzExpFn>(fn)) return "carlitz-exp";
    return "poly(" + std::get<PolyFn>(fn).f.to_string() + ")";
}

UmbralMap UmbralMap::additive() { return UmbralMap(Kind::Additive, IdentityFn{}); }

UmbralMap UmbralMap::naive() { return UmbralMap(Kind::Naive, CarlitzExpFn{}); }

UmbralMap UmbralMap::twisted() { return UmbralMap(Kind::Twisted, IdentityFn{}); }

UmbralMap UmbralMap::geometric(ScalarFn gamma) { return UmbralMap(Kind::Geometric, std::move(gamma)); }

UmbralMap UmbralMap::dual(UmbralMap inner, AdditiveIso iso) {
    UmbralMap m(Kind::Dual, IdentityFn{});
    m.inner_ = std::make_shared<const UmbralMap>(std::move(inner));
    m.iso_ = std::make_shared<const AdditiveIso>(std::move(iso));
    return m;
}

const UmbralMap& UmbralMap::inner() const {
    if (!inner_) throw InvalidArgument("not a dual umbral map");
    return *inner_;
}

const AdditiveIso& UmbralMap::iso() const {
    if (!iso_) throw InvalidArgument("not a dual umbral map");
    return *iso_;
}

std::string UmbralMap::name() const {
    switch (kind_) {
        case Kind::Additive:
            return "additive";
        case Kind::Naive:
            return "naive";
        case Kind::Twisted:
            return "twisted";
        case Kind::Geometric:
            return "geometric:" + describe(gamma_);
        case Kind::Dual:
            return "dual(" + inner_->name() + ")";
    }
    return "unknown";
}

UmbralContext::UmbralContext(FieldPtr f, EvalConfig cfg, CarlitzParams cparams)
    : field(f), carlitz(CarlitzCtx::create(f, cparams)), eval(cfg) {}

UmbralContext::UmbralContext(CarlitzPtr c, EvalConfig cfg) : field(c->field()), carlitz(std::move(c)), eval(cfg) {}

UmbralContext UmbralContext::with_prec(std::int64_t prec, std::int64_t guard) const {
    UmbralContext out(*this);
    out.eval.prec = prec;
    out.eval.guard = guard;
    return out;
}

LaurentF mul_capped(const LaurentF& a, const LaurentF& b, std::int64_t cap) {
    if (a.is_exact() && b.is_exact()) return lau_mul(a, b);
    return lau_mul(a, b, cap);
}

LaurentF eval_scalar(const ScalarFn& fn, const UmbralContext& ctx, const LaurentF& x, std::int64_t prec) {
    if (std::holds_alternative<IdentityFn>(fn)) return x;
    if (std::holds_alternative<CarlitzExpFn>(fn)) return ctx.carlitz->exp(x, prec);
    const PolyA& f = std::get<PolyFn>(fn).f;
    require_same_field(f.field(), x.field());
    LaurentF acc = LaurentF::zero(x.field());
    const auto& c = f.coeffs();
    for (std::size_t i = c.size(); i-- > 0;) {
        acc = mul_capped(acc, x, prec) + LaurentF::constant(x.field(), c[i]);
    }
    return acc;
}

}  // namespace umbral
