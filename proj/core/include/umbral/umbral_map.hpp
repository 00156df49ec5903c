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

#ifndef UMBRAL_UMBRAL_MAP_HPP
#define UMBRAL_UMBRAL_MAP_HPP

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <variant>

#include "umbral/carlitz.hpp"
#include "umbral/iso.hpp"
#include "umbral/laurent.hpp"
#include "umbral/poly.hpp"

namespace umbral {

// Scalar functions Gamma used by geometric maps.
struct IdentityFn {};
struct CarlitzExpFn {};
struct PolyFn {
    PolyA f;
};
using ScalarFn = std::variant<IdentityFn, CarlitzExpFn, PolyFn>;

std::string describe(const ScalarFn& fn);

class UmbralMap {
   public:
    enum class Kind { Additive, Naive, Twisted, Geometric, Dual };

    static UmbralMap additive();
    static UmbralMap naive();
    static UmbralMap twisted();
    static UmbralMap geometric(ScalarFn gamma);
    static UmbralMap dual(UmbralMap inner, AdditiveIso iso);

    Kind kind() const noexcept { return kind_; }
    // Additive, Naive and Geometric maps have F_k = F_1^k by construction.
    bool structurally_geometric() const noexcept {
        return kind_ == Kind::Additive || kind_ == Kind::Naive || kind_ == Kind::Geometric;
    }
    const ScalarFn& gamma() const noexcept { return gamma_; }
    // Dual only.
    const UmbralMap& inner() const;
    const AdditiveIso& iso() const;

    std::string name() const;

   private:
    UmbralMap(Kind kind, ScalarFn gamma) : kind_(kind), gamma_(std::move(gamma)) {}

    Kind kind_;
    ScalarFn gamma_;
    std::shared_ptr<const UmbralMap> inner_;
    std::shared_ptr<const AdditiveIso> iso_;
};

struct EvalConfig {
    // Target precision N: results are compared modulo (1/t)^N.
    std::int64_t prec = kDefaultPrec;
    // Extra digits carried internally; working precision is prec + guard.
    std::int64_t guard = 32;
    std::size_t window = 3;
    std::size_t k_max = 64;
    // Longest coefficient list an evaluation will scan.
    std::size_t eval_max = 4096;

    std::int64_t working_prec() const noexcept { return prec + guard; }
};

struct AdmissibilityParams {
    std::size_t k_max = 64;
    std::size_t window = 3;
    std::int64_t prec = kDefaultPrec;
};

// Everything a moment computation needs.
struct UmbralContext {
    FieldPtr field;
    CarlitzPtr carlitz;
    EvalConfig eval;

    UmbralContext(FieldPtr f, EvalConfig cfg = {}, CarlitzParams cparams = {});
    UmbralContext(CarlitzPtr c, EvalConfig cfg = {});
    UmbralContext with_prec(std::int64_t prec, std::int64_t guard) const;
};

// Gamma(x) to absolute precision prec.
LaurentF eval_scalar(const ScalarFn& fn, const UmbralContext& ctx, const LaurentF& x,
                     std::int64_t prec);

// Multiplication that keeps exact products exact and caps the rest.
LaurentF mul_capped(const LaurentF& a, const LaurentF& b, std::int64_t cap);

}  // namespace umbral

#endif  // UMBRAL_UMBRAL_MAP_HPP
