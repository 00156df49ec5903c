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

#ifndef UMBRAL_CARLITZ_HPP
#define UMBRAL_CARLITZ_HPP

#include <cstdint>
#include <deque>
#include <memory>
#include <mutex>

#include "umbral/laurent.hpp"
#include "umbral/poly.hpp"

namespace umbral {

struct CarlitzParams {
    std::uint64_t enumeration_cap = kDefaultEnumerationCap;
    // Consecutive terms below the target precision needed to stop a sum.
    std::size_t window = 3;
    std::size_t k_max = 64;
};

class CarlitzCtx;
using CarlitzPtr = std::shared_ptr<const CarlitzCtx>;

// Carlitz factorials, the polynomials e_k and the Carlitz exponential.
// D_k are cached append-only behind a lock; returned values are immutable.
class CarlitzCtx {
   public:
    explicit CarlitzCtx(FieldPtr field, CarlitzParams params = {});
    static CarlitzPtr create(FieldPtr field, CarlitzParams params = {});

    const FieldPtr& field() const noexcept { return field_; }
    const CarlitzParams& params() const noexcept { return params_; }

    // Product of the monic polynomials of degree k.
    const PolyA& dk(std::size_t k) const;
    // prod_{deg eps < k} (x + eps); e_0(x) = x.
    LaurentF ek(std::size_t k, const LaurentF& x, std::int64_t cap = kPrecInf) const;
    PolyA ek(std::size_t k, const PolyA& x) const;
    // e_k(x) / D_k. Exact when x is a polynomial and D_k divides e_k(x);
    // otherwise known to absolute precision cap.
    LaurentF ek_over_dk(std::size_t k, const LaurentF& x, std::int64_t cap) const;

    // sum_k x^(q^k) / D_k for v(x) >= 1, to absolute precision prec.
    LaurentF exp(const LaurentF& x, std::int64_t prec) const;
    // The same sum for arbitrary x (the series defines an entire function);
    // needed for e_C(1) and for e_C at elements of A.
    LaurentF exp_entire(const LaurentF& x, std::int64_t prec) const;

   private:
    LaurentF exp_sum(const LaurentF& x, std::int64_t prec) const;

    FieldPtr field_;
    CarlitzParams params_;
    mutable std::mutex mutex_;
    mutable std::deque<PolyA> dk_cache_;
};

}  // namespace umbral

#endif  // UMBRAL_CARLITZ_HPP
