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

#ifndef UMBRAL_ISO_HPP
#define UMBRAL_ISO_HPP

#include <cstddef>

#include "umbral/additive.hpp"

namespace umbral {

// The additive isomorphism P(T) -> P(H(T)) together with the generator of
// its inverse.
class AdditiveIso {
   public:
    AdditiveIso(AdditiveSeries H, AdditiveSeries Hinv);

    // Hinv is computed to `range` p-power terms.
    static AdditiveIso from_generator(const AdditiveSeries& H, std::size_t range,
                                      std::int64_t cap = kDefaultPrec);
    // H is computed to `range` p-power terms.
    static AdditiveIso from_inverse(const AdditiveSeries& Hinv, std::size_t range,
                                    std::int64_t cap = kDefaultPrec);
    static AdditiveIso identity(FieldPtr field);
    // gamma T; gamma must be a unit of O_F.
    static AdditiveIso linear(const LaurentF& gamma, std::int64_t cap = kDefaultPrec);

    const AdditiveSeries& H() const noexcept { return H_; }
    const AdditiveSeries& Hinv() const noexcept { return Hinv_; }
    const FieldPtr& field() const noexcept { return H_.field(); }
    // The isomorphism with H and Hinv exchanged.
    AdditiveIso inverse() const { return AdditiveIso(Hinv_, H_); }

   private:
    AdditiveSeries H_;
    AdditiveSeries Hinv_;
};

}  // namespace umbral

#endif  // UMBRAL_ISO_HPP
