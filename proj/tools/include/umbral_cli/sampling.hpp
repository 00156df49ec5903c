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
#ifndef UMBRAL_CLI_SAMPLING_HPP
#define UMBRAL_CLI_SAMPLING_HPP

#include <cstdint>
#include <random>
#include <string_view>

#include "umbral/additive.hpp"
#include "umbral/laurent.hpp"
#include "umbral/poly.hpp"
#include "umbral/series.hpp"

namespace umbral::cli {

// Random inputs for one (seed, claim, trial) triple.
class Sampler {
   public:
    Sampler(FieldPtr field, std::uint64_t seed, std::string_view stream, std::uint64_t trial);

    Fq element();
    Fq nonzero_element();
    // x = sum_{e=v}^{prec-1} c_e t^-e with c_v != 0, known to precision prec.
    LaurentF tail(std::int64_t v, std::int64_t prec);
    // Uniform over deg <= max_deg (never zero when nonzero is set).
    PolyA polynomial(int max_deg, bool nonzero);
    // Exact element sum_{e < length} c_e t^-e, so v >= 0.
    LaurentF integral(std::size_t length);
    // sum_{j < M} a_j T^j with integral exact a_j.
    TruncSeries series(std::size_t M, std::size_t length = 8);
    // Exact additive polynomial with a nonzero constant h_0 and m terms.
    AdditiveSeries generator(std::size_t m, std::size_t length = 4);
    std::mt19937_64& engine() noexcept { return rng_; }

   private:
    FieldPtr field_;
    std::mt19937_64 rng_;
};

}  // namespace umbral::cli

#endif  // UMBRAL_CLI_SAMPLING_HPP
