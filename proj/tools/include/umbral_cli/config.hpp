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
#ifndef UMBRAL_CLI_CONFIG_HPP
#define UMBRAL_CLI_CONFIG_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "umbral/json_io.hpp"
#include "umbral/umbral_map.hpp"

namespace umbral::cli {

struct Config {
    std::uint32_t p = 2;
    std::uint32_t d = 1;
    // Lowest degree first; empty picks the first irreducible polynomial.
    std::vector<std::uint32_t> modulus;
    std::int64_t prec = 64;
    std::size_t trunc = 16;
    std::size_t basis = 12;
    // Unset means the per-claim default.
    std::optional<std::size_t> trials;
    std::uint64_t seed = 1;
    std::uint64_t cap = kDefaultEnumerationCap;
    std::size_t window = 3;
    std::size_t k_max = 64;
    std::int64_t guard = 32;
    // Set when --prec was given explicitly; some claims raise the default.
    bool prec_explicit = false;

    // InvalidArgument unless N >= 8, M >= 4, J <= M and the rest are sane.
    void validate() const;
    FieldPtr make_field() const;
    Json to_json() const;
};

// Reads UMBRAL_FLOW_CAP into cfg.cap when set. InvalidArgument when the
// value is not a positive integer.
void apply_environment(Config& cfg);

// Context at target precision prec with the given guard digits.
UmbralContext make_context(const Config& cfg, const FieldPtr& field, std::int64_t prec, std::int64_t guard);

}  // namespace umbral::cli

#endif  // UMBRAL_CLI_CONFIG_HPP
