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
#include "umbral_cli/sampling.hpp"

#include <vector>

namespace umbral::cli {
namespace {

std::uint64_t fnv1a(std::string_view s) {
    std::uint64_t h = 0xcbf29ce484222325ULL;
    for (unsigned char c : s) {
        h ^= c;
        h *= 0x100000001b3ULL;
    }
    return h;
}

std::mt19937_64 seeded(std::uint64_t seed, std::string_view stream, std::uint64_t trial) {
    const std::uint64_t h = fnv1a(stream);
    std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                      static_cast<std::uint32_t>(h), static_cast<std::uint32_t>(h >> 32),
                      static_cast<std::uint32_t>(trial), static_cast<std::uint32_t>(trial >> 32)};
    return std::mt19937_64(seq);
}

}  // namespace

Sampler::Sampler(FieldPtr field, std::uint64_t seed, std::string_view stream, std::uint64_t trial)
    : field_(std::move(field)), rng_(seeded(seed, stream, trial)) {}

// Draws are taken straight from the engine so that the sequence does not
// depend on the standard library's distribution code.
Fq Sampler::element() { return static_cast<Fq>(rng_() % field_->q()); }

Fq Sampler::nonzero_element() { return static_cast<Fq>(1 + rng_() % (field_->q() - 1)); }

LaurentF Sampler::tail(std::int64_t v, std::int64_t prec) {
    std::vector<Fq> c;
    c.push_back(nonzero_element());
    for (std::int64_t e = v + 1; e < prec; ++e) c.push_back(element());
    return LaurentF::from_coeffs(field_, v, std::move(c), prec);
}

PolyA Sampler::polynomial(int max_deg, bool nonzero) {
    for (;;) {
        std::vector<Fq> c;
        for (int i = 0; i <= max_deg; ++i) c.push_back(element());
        PolyA a(field_, std::move(c));
        if (!nonzero || !a.is_zero()) return a;
    }
}

LaurentF Sampler::integral(std::size_t length) {
    std::vector<Fq> c;
    for (std::size_t e = 0; e < length; ++e) c.push_back(element());
    return LaurentF::from_coeffs(field_, 0, std::move(c), kPrecInf);
}

TruncSeries Sampler::series(std::size_t M, std::size_t length) {
    std::vector<LaurentF> a;
    a.reserve(M);
    for (std::size_t j = 0; j < M; ++j) a.push_back(integral(length));
    return TruncSeries(field_, std::move(a));
}

AdditiveSeries Sampler::generator(std::size_t m, std::size_t length) {
    std::vector<LaurentF> h;
    h.push_back(LaurentF::constant(field_, nonzero_element()));
    for (std::size_t i = 1; i < m; ++i) h.push_back(integral(length));
    return AdditiveSeries(field_, std::move(h), true);
}

}  // namespace umbral::cli
