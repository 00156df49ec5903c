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

#ifndef UMBRAL_DUALITY_HPP
#define UMBRAL_DUALITY_HPP

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "umbral/flow.hpp"
#include "umbral/iso.hpp"

namespace umbral {

struct ReportEntry {
    std::optional<LaurentF> x;
    std::optional<std::size_t> basis;
    std::size_t index = 0;
    // Valuation of the discrepancy, or kValInf.
    std::int64_t valuation = kValInf;
    std::string note;
};

// Outcome of one verification suite. pass() iff failures is empty, and then
// every compared pair agreed to target_precision.
struct DualityReport {
    std::string claim;
    std::size_t trials = 0;
    std::vector<ReportEntry> failures;
    std::vector<ReportEntry> witnesses;
    std::int64_t min_agreement_valuation = kValInf;
    std::int64_t target_precision = kDefaultPrec;
    // Some comparison could not be decided at the working precision.
    bool precision_limited = false;
    std::map<std::string, std::int64_t> counters;

    bool pass() const noexcept { return failures.empty(); }
    void merge(const DualityReport& other);
    // Records an expected equality. A discrepancy known to be nonzero is a
    // failure; one that is merely unresolved marks precision_limited.
    bool expect_agree(const LaurentF& a, const LaurentF& b, const ReportEntry& where);
    void fail(ReportEntry entry);
};

// P(H(T)) mod T^M. TruncationMismatch unless H is known below T^M.
TruncSeries apply_iso(const AdditiveIso& iso, const TruncSeries& P);
// P(Hinv(T)) mod T^M.
TruncSeries apply_iso_inverse(const AdditiveIso& iso, const TruncSeries& P);

// eval(Hinv(F(x))^k) through series_pow and umbral_eval.
LaurentF dual_moment(const UmbralMap& inner, const AdditiveIso& iso, const LaurentF& x, std::size_t k,
                     const UmbralContext& ctx);

struct Perturbation {
    std::size_t k;
    LaurentF delta;
};

// Compares phi(D_F(x) T^j) with D_Fhat(x) phi(T^j) for j < J modulo T^M.
DualityReport check_duality_diagram(const UmbralMap& inner, const AdditiveIso& iso, const LaurentF& x,
                                    std::size_t J, std::size_t M, const UmbralContext& ctx,
                                    const std::optional<Perturbation>& perturb = {});

struct GeometricCheck {
    bool geometric = true;
    std::optional<std::size_t> first_failure;
    std::int64_t min_agreement = kValInf;
    bool precision_limited = false;
};

// F_k(x) = F_1(x)^k to precision for all k <= k_max.
GeometricCheck is_geometric_at(const UmbralMap& map, const LaurentF& x, std::size_t k_max,
                               const UmbralContext& ctx);
GeometricCheck is_geometric_at(Moments& F, std::size_t k_max);

// Asserts: exp(Fhat_1(x) D) and D_Fhat(x) agree on T^j, j < J, iff inner is
// geometric at x up to k_max.
DualityReport check_geometric_criterion(const UmbralMap& inner, const AdditiveIso& iso, const LaurentF& x,
                                        std::size_t J, std::size_t M, std::size_t k_max,
                                        const UmbralContext& ctx);

// F_n(x+y) = sum_k C(n,k) F_k(x) F_{n-k}(y) for n <= n_max.
DualityReport check_binomial(const UmbralMap& map, const LaurentF& x, const LaurentF& y, std::size_t n_max,
                             const UmbralContext& ctx);

// Generator a.H o b.H, so that Dual(Dual(F, a), b) = Dual(F, compose_isos(a, b)).
AdditiveIso compose_isos(const AdditiveIso& a, const AdditiveIso& b, std::int64_t cap = kPrecInf);

// Smallest K with q^K (v + K) >= prec: past K the terms x^(q^k)/D_k of the
// Carlitz exponential are below precision whenever v(x) >= v.
std::size_t carlitz_exp_terms(std::uint64_t q, std::int64_t v, std::int64_t prec);

// Hinv(T) = sum_{k < terms} T^(q^k) / D_k, the Carlitz exponential cut to a
// polynomial. Its dual over the additive map reproduces the naive map.
AdditiveIso carlitz_exp_iso(const CarlitzCtx& carlitz, std::size_t terms, std::size_t range, std::int64_t prec);

// Hinv(T) = sum_{k < terms} (c T)^(q^k) with c = e_C(1). Over the twisted
// map its dual has first moment e_C(x) at every x in A of degree < terms.
AdditiveIso carlitz_exp_one_iso(const CarlitzCtx& carlitz, std::size_t terms, std::size_t range,
                                std::int64_t prec);

}  // namespace umbral

#endif  // UMBRAL_DUALITY_HPP
