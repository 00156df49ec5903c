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

#ifndef UMBRAL_FLOW_HPP
#define UMBRAL_FLOW_HPP

#include <cstdint>
#include <deque>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "umbral/series.hpp"
#include "umbral/umbral_map.hpp"

namespace umbral {

// Proven lower bounds on the moment valuations.
struct MomentDecay {
    // F_m(x) is exactly zero for every m >= support.
    std::optional<std::size_t> support;
    // v(F_m(x)) >= rate * m for every m.
    std::optional<std::int64_t> rate;
};

// Lazily computed moment sequence F_0(x), F_1(x), ... of one map at one
// point, carried at the working precision of the context. Not thread-safe;
// use one instance per trial.
class Moments {
   public:
    Moments(UmbralMap map, LaurentF x, UmbralContext ctx);

    const LaurentF& operator()(std::size_t k);

    const UmbralMap& map() const noexcept { return map_; }
    const LaurentF& x() const noexcept { return x_; }
    const UmbralContext& ctx() const noexcept { return ctx_; }
    std::int64_t working_prec() const noexcept { return ctx_.eval.working_prec(); }

    const MomentDecay& decay();
    // Smallest L with v(F_m) + offset >= threshold for all m >= L. Uses the
    // proven decay when available and a window of consecutive terms
    // otherwise (NoConvergenceDetected if none is found).
    std::size_t tail_start(std::int64_t threshold, std::int64_t offset);

    // Replaces F_k(x) by value; used to test that the duality checks
    // notice a wrong moment.
    void override_moment(std::size_t k, LaurentF value);

   private:
    LaurentF compute(std::size_t k);
    LaurentF geometric_moment(std::size_t k);
    LaurentF twisted_moment(std::size_t n);
    const LaurentF& twisted_factor(std::size_t j);
    LaurentF dual_moment_next();
    void dual_rebuild(std::size_t k, std::size_t length);
    void dual_step(std::size_t length);
    std::vector<std::int64_t> dual_caps(std::size_t length);

    UmbralMap map_;
    LaurentF x_;
    UmbralContext ctx_;
    std::deque<LaurentF> cache_;
    std::map<std::size_t, LaurentF> overrides_;
    std::optional<MomentDecay> decay_;

    std::optional<LaurentF> gamma_;
    std::deque<LaurentF> twisted_factors_;

    // Dual state: R holds the coefficients of Hinv(T)^dual_k_ below
    // dual_len_, each at the absolute precision dual_caps_ requests.
    std::shared_ptr<Moments> inner_;
    std::vector<std::pair<std::size_t, LaurentF>> hinv_terms_;
    std::int64_t hinv_min_val_ = 0;
    std::int64_t hinv_known_ = 0;
    bool hinv_exact_ = false;
    std::size_t hinv_degree_ = 0;
    std::vector<LaurentF> dual_r_;
    std::size_t dual_k_ = 0;
};

// F_k(x).
LaurentF moment(const UmbralMap& map, const LaurentF& x, std::size_t k, const UmbralContext& ctx);

struct Admissibility {
    bool apparent = false;
    // First index found with v(F_k(x)) below the threshold.
    std::optional<std::size_t> witness;
    std::string rule;
};

Admissibility admissible_heuristic(Moments& F, const AdmissibilityParams& params);
Admissibility admissible_heuristic(const UmbralMap& map, const LaurentF& x, const AdmissibilityParams& params,
                                   const UmbralContext& ctx);

// sum_{k < M-h} C(k+h, h) a_{k+h} F_k(x).
LaurentF flow_coefficient(Moments& F, const TruncSeries& P, std::size_t h);
LaurentF flow_coefficient(const UmbralMap& map, const LaurentF& x, const TruncSeries& P, std::size_t h,
                          const UmbralContext& ctx);

// The flow D_F(x) applied to P. Only the first out_trunc coefficients are
// produced (default: all of them); every coefficient still sums over the
// full truncation of P.
TruncSeries apply_flow(Moments& F, const TruncSeries& P, std::optional<std::size_t> out_trunc = {});
TruncSeries apply_flow(const UmbralMap& map, const LaurentF& x, const TruncSeries& P, const UmbralContext& ctx,
                       std::optional<std::size_t> out_trunc = {});

// sum_m Q_m F_m(x). With complete = true, Q is a polynomial and its listed
// coefficients are all of it; otherwise the terms past the end must be
// negligible, which is checked on the last window of listed terms.
LaurentF umbral_eval(const TruncSeries& Q, bool complete, Moments& F);
LaurentF umbral_eval(const TruncSeries& Q, bool complete, const UmbralMap& map, const LaurentF& x,
                     const UmbralContext& ctx);

}  // namespace umbral

#endif  // UMBRAL_FLOW_HPP
