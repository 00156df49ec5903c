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
#include "umbral_cli/config.hpp"

#include <cstdlib>
#include <string>

#include "umbral/error.hpp"

namespace umbral::cli {

void Config::validate() const {
    if (prec < 8) throw InvalidArgument("--prec must be at least 8");
    if (trunc < 4) throw InvalidArgument("--trunc must be at least 4");
    if (basis < 1 || basis > trunc) throw InvalidArgument("--basis must lie in [1, trunc]");
    if (trials && *trials == 0) throw InvalidArgument("--trials must be positive");
    if (window < 1 || k_max < window) throw InvalidArgument("need 1 <= window <= k_max");
    if (guard < 0) throw InvalidArgument("guard must be non-negative");
    if (cap == 0) throw InvalidArgument("enumeration cap must be positive");
}

FieldPtr Config::make_field() const { return FieldCtx::create(p, d, modulus); }

Json Config::to_json() const {
    Json j;
    j["p"] = p;
    j["d"] = d;
    j["modulus"] = modulus;
    j["prec"] = prec;
    j["trunc"] = trunc;
    j["basis"] = basis;
    j["trials"] = trials ? Json(*trials) : Json(nullptr);
    j["seed"] = seed;
    j["cap"] = cap;
    j["window"] = window;
    j["k_max"] = k_max;
    j["guard"] = guard;
    return j;
}

void apply_environment(Config& cfg) {
    const char* env = std::getenv("UMBRAL_FLOW_CAP");
    if (env == nullptr || *env == '\0') return;
    const std::string text(env);
    std::size_t used = 0;
    unsigned long long value = 0;
    try {
        value = std::stoull(text, &used);
    } catch (const std::exception&) {
        used = 0;
    }
    if (used != text.size() || value == 0 || text[0] == '-')
        throw InvalidArgument("UMBRAL_FLOW_CAP must be a positive integer, got '" + text + "'");
    cfg.cap = value;
}

UmbralContext make_context(const Config& cfg, const FieldPtr& field, std::int64_t prec, std::int64_t guard) {
    EvalConfig ec;
    ec.prec = prec;
    ec.guard = guard;
    ec.window = cfg.window;
    ec.k_max = cfg.k_max;
    CarlitzParams cp;
    cp.enumeration_cap = cfg.cap;
    cp.window = cfg.window;
    cp.k_max = cfg.k_max;
    return UmbralContext(field, ec, cp);
}

}  // namespace umbral::cli
