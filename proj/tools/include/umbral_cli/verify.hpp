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
#ifndef UMBRAL_CLI_VERIFY_HPP
#define UMBRAL_CLI_VERIFY_HPP

#include <string>
#include <vector>

#include "umbral/duality.hpp"
#include "umbral_cli/config.hpp"

namespace umbral::cli {

struct ClaimResult {
    DualityReport report;
    // Guard digits of the last attempt.
    std::int64_t guard = 0;
    std::size_t attempts = 1;
    // Not part of the JSON report.
    double seconds = 0.0;
};

struct RunReport {
    Config config;
    std::vector<ClaimResult> claims;

    bool pass() const noexcept;
    // Deterministic for a fixed configuration; timings are left out.
    Json to_json() const;
};

// Claim identifiers accepted by run_verify, in the order "all" runs them.
const std::vector<std::string>& claim_names();

// Runs one suite, or every suite for "all". A suite whose failures are all
// undecided at the working precision is rerun with twice the guard, up to
// two times. UnknownClaim for other identifiers.
RunReport run_verify(const std::string& claim, const Config& cfg);

// One line per claim for standard error.
std::string summary(const RunReport& report);

}  // namespace umbral::cli

#endif  // UMBRAL_CLI_VERIFY_HPP
