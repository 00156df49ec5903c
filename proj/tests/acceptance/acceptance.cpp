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
// Runs every verification suite at its default configuration and prints one
// PASS/FAIL line per acceptance criterion. argv[1] is the umbral-flow binary,
// used for the byte-for-byte determinism runs and the exit-code contract.

#include <sys/wait.h>

#include <array>
#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "umbral_cli/verify.hpp"

namespace {

using umbral::DualityReport;
using umbral::cli::Config;
using umbral::cli::run_verify;

constexpr double kSuiteSeconds = 60.0;

struct Outcome {
    DualityReport report;
    double seconds = 0.0;
    std::string error;
};

Outcome run_claim(const std::string& claim) {
    Outcome out;
    const auto start = std::chrono::steady_clock::now();
    try {
        const umbral::cli::RunReport r = run_verify(claim, Config{});
        out.report = r.claims.at(0).report;
    } catch (const std::exception& e) {
        out.error = e.what();
    }
    out.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return out;
}

std::int64_t counter(const DualityReport& r, const std::string& name) {
    const auto it = r.counters.find(name);
    return it == r.counters.end() ? -1 : it->second;
}

struct Process {
    int status = -1;
    std::string out;
};

Process run_process(const std::string& command) {
    Process p;
    FILE* pipe = ::popen((command + " 2>/dev/null").c_str(), "r");
    if (!pipe) return p;
    std::array<char, 4096> buf{};
    std::size_t n = 0;
    while ((n = std::fread(buf.data(), 1, buf.size(), pipe)) > 0) p.out.append(buf.data(), n);
    const int raw = ::pclose(pipe);
    p.status = WIFEXITED(raw) ? WEXITSTATUS(raw) : -1;
    return p;
}

class Sheet {
   public:
    void line(int id, const std::string& name, bool ok, const std::string& detail) {
        std::cout << (ok ? "PASS " : "FAIL ") << id << " " << name << ": " << detail << "\n";
        all_ &= ok;
    }
    bool all() const { return all_; }

   private:
    bool all_ = true;
};

std::string describe(const Outcome& o) {
    if (!o.error.empty()) return "error: " + o.error;
    std::ostringstream s;
    s << o.report.trials << " trials, " << o.report.failures.size() << " failures, min agreement ";
    if (o.report.min_agreement_valuation >= umbral::kValInf)
        s << "inf";
    else
        s << o.report.min_agreement_valuation;
    s << " (target " << o.report.target_precision << "), " << o.seconds << " s";
    return s.str();
}

// Pass, trial count, target precision, agreement at the target and the time limit.
bool standard(const Outcome& o, std::size_t trials, std::int64_t target) {
    return o.error.empty() && o.report.pass() && o.report.trials == trials &&
           o.report.target_precision == target && o.report.min_agreement_valuation >= target &&
           o.seconds < kSuiteSeconds;
}

}  // namespace

int main(int argc, char** argv) {
    if (argc < 2) {
        std::cerr << "usage: umbral_acceptance <path-to-umbral-flow>\n";
        return 2;
    }
    const std::string cli = argv[1];
    Sheet sheet;

    const Outcome taylor = run_claim("taylor");
    sheet.line(1, "taylor", standard(taylor, 200, 64), describe(taylor));

    const Outcome naive = run_claim("naive-flow");
    sheet.line(2, "naive-flow", standard(naive, 100, 64), describe(naive));

    // Target 0: the agreement is the slack of the bound, which must not be negative.
    const Outcome bounded = run_claim("boundedness");
    sheet.line(3, "boundedness", standard(bounded, 300, 0), describe(bounded));

    const Outcome power = run_claim("power-rule");
    sheet.line(4, "power-rule", standard(power, 50, 64), describe(power));

    const Outcome binom = run_claim("binomial-twisted");
    sheet.line(5, "binomial-twisted", standard(binom, 20, 128), describe(binom));

    const Outcome comp = run_claim("flow-composition");
    sheet.line(6, "flow-composition", standard(comp, 50, 64), describe(comp));

    const Outcome dual = run_claim("duality");
    const bool perturbed = counter(dual.report, "perturbed_trials") == 20 &&
                           counter(dual.report, "perturbations_detected") == 20;
    sheet.line(7, "duality", standard(dual, 120, 64) && perturbed,
               describe(dual) + ", perturbations detected " +
                   std::to_string(counter(dual.report, "perturbations_detected")) + "/" +
                   std::to_string(counter(dual.report, "perturbed_trials")));

    const Outcome dbinom = run_claim("dual-binomial");
    sheet.line(8, "dual-binomial", standard(dbinom, 20, 128), describe(dbinom));

    const Outcome geo = run_claim("geometric");
    const bool geo_counts = counter(geo.report, "additive_trials") == 50 &&
                            counter(geo.report, "flows_agree") == 50 && counter(geo.report, "geometric") == 50 &&
                            counter(geo.report, "twisted_trials") == 11 &&
                            counter(geo.report, "witness_within_q2") == 11;
    sheet.line(9, "geometric", standard(geo, 61, 64) && geo_counts,
               describe(geo) + ", additive geometric " + std::to_string(counter(geo.report, "geometric")) +
                   "/50, twisted witnesses within q^2 " +
                   std::to_string(counter(geo.report, "witness_within_q2")) + "/11");

    const Outcome ex58 = run_claim("example58");
    sheet.line(10, "example58", standard(ex58, 4, 48), describe(ex58));

    const Outcome iso = run_claim("iso-roundtrip");
    const bool iso_counts = counter(iso.report, "inverse_trials") == 20 &&
                            counter(iso.report, "symmetry_trials") == 20 &&
                            counter(iso.report, "transitivity_trials") == 10;
    sheet.line(11, "iso-roundtrip", standard(iso, 50, 64) && iso_counts, describe(iso));

    const Outcome det = run_claim("determinism");
    std::vector<Process> runs;
    for (int i = 0; i < 3; ++i) runs.push_back(run_process("'" + cli + "' verify all --seed 1"));
    bool same = true;
    for (const Process& r : runs) same &= r.status == 0 && !r.out.empty() && r.out == runs[0].out;
    sheet.line(12, "determinism",
               det.error.empty() && det.report.pass() && det.seconds < kSuiteSeconds && same,
               describe(det) + "; 3 runs of 'verify all': " + (same ? "identical" : "differ") + ", " +
                   std::to_string(runs[0].out.size()) + " bytes, exit " + std::to_string(runs[0].status));

    // Further checks outside the numbered list.
    const Outcome ex57 = run_claim("example57");
    sheet.line(13, "example57", standard(ex57, 50, 64), describe(ex57));

    const Process unknown = run_process("'" + cli + "' verify no-such-claim");
    const Process single = run_process("'" + cli + "' verify taylor --trials 5");
    sheet.line(14, "exit-codes", unknown.status == 2 && single.status == 0,
               "unknown claim exit " + std::to_string(unknown.status) + ", passing claim exit " +
                   std::to_string(single.status));

    std::cout << (sheet.all() ? "ALL PASS" : "SOME FAILED") << "\n";
    return sheet.all() ? 0 : 1;
}
