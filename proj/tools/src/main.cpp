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
// umbral-flow: command-line front end.
//
//   umbral-flow field-info
//   umbral-flow carlitz dk --k K
//   umbral-flow carlitz ek --k K --x ELT
//   umbral-flow carlitz exp --x ELT [--entire]
//   umbral-flow flow apply --map MAP --x ELT --series FILE
//   umbral-flow verify CLAIM
//
// Exit status: 0 pass, 1 some claim failed, 2 invalid input.

#include <CLI11.hpp>

#include <algorithm>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include "umbral/duality.hpp"
#include "umbral/error.hpp"
#include "umbral/json_io.hpp"
#include "umbral_cli/config.hpp"
#include "umbral_cli/parse.hpp"
#include "umbral_cli/verify.hpp"

namespace {

using namespace umbral;
using umbral::cli::Config;

constexpr int kExitFail = 1;
constexpr int kExitInvalid = 2;

Json read_json(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw InvalidArgument("cannot open '" + path + "'");
    try {
        return Json::parse(in);
    } catch (const nlohmann::json::exception& e) {
        throw ParseError(path + ": " + e.what(), 0);
    }
}

// Series file: {"coeffs": [...]} with Laurent JSON objects or element text.
TruncSeries read_series(const std::string& path, const FieldPtr& field, std::size_t M) {
    Json j = read_json(path);
    if (!j.is_object() || !j.contains("coeffs") || !j["coeffs"].is_array())
        throw ParseError(path + ": expected an object with a coeffs array", 0);
    std::vector<LaurentF> a;
    for (const Json& c : j["coeffs"])
        a.push_back(c.is_string() ? cli::parse_element(c.get<std::string>(), field) : laurent_from_json(field, c));
    if (a.size() > M) a.erase(a.begin() + static_cast<std::ptrdiff_t>(M), a.end());
    while (a.size() < M) a.push_back(LaurentF::zero(field));
    return TruncSeries(field, std::move(a));
}

UmbralMap plain_map(const std::string& name, const FieldPtr& field) {
    if (name == "additive") return UmbralMap::additive();
    if (name == "naive") return UmbralMap::naive();
    if (name == "twisted") return UmbralMap::twisted();
    const std::string prefix = "geometric:";
    if (name.rfind(prefix, 0) == 0) {
        const std::string fn = name.substr(prefix.size());
        if (fn == "identity") return UmbralMap::geometric(IdentityFn{});
        if (fn == "exp") return UmbralMap::geometric(CarlitzExpFn{});
        return UmbralMap::geometric(PolyFn{cli::parse_polynomial(fn, field)});
    }
    throw InvalidArgument("unknown map '" + name + "'");
}

// dual:<file> where the file holds {"inner": name, "H": additive series}
// or just the additive series (inner map additive). --H names the file
// when the map is plain "dual".
UmbralMap parse_map(const std::string& desc, const std::string& h_file, const FieldPtr& field,
                    std::int64_t cap) {
    std::string path;
    if (desc == "dual")
        path = h_file;
    else if (desc.rfind("dual:", 0) == 0)
        path = desc.substr(5);
    else
        return plain_map(desc, field);
    if (path.empty()) throw InvalidArgument("dual map needs a generator file");
    const Json j = read_json(path);
    const bool wrapped = j.contains("H");
    const AdditiveSeries H = additive_from_json(field, wrapped ? j["H"] : j);
    const UmbralMap inner = wrapped && j.contains("inner") ? plain_map(j["inner"].get<std::string>(), field)
                                                           : UmbralMap::additive();
    const std::size_t range = std::max<std::size_t>(H.size(), 8);
    return UmbralMap::dual(inner, AdditiveIso::from_generator(H, range, cap));
}

void print(const Json& j) { std::cout << j.dump(2) << '\n'; }

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Flows of umbral maps over F_q((1/t))"};
    app.require_subcommand(1);
    app.fallthrough();

    Config cfg;
    std::string modulus;
    std::optional<std::int64_t> prec;
    app.add_option("--p", cfg.p, "characteristic");
    app.add_option("--d", cfg.d, "degree of F_q over F_p");
    app.add_option("--modulus", modulus, "irreducible f(u), e.g. u^2+u+1 or 1,1,1");
    app.add_option("--prec", prec, "target precision N");
    app.add_option("--trunc", cfg.trunc, "series truncation M");
    auto* basis_opt = app.add_option("--basis", cfg.basis, "basis size J (default min(12, trunc))");
    app.add_option("--trials", cfg.trials, "trials per suite");
    app.add_option("--seed", cfg.seed, "sampling seed");
    app.add_option("--window", cfg.window, "stopping window W");
    app.add_option("--k-max", cfg.k_max, "largest index scanned");
    app.add_option("--guard", cfg.guard, "extra digits carried internally");

    auto* field_info = app.add_subcommand("field-info", "describe F_q");

    auto* carlitz = app.add_subcommand("carlitz", "Carlitz factorials, e_k and e_C");
    carlitz->require_subcommand(1);
    std::size_t k = 0;
    std::string x_text;
    bool entire = false;
    auto* c_dk = carlitz->add_subcommand("dk", "D_k");
    c_dk->add_option("--k", k)->required();
    auto* c_ek = carlitz->add_subcommand("ek", "e_k(x)");
    c_ek->add_option("--k", k)->required();
    c_ek->add_option("--x", x_text, "element, e.g. t^-1+t^-3 or @file.json")->required();
    auto* c_exp = carlitz->add_subcommand("exp", "e_C(x)");
    c_exp->add_option("--x", x_text, "element, e.g. t^-1+t^-3 or @file.json")->required();
    c_exp->add_flag("--entire", entire, "allow any x (sum of the entire series)");

    auto* flow = app.add_subcommand("flow", "flow operators");
    flow->require_subcommand(1);
    auto* f_apply = flow->add_subcommand("apply", "D_F(x) P");
    std::string map_text;
    std::string series_path;
    std::string h_file;
    f_apply->add_option("--map", map_text, "additive|naive|twisted|geometric:<fn>|dual:<file>")->required();
    f_apply->add_option("--x", x_text, "element, e.g. t^-1+t^-3 or @file.json")->required();
    f_apply->add_option("--series", series_path, "JSON file with a coeffs array")->required();
    f_apply->add_option("--H", h_file, "generator file for --map dual");

    auto* verify = app.add_subcommand("verify", "run a verification suite");
    std::string claim;
    verify->add_option("claim", claim, "claim identifier or 'all'")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitInvalid;
    }

    try {
        if (!modulus.empty()) cfg.modulus = cli::parse_modulus(modulus, cfg.p);
        if (prec) {
            cfg.prec = *prec;
            cfg.prec_explicit = true;
        }
        if (basis_opt->count() == 0) cfg.basis = std::min(cfg.basis, cfg.trunc);
        cli::apply_environment(cfg);
        cfg.validate();
        const FieldPtr field = cfg.make_field();
        const UmbralContext ctx = cli::make_context(cfg, field, cfg.prec, cfg.guard);

        if (*field_info) {
            print(field_json(*field));
            return 0;
        }
        if (*c_dk) {
            const PolyA& dk = ctx.carlitz->dk(k);
            Json j;
            j["k"] = k;
            j["dk"] = to_json(dk);
            j["text"] = dk.to_string();
            print(j);
            return 0;
        }
        if (*c_ek) {
            const LaurentF x = cli::parse_element(x_text, field);
            Json j;
            j["k"] = k;
            if (x.is_polynomial()) {
                const PolyA e = ctx.carlitz->ek(k, x.to_poly());
                j["ek"] = to_json(e);
                j["text"] = e.to_string();
            } else {
                const LaurentF e = ctx.carlitz->ek(k, x, cfg.prec);
                j["ek"] = to_json(e);
                j["text"] = e.to_string();
            }
            print(j);
            return 0;
        }
        if (*c_exp) {
            const LaurentF x = cli::parse_element(x_text, field);
            const LaurentF e = entire ? ctx.carlitz->exp_entire(x, cfg.prec) : ctx.carlitz->exp(x, cfg.prec);
            Json j;
            j["exp"] = to_json(e);
            j["text"] = e.to_string();
            print(j);
            return 0;
        }
        if (*f_apply) {
            const LaurentF x = cli::parse_element(x_text, field);
            const TruncSeries P = read_series(series_path, field, cfg.trunc);
            const UmbralMap map = parse_map(map_text, h_file, field, ctx.eval.working_prec() + cfg.prec);
            Moments F(map, x, ctx);
            const Admissibility adm = admissible_heuristic(
                F, AdmissibilityParams{cfg.k_max, cfg.window, ctx.eval.working_prec()});
            if (!adm.apparent) throw PreconditionFailed(map.name() + " is not apparently admissible at x");
            print(to_json(apply_flow(F, P).with_precision(cfg.prec)));
            return 0;
        }
        if (*verify) {
            const cli::RunReport report = cli::run_verify(claim, cfg);
            print(report.to_json());
            std::cerr << cli::summary(report);
            return report.pass() ? 0 : kExitFail;
        }
    } catch (const Error& e) {
        std::cerr << "umbral-flow: " << e.what() << '\n';
        return kExitInvalid;
    }
    return kExitInvalid;
}
