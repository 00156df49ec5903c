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

#include "umbral/json_io.hpp"

#include "umbral/error.hpp"

namespace umbral {

namespace {

std::int64_t int_field(const Json& j, const char* key) {
    if (!j.contains(key) || !j.at(key).is_number_integer()) {
        throw InvalidArgument(std::string("expected integer field \"") + key + "\"");
    }
    return j.at(key).get<std::int64_t>();
}

}  // namespace

Json valuation_json(std::int64_t v) {
    if (v >= kValInf) return "inf";
    return v;
}

Json fq_to_json(const FieldCtx& field, Fq a) {
    Json out = Json::array();
    for (auto d : field.digits(a)) out.push_back(d);
    return out;
}

Fq fq_from_json(const FieldCtx& field, const Json& j) {
    if (j.is_number_integer()) return field.from_int(j.get<std::int64_t>());
    if (!j.is_array()) throw InvalidArgument("field element must be an integer or a digit array");
    std::vector<std::int64_t> digits;
    for (const auto& d : j) {
        if (!d.is_number_integer()) throw InvalidArgument("field element digits must be integers");
        digits.push_back(d.get<std::int64_t>());
    }
    return field.from_digits(digits);
}

Json to_json(const PolyA& a) {
    Json coeffs = Json::array();
    for (Fq c : a.coeffs()) coeffs.push_back(fq_to_json(*a.field(), c));
    return Json{{"coeffs", coeffs}};
}

PolyA poly_from_json(const FieldPtr& field, const Json& j) {
    if (!j.contains("coeffs") || !j.at("coeffs").is_array()) throw InvalidArgument("polynomial needs \"coeffs\"");
    std::vector<Fq> c;
    for (const auto& e : j.at("coeffs")) c.push_back(fq_from_json(*field, e));
    return PolyA(field, std::move(c));
}

Json to_json(const LaurentF& x) {
    Json coeffs = Json::array();
    for (Fq c : x.coeffs()) coeffs.push_back(fq_to_json(*x.field(), c));
    Json out;
    out["v"] = x.valuation_floor() >= kValInf ? Json("inf") : Json(x.valuation_floor());
    out["coeffs"] = coeffs;
    out["prec"] = x.is_exact() ? Json(nullptr) : Json(x.prec());
    out["zero"] = x.is_exact_zero();
    return out;
}

LaurentF laurent_from_json(const FieldPtr& field, const Json& j) {
    if (!j.is_object()) throw InvalidArgument("Laurent element must be a JSON object");
    const bool zero = j.value("zero", false);
    std::int64_t prec = kPrecInf;
    if (j.contains("prec") && !j.at("prec").is_null()) prec = int_field(j, "prec");
    if (zero) {
        if (prec < kPrecInf) throw InvalidArgument("an exact zero cannot carry a precision");
        return LaurentF::zero(field);
    }
    std::vector<Fq> c;
    if (j.contains("coeffs")) {
        for (const auto& e : j.at("coeffs")) c.push_back(fq_from_json(*field, e));
    }
    if (c.empty()) {
        if (prec >= kPrecInf) return LaurentF::zero(field);
        return LaurentF::zero_to_precision(field, prec);
    }
    return LaurentF::from_coeffs(field, int_field(j, "v"), std::move(c), prec);
}

Json to_json(const TruncSeries& P) {
    Json coeffs = Json::array();
    for (const auto& a : P.coeffs()) coeffs.push_back(to_json(a));
    Json out;
    out["trunc"] = P.trunc();
    out["coeffs"] = coeffs;
    return out;
}

TruncSeries series_from_json(const FieldPtr& field, const Json& j) {
    if (!j.contains("coeffs") || !j.at("coeffs").is_array()) throw InvalidArgument("series needs \"coeffs\"");
    const auto& c = j.at("coeffs");
    const std::size_t M = j.contains("trunc") ? static_cast<std::size_t>(int_field(j, "trunc")) : c.size();
    if (c.size() > M) throw InvalidArgument("series lists more coefficients than its truncation");
    TruncSeries P(field, M);
    for (std::size_t i = 0; i < c.size(); ++i) P[i] = laurent_from_json(field, c[i]);
    return P;
}

Json to_json(const AdditiveSeries& H) {
    Json coeffs = Json::array();
    for (const auto& h : H.pcoeffs()) coeffs.push_back(to_json(h));
    Json out;
    out["pcoeffs"] = coeffs;
    out["exact"] = H.exact();
    return out;
}

AdditiveSeries additive_from_json(const FieldPtr& field, const Json& j) {
    if (!j.contains("pcoeffs") || !j.at("pcoeffs").is_array()) {
        throw InvalidArgument("additive series needs \"pcoeffs\"");
    }
    std::vector<LaurentF> h;
    for (const auto& e : j.at("pcoeffs")) h.push_back(laurent_from_json(field, e));
    return AdditiveSeries(field, std::move(h), j.value("exact", false));
}

Json to_json(const ReportEntry& e) {
    Json out;
    out["x"] = e.x ? to_json(*e.x) : Json(nullptr);
    out["basis"] = e.basis ? Json(*e.basis) : Json(nullptr);
    out["index"] = e.index;
    out["valuation"] = valuation_json(e.valuation);
    out["note"] = e.note;
    return out;
}

Json to_json(const DualityReport& r) {
    Json out;
    out["claim"] = r.claim;
    out["pass"] = r.pass();
    out["trials"] = r.trials;
    out["target_precision"] = r.target_precision;
    out["min_agreement_valuation"] = valuation_json(r.min_agreement_valuation);
    Json counters = Json::object();
    for (const auto& [k, v] : r.counters) counters[k] = v;
    out["counters"] = counters;
    Json failures = Json::array();
    for (const auto& f : r.failures) failures.push_back(to_json(f));
    out["failures"] = failures;
    Json witnesses = Json::array();
    for (const auto& w : r.witnesses) witnesses.push_back(to_json(w));
    out["witnesses"] = witnesses;
    return out;
}

Json field_json(const FieldCtx& field) {
    Json out;
    out["p"] = field.p();
    out["d"] = field.d();
    out["q"] = field.q();
    out["modulus"] = field.modulus();
    out["description"] = field.describe();
    return out;
}

}  // namespace umbral
