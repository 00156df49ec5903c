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

#ifndef UMBRAL_JSON_IO_HPP
#define UMBRAL_JSON_IO_HPP

#include <nlohmann/json.hpp>

#include "umbral/additive.hpp"
#include "umbral/duality.hpp"
#include "umbral/laurent.hpp"
#include "umbral/poly.hpp"
#include "umbral/series.hpp"

namespace umbral {

using Json = nlohmann::ordered_json;

// A valuation or precision; kValInf is written as the string "inf".
Json valuation_json(std::int64_t v);

// Field elements are written as their d base-p digits.
Json fq_to_json(const FieldCtx& field, Fq a);
// Accepts a digit array or a plain integer.
Fq fq_from_json(const FieldCtx& field, const Json& j);

Json to_json(const PolyA& a);
PolyA poly_from_json(const FieldPtr& field, const Json& j);

// {"v", "coeffs", "prec", "zero"}; prec is null for exact values.
Json to_json(const LaurentF& x);
LaurentF laurent_from_json(const FieldPtr& field, const Json& j);

// {"trunc", "coeffs"}
Json to_json(const TruncSeries& P);
TruncSeries series_from_json(const FieldPtr& field, const Json& j);

// {"pcoeffs", "exact"}
Json to_json(const AdditiveSeries& H);
AdditiveSeries additive_from_json(const FieldPtr& field, const Json& j);

Json to_json(const ReportEntry& e);
Json to_json(const DualityReport& r);

Json field_json(const FieldCtx& field);

}  // namespace umbral

#endif  // UMBRAL_JSON_IO_HPP
