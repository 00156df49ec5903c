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
#ifndef UMBRAL_CLI_PARSE_HPP
#define UMBRAL_CLI_PARSE_HPP

#include <string>
#include <vector>

#include "umbral/laurent.hpp"
#include "umbral/poly.hpp"

namespace umbral::cli {

// Grammar:
//   expr   := ['+'|'-'] term (('+'|'-') term)*
//   term   := factor (['*'] factor)*
//   factor := atom ['^' ['-'] integer]
//   atom   := integer | 't' | 'u' | '(' expr ')'
// Integers reduce mod p, u is the generator of F_q over F_p and negative
// exponents are allowed on t alone. "@path" reads a Laurent JSON file.
// The result is exact. ParseError carries the byte offset.
LaurentF parse_element(const std::string& text, const FieldPtr& field);

// As parse_element, but the value must lie in A = F_q[t].
PolyA parse_polynomial(const std::string& text, const FieldPtr& field);

// A polynomial in u over F_p ("u^2+u+1") or a comma list of digits, lowest
// degree first ("1,1,1").
std::vector<std::uint32_t> parse_modulus(const std::string& text, std::uint32_t p);

}  // namespace umbral::cli

#endif  // UMBRAL_CLI_PARSE_HPP
