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
#include "umbral_cli/parse.hpp"

#include <cctype>
#include <fstream>
#include <sstream>

#include "umbral/error.hpp"
#include "umbral/json_io.hpp"

namespace umbral::cli {
namespace {

class Parser {
   public:
    // var is the polynomial variable; u is accepted only when it is not.
    Parser(const std::string& text, FieldPtr field, char var)
        : s_(text), field_(std::move(field)), var_(var) {}

    LaurentF parse() {
        skip();
        if (pos_ == s_.size()) throw ParseError("empty expression", pos_);
        LaurentF value = expr();
        skip();
        if (pos_ != s_.size()) throw ParseError(std::string("unexpected '") + s_[pos_] + "'", pos_);
        return value;
    }

   private:
    void skip() {
        while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    }
    bool peek(char c) {
        skip();
        return pos_ < s_.size() && s_[pos_] == c;
    }
    bool starts_atom() {
        skip();
        if (pos_ >= s_.size()) return false;
        const char c = s_[pos_];
        return std::isdigit(static_cast<unsigned char>(c)) || c == var_ || c == '(' || (c == 'u' && var_ != 'u');
    }

    LaurentF expr() {
        LaurentF acc = LaurentF::zero(field_);
        bool negate = false;
        if (peek('+') || peek('-')) {
            negate = s_[pos_] == '-';
            ++pos_;
        }
        LaurentF first = term();
        acc = negate ? -first : first;
        while (peek('+') || peek('-')) {
            const bool minus = s_[pos_] == '-';
            ++pos_;
            LaurentF next = term();
            acc = minus ? acc - next : acc + next;
        }
        return acc;
    }

    LaurentF term() {
        LaurentF acc = factor();
        for (;;) {
            if (peek('*')) {
                ++pos_;
                acc = acc * factor();
            } else if (starts_atom()) {
                acc = acc * factor();
            } else {
                return acc;
            }
        }
    }

    LaurentF factor() {
        skip();
        const bool bare_var = pos_ < s_.size() && s_[pos_] == var_;
        LaurentF base = atom();
        if (!peek('^')) return base;
        ++pos_;
        skip();
        const std::size_t at = pos_;
        bool negative = false;
        if (pos_ < s_.size() && s_[pos_] == '-') {
            negative = true;
            ++pos_;
        }
        const std::uint64_t n = exponent();
        if (negative) {
            if (!bare_var) throw ParseError("negative exponent is only allowed on the variable", at);
            return LaurentF::monomial(field_, static_cast<std::int64_t>(n));
        }
        if (bare_var) return LaurentF::monomial(field_, -static_cast<std::int64_t>(n));
        return lau_pow(base, n);
    }

    LaurentF atom() {
        skip();
        if (pos_ >= s_.size()) throw ParseError("expected a term", pos_);
        const char c = s_[pos_];
        if (std::isdigit(static_cast<unsigned char>(c))) {
            const std::uint64_t p = field_->p();
            std::uint64_t r = 0;
            while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) {
                r = (r * 10 + static_cast<std::uint64_t>(s_[pos_] - '0')) % p;
                ++pos_;
            }
            return LaurentF::constant(field_, field_->from_int(static_cast<std::int64_t>(r)));
        }
        if (c == var_) {
            ++pos_;
            return LaurentF::monomial(field_, -1);
        }
        if (c == 'u' && var_ != 'u') {
            ++pos_;
            return LaurentF::constant(field_, field_->u());
        }
        if (c == '(') {
            ++pos_;
            LaurentF inner = expr();
            if (!peek(')')) throw ParseError("expected ')'", pos_);
            ++pos_;
            return inner;
        }
        throw ParseError(std::string("unexpected '") + c + "'", pos_);
    }

    // Plain decimal exponent.
    std::uint64_t exponent() {
        skip();
        const std::size_t start = pos_;
        std::uint64_t r = 0;
        while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) {
            if (r > 1000000000ULL) throw ParseError("exponent too large", start);
            r = r * 10 + static_cast<std::uint64_t>(s_[pos_] - '0');
            ++pos_;
        }
        if (pos_ == start) throw ParseError("expected an exponent", pos_);
        return r;
    }

    const std::string& s_;
    FieldPtr field_;
    char var_;
    std::size_t pos_ = 0;
};

LaurentF read_json_file(const std::string& path, const FieldPtr& field) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open '" + path + "'", 1);
    try {
        return laurent_from_json(field, Json::parse(in));
    } catch (const nlohmann::json::exception& e) {
        throw ParseError(std::string("bad element file '") + path + "': " + e.what(), 1);
    }
}

}  // namespace

LaurentF parse_element(const std::string& text, const FieldPtr& field) {
    std::size_t i = 0;
    while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
    if (i < text.size() && text[i] == '@') return read_json_file(text.substr(i + 1), field);
    return Parser(text, field, 't').parse();
}

PolyA parse_polynomial(const std::string& text, const FieldPtr& field) {
    const LaurentF x = parse_element(text, field);
    if (!x.is_polynomial()) throw ParseError("'" + text + "' is not a polynomial in t", 0);
    return x.to_poly();
}

std::vector<std::uint32_t> parse_modulus(const std::string& text, std::uint32_t p) {
    if (text.find('u') == std::string::npos) {
        std::vector<std::uint32_t> digits;
        std::stringstream ss(text);
        std::string item;
        std::size_t offset = 0;
        while (std::getline(ss, item, ',')) {
            std::size_t used = 0;
            unsigned long v = 0;
            try {
                v = std::stoul(item, &used);
            } catch (const std::exception&) {
                throw ParseError("expected a digit", offset);
            }
            if (used != item.size() || v >= p) throw ParseError("expected a digit below p", offset);
            digits.push_back(static_cast<std::uint32_t>(v));
            offset += item.size() + 1;
        }
        if (digits.empty()) throw ParseError("empty modulus", 0);
        return digits;
    }
    const FieldPtr prime = FieldCtx::create(p);
    const LaurentF f = Parser(text, prime, 'u').parse();
    if (!f.is_polynomial()) throw ParseError("modulus must be a polynomial in u", 0);
    std::vector<std::uint32_t> digits;
    const PolyA poly = f.to_poly();
    for (Fq c : poly.coeffs()) digits.push_back(c);
    return digits;
}

}  // namespace umbral::cli
