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

#ifndef UMBRAL_ERROR_HPP
#define UMBRAL_ERROR_HPP

#include <cstddef>
#include <stdexcept>
#include <string>

namespace umbral {

// Root of every exception thrown by the library.
class Error : public std::runtime_error {
   public:
    using std::runtime_error::runtime_error;
};

#define UMBRAL_DEFINE_ERROR(Name)            \
    class Name : public Error {              \
       public:                               \
        using Error::Error;                  \
    }

UMBRAL_DEFINE_ERROR(InvalidField);
UMBRAL_DEFINE_ERROR(FieldMismatch);
UMBRAL_DEFINE_ERROR(ZeroInverse);
UMBRAL_DEFINE_ERROR(DivisionByZero);
UMBRAL_DEFINE_ERROR(EnumerationCapExceeded);
UMBRAL_DEFINE_ERROR(PrecisionLoss);
UMBRAL_DEFINE_ERROR(CompositionConstantTerm);
UMBRAL_DEFINE_ERROR(NotAGenerator);
UMBRAL_DEFINE_ERROR(TruncationMismatch);
UMBRAL_DEFINE_ERROR(OutsideConvergenceDomain);
UMBRAL_DEFINE_ERROR(NoConvergenceDetected);
UMBRAL_DEFINE_ERROR(PreconditionFailed);
UMBRAL_DEFINE_ERROR(InvalidArgument);
UMBRAL_DEFINE_ERROR(UnknownClaim);

#undef UMBRAL_DEFINE_ERROR

// Carries the byte offset of the offending character.
class ParseError : public Error {
   public:
    ParseError(const std::string& what, std::size_t position)
        : Error(what + " at position " + std::to_string(position)), position_(position) {}

    std::size_t position() const noexcept { return position_; }

   private:
    std::size_t position_;
};

}  // namespace umbral

#endif  // UMBRAL_ERROR_HPP
