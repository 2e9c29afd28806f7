/*
   Copyright 2026 The tamecurves Authors

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

#ifndef TAMECURVES_ERRORS_HPP
#define TAMECURVES_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace tamecurves {

/// Every library failure carries a stable kind name; the CLI reports it verbatim.
class Error : public std::runtime_error {
   public:
    Error(std::string kind, const std::string& what)
        : std::runtime_error(kind + ": " + what), kind_(std::move(kind)) {}
    const std::string& kind() const noexcept { return kind_; }

   private:
    std::string kind_;
};

#define TAMECURVES_DEFINE_ERROR(Name)                                   \
    class Name : public Error {                                         \
       public:                                                          \
        explicit Name(const std::string& what) : Error(#Name, what) {} \
    };

TAMECURVES_DEFINE_ERROR(CharacteristicMismatch)
TAMECURVES_DEFINE_ERROR(ZeroPolynomial)
TAMECURVES_DEFINE_ERROR(NotASquare)
TAMECURVES_DEFINE_ERROR(PrecisionExhausted)
TAMECURVES_DEFINE_ERROR(NotSeparating)
TAMECURVES_DEFINE_ERROR(DegenerateGamma)
TAMECURVES_DEFINE_ERROR(NotPseudotame)
TAMECURVES_DEFINE_ERROR(SearchExhausted)
TAMECURVES_DEFINE_ERROR(OddIndexRequired)
TAMECURVES_DEFINE_ERROR(OddCharacteristicOnly)
TAMECURVES_DEFINE_ERROR(DimensionTooSmall)
TAMECURVES_DEFINE_ERROR(InvalidField)
TAMECURVES_DEFINE_ERROR(InvalidCurve)
TAMECURVES_DEFINE_ERROR(ParseError)
TAMECURVES_DEFINE_ERROR(DomainError)
TAMECURVES_DEFINE_ERROR(UsageError)

#undef TAMECURVES_DEFINE_ERROR

}  // namespace tamecurves

#endif  // TAMECURVES_ERRORS_HPP
