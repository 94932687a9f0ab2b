// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <stdexcept>
#include <string>

namespace umbral {

/// Base of every error raised by the engine. All errors are precondition or
/// domain violations; none of them is recoverable by retrying.
class MathError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

#define UMBRAL_DEFINE_ERROR(Name)                                             \
    class Name : public MathError {                                           \
    public:                                                                   \
        explicit Name(const std::string& what) : MathError(#Name ": " + what) \
        {                                                                     \
        }                                                                     \
    }

UMBRAL_DEFINE_ERROR(DivisionByZero);
UMBRAL_DEFINE_ERROR(ParseError);
UMBRAL_DEFINE_ERROR(PoleAtEvaluationPoint);
UMBRAL_DEFINE_ERROR(TruncationMismatch);
UMBRAL_DEFINE_ERROR(TruncationTooLow);
UMBRAL_DEFINE_ERROR(NotInvertible);
UMBRAL_DEFINE_ERROR(NotCompositionallyInvertible);
UMBRAL_DEFINE_ERROR(CompositionOrderError);
UMBRAL_DEFINE_ERROR(DomainError);
UMBRAL_DEFINE_ERROR(NotDivisibleByX);
UMBRAL_DEFINE_ERROR(NotDivisibleByT);
UMBRAL_DEFINE_ERROR(IndexOutOfRange);
UMBRAL_DEFINE_ERROR(InvalidOrder);
UMBRAL_DEFINE_ERROR(NonPolynomialCoefficient);
UMBRAL_DEFINE_ERROR(UnknownIdentity);

#undef UMBRAL_DEFINE_ERROR

} // namespace umbral
