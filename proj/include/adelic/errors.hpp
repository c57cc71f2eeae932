#pragma once

#include <stdexcept>
#include <string>

namespace adelic {

// Base class for everything this library throws on purpose.
struct AdelicError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Argument sits on (or too close to) a pole of the requested function.
struct PoleError : AdelicError {
    using AdelicError::AdelicError;
};

// Argument outside the region where the operation is defined.
struct DomainError : AdelicError {
    using AdelicError::AdelicError;
};

// Malformed field description ("Q(sqrt,12)", m = 2 mod 4, ...).
struct InvalidFieldSpec : AdelicError {
    using AdelicError::AdelicError;
};

// A character was required to be primitive and is not.
struct NotPrimitiveError : AdelicError {
    using AdelicError::AdelicError;
};

// Ramified data outside the supported fields (additive rank != 0, K != Q).
struct UnsupportedFieldError : AdelicError {
    using AdelicError::AdelicError;
};

// Local ranks of a character pair/product do not match.
struct RankMismatchError : AdelicError {
    using AdelicError::AdelicError;
};

// No closed-form L-function oracle for the requested (field, character).
struct OracleUnavailable : AdelicError {
    using AdelicError::AdelicError;
};

// Bad command-line or config input.
struct ParseError : AdelicError {
    using AdelicError::AdelicError;
};

}  // namespace adelic
