#pragma once

#include <stdexcept>
#include <string>

namespace traceideal {

struct Error : std::runtime_error {
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

// Operands live over different ring contexts or field specs.
struct ContextError : Error {
    using Error::Error;
};

// Malformed text input (polynomials, ideals, matrices, catalog files).
struct ParseError : Error {
    using Error::Error;
};

// Parameter outside a family's domain, or an unsupported field request.
struct DomainError : Error {
    using Error::Error;
};

// A construction-time validation failed (bad factorization, z in phi, ...).
struct ValidationError : Error {
    using Error::Error;
};

// Raised when TRACEIDEAL_MAX_DEGREE is set and a basis computation exceeds it.
struct DegreeGuardError : Error {
    using Error::Error;
};

}  // namespace traceideal
