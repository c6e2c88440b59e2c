#pragma once

#include <stdexcept>
#include <string>

namespace w49 {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// series layer
struct NonUnitConstantTerm : Error { using Error::Error; };
struct InsufficientOrder : Error { using Error::Error; };

// q-product layer
struct InvalidDissectionIndex : Error { using Error::Error; };

// partition layer
struct InsufficientData : Error { using Error::Error; };

// symbolic layer
struct NonMonomialInverse : Error { using Error::Error; };
struct IndexOutOfRange : Error { using Error::Error; };
struct DimensionMismatch : Error { using Error::Error; };

// witness layer
struct SchemaError : Error { using Error::Error; };
struct ParseError : Error { using Error::Error; };
struct PipelineMismatch : Error { using Error::Error; };
struct ScheduleMismatch : Error { using Error::Error; };

// cli layer
struct UnknownIdentity : Error { using Error::Error; };

}  // namespace w49
