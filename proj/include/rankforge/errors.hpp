#pragma once

#include <stdexcept>
#include <string>

namespace rankforge {

// Errors caused by inputs or usage.
struct DimensionError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct FormatError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct InvalidArgument : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct ResourceLimitError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct NotFound : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Violations of facts the algorithms rely on. Seeing one of these is a bug,
// not a property of the input.
struct InvariantViolation : std::logic_error {
    using std::logic_error::logic_error;
};

struct AcyclicityViolation : InvariantViolation {
    using InvariantViolation::InvariantViolation;
};

struct MultipleDisjointBases : InvariantViolation {
    using InvariantViolation::InvariantViolation;
};

struct SpanningBaseViolation : InvariantViolation {
    using InvariantViolation::InvariantViolation;
};

}  // namespace rankforge
