#pragma once

#include <stdexcept>
#include <string>

namespace momentpoly {

// Caller handed an operation something that violates its documented precondition.
struct InvalidInput : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Geometry outside the supported range: affine rank > 3 or ambient dimension > 4.
struct UnsupportedRank : InvalidInput {
    using InvalidInput::InvalidInput;
};

// Malformed text: unreadable rational, bad JSON shape, unknown field values.
struct ParseError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Model data is readable but contradicts itself where an operation needs consistency
// (missing deformation hit, broken target reference, empty fixed point set).
struct ModelInconsistency : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// An iterative procedure exceeded its certified bound (reflection group closure,
// Jacobi sweeps). Indicates input outside the intended class, not a transient failure.
struct IterationLimit : std::runtime_error {
    using std::runtime_error::runtime_error;
};

} // namespace momentpoly
