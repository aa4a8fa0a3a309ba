#pragma once

#include <stdexcept>

namespace coopcolor {

// Malformed data: broken type invariants, mismatched sizes, bad documents.
struct ValidationError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Out-of-range parameters to a generator, solver, or guard.
struct ParameterError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Instance shape the algorithms deliberately refuse (e.g. a chain system
// with two 2-edges).
struct UnsupportedInstanceError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Broken internal assumption. Indicates a bug, never expected on valid input.
struct InvariantError : std::logic_error {
    using std::logic_error::logic_error;
};

}  // namespace coopcolor
