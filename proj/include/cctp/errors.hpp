#pragma once

#include <stdexcept>
#include <string>

namespace cctp {

// Base class for everything the library throws.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Malformed inputs, broken invariants in user-supplied data.
struct ValidationError : Error {
    using Error::Error;
};

// Input exceeds a documented solver limit (exact DP sizes).
struct SizeError : Error {
    using Error::Error;
};

// An algorithm broke the online information contract, e.g. tried to
// traverse a blocked or unrevealed edge. Always an implementation bug.
struct ContractViolation : Error {
    using Error::Error;
};

// Reached a state that is impossible on a valid scenario.
struct InconsistencyError : Error {
    using Error::Error;
};

// Rejection sampling could not produce a feasible random scenario.
struct GenerationError : Error {
    using Error::Error;
};

}  // namespace cctp
