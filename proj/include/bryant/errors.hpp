#pragma once

#include <stdexcept>
#include <string>

namespace bryant {

// Common base so callers can catch library failures in one clause.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// interval arithmetic
struct InvalidInterval : Error { using Error::Error; };
struct DivisionByZeroInterval : Error { using Error::Error; };
struct OutOfRange : Error { using Error::Error; };

// square root branch selection on boxes
struct BranchAmbiguity : Error { using Error::Error; };

// surface domain
struct BranchPointHit : Error { using Error::Error; };
struct SubdivisionLimitExceeded : Error { using Error::Error; };

// integration / bound formulas
struct PreconditionViolation : Error { using Error::Error; };

// period quotients
struct DegenerateDenominator : Error { using Error::Error; };

// certification requests
struct InvalidRange : Error { using Error::Error; };

// mesh generation
struct NonUnimodular : Error { using Error::Error; };
struct GridSingularity : Error { using Error::Error; };

}  // namespace bryant
