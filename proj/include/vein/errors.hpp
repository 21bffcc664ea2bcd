#pragma once

#include <stdexcept>
#include <string>

namespace vein {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Hull of the given vertices is not full-dimensional.
struct DegenerateHull : Error {
    using Error::Error;
};

// Polar requested for a polytope whose interior does not contain the origin.
struct OriginNotInterior : Error {
    using Error::Error;
};

// Point set does not span the ambient space.
struct RankDeficient : Error {
    using Error::Error;
};

// Monte Carlo volume estimate has relative standard error above the cutoff.
struct MonteCarloUnreliable : Error {
    using Error::Error;
};

// A coordinate certificate was requested without a containment guarantee.
struct ContainmentUnverified : Error {
    using Error::Error;
};

// A certificate's defining inequality failed its numeric re-check.
struct InequalityViolated : Error {
    using Error::Error;
};

// Fewer than d+1 vertices cannot enclose a full-dimensional body.
struct InfeasibleVertexCount : Error {
    using Error::Error;
};

}  // namespace vein
