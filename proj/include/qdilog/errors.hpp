#pragma once

#include <stdexcept>
#include <string>

namespace qdilog {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Evaluation point too close to the boundary of the contour-integral strip.
struct MarginViolation : Error {
    using Error::Error;
};

// Quadrature failed to reach the requested error target.
struct NonConvergence : Error {
    using Error::Error;
};

// Strict value requested at a point on the pole lattice.
struct PoleEvaluation : Error {
    using Error::Error;
};

// q-beta ratio with a singular argument pattern that has no finite limit.
struct UnresolvablePole : Error {
    using Error::Error;
};

// Exact division requested where no exact quotient exists.
struct NotDivisible : Error {
    using Error::Error;
};

struct DimensionMismatch : Error {
    using Error::Error;
};

struct InvalidParameter : Error {
    using Error::Error;
};

}  // namespace qdilog
