#pragma once

#include <stdexcept>
#include <string>

namespace fwu {

/// Base class for all errors raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// A bearing was requested between two points closer than the singular
/// separation; the unit direction is undefined there.
class CoincidentPoints : public Error {
public:
    using Error::Error;
};

/// A vector that must have unit norm does not.
class NotUnit : public Error {
public:
    using Error::Error;
};

/// A value that must be finite is NaN or infinite.
class NonFiniteValue : public Error {
public:
    using Error::Error;
};

/// Beacon set violates a structural invariant (size, weights,
/// collinearity, coincident positions).
class InvalidBeaconSet : public Error {
public:
    using Error::Error;
};

/// The common beacon velocity is zero where a nonzero one is required.
class ZeroTargetVelocity : public Error {
public:
    using Error::Error;
};

/// A matrix that must be positive definite is numerically singular.
class NotPositiveDefinite : public Error {
public:
    using Error::Error;
};

/// The reference Fermat-Weber solve did not produce a usable point.
class SolverFailed : public Error {
public:
    using Error::Error;
};

/// A scenario violates one of its invariants.
class InvalidScenario : public Error {
public:
    using Error::Error;
};

} // namespace fwu
