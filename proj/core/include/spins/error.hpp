#pragma once

#include <stdexcept>

namespace spins {

/// Base class for every error raised by this library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Inversion was requested at (or numerically on top of) the sphere center,
/// where the map is undefined.
class CenterCoincidenceError : public Error {
public:
    using Error::Error;
};

/// A chain state sits on the domain boundary, where no proposal sphere can
/// be anchored.
class BoundaryPointError : public Error {
public:
    using Error::Error;
};

/// Restoring a dropped simplex component would produce a negative weight.
class InvalidProjectionError : public Error {
public:
    using Error::Error;
};

/// An input sits at a degenerate parameter value (component exactly 0 or 1,
/// zero denominator, and the like).
class DegenerateStateError : public Error {
public:
    using Error::Error;
};

/// The target log density is -inf at a point that must be a valid chain state.
class NonFiniteTargetError : public Error {
public:
    using Error::Error;
};

/// A scale matrix that must be symmetric positive definite is not.
class NonSpdScaleError : public Error {
public:
    using Error::Error;
};

/// A configuration file failed validation.
class ValidationError : public Error {
public:
    using Error::Error;
};

}  // namespace spins
