#pragma once

#include <stdexcept>
#include <string>

namespace slicereg {

/// Base of all library errors.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// A construction invariant was violated (bad frame, bad trace length, ...).
/// Maps to "malformed input" at the CLI boundary.
class ValidationError : public Error {
public:
    using Error::Error;
};

/// Vector part too small to define an imaginary unit.
class DegenerateVector : public Error {
public:
    using Error::Error;
};

/// Evaluation point outside the domain ball / disk.
class OutOfDomain : public Error {
public:
    using Error::Error;
};

class PathOutsideDomain : public Error {
public:
    using Error::Error;
};

class EndpointMismatch : public Error {
public:
    using Error::Error;
};

/// Boundary traces disagree in sample count or radius.
class TraceMismatch : public Error {
public:
    using Error::Error;
};

class FrameMismatch : public Error {
public:
    using Error::Error;
};

class DegenerateLeadingCoefficient : public Error {
public:
    using Error::Error;
};

/// Zero data admits no polynomial within tolerance.
class InconsistentData : public Error {
public:
    using Error::Error;
};

class NotPSRB : public Error {
public:
    using Error::Error;
};

/// The derivative is not in PSRB, so the zero-set morphism is undefined.
class NotInPBSRB : public Error {
public:
    using Error::Error;
};

/// Asked for the roots of a component that vanishes identically.
class IdenticallyZeroComponent : public Error {
public:
    explicit IdenticallyZeroComponent(const std::string& which)
        : Error("component zero set is identically zero: " + which), which_(which) {}

    const std::string& which() const { return which_; }

private:
    std::string which_;
};

/// An operation would push the truncation degree past the cap.
class DegreeOverflow : public Error {
public:
    using Error::Error;
};

}  // namespace slicereg
