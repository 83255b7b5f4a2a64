#pragma once

#include <stdexcept>
#include <string>

namespace isodeform {

// Error taxonomy shared across the library. Every failure path throws one of
// these; the CLI maps any of them to exit code 2.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Preconditions on caller-supplied arguments (empty grids, out-of-range radii).
class ArgumentError : public Error {
public:
    using Error::Error;
};

// A profile or map produced a non-finite value; carries the offending radius.
class EvaluationError : public Error {
public:
    EvaluationError(const std::string& what, double radius)
        : Error(what), radius_(radius) {}
    double radius() const { return radius_; }

private:
    double radius_;
};

// The radial integral does not converge for this profile.
class DivergenceError : public Error {
public:
    DivergenceError(const std::string& what, double radius)
        : Error(what), radius_(radius) {}
    double radius() const { return radius_; }

private:
    double radius_;
};

// gh - f^2 fell below the admissible band.
class DomainError : public Error {
public:
    using Error::Error;
};

// Analytic partials requested but the map carries none.
class CapabilityError : public Error {
public:
    using Error::Error;
};

// sqrt(g) = 0 or R = 0 where a division by them is required.
class DegenerateInputError : public Error {
public:
    using Error::Error;
};

// Map is not orientation-consistent (sign of the angular derivative flips).
class ClassificationError : public Error {
public:
    using Error::Error;
};

// Unknown registry names, malformed configs, rank-deficient designs.
class ConfigError : public Error {
public:
    using Error::Error;
};

// File parse/write failures.
class IoError : public Error {
public:
    using Error::Error;
};

} // namespace isodeform
