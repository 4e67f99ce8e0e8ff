#pragma once

#include <stdexcept>
#include <string>

namespace pj {

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Non-finite input or an argument outside the documented domain.
class InvalidArgument : public Error {
public:
    using Error::Error;
};

/// A recurrence or structure denominator vanishes. `factor()` names it.
class DegenerateParams : public Error {
public:
    explicit DegenerateParams(std::string factor)
        : Error("degenerate parameters: " + factor + " vanishes"), factor_(std::move(factor)) {}

    const std::string& factor() const noexcept { return factor_; }

private:
    std::string factor_;
};

class GammaPole : public Error {
public:
    using Error::Error;
};

/// Operation requires Re(alpha) > -1 and Re(beta) > -1.
class RegimeError : public Error {
public:
    using Error::Error;
};

class CapacityExceeded : public Error {
public:
    using Error::Error;
};

class DegreeZero : public Error {
public:
    using Error::Error;
};

class PreconditionFailed : public Error {
public:
    using Error::Error;
};

/// Point lies on [-1, 1] where both branches of z + sqrt(z^2 - 1) have modulus 1.
class BranchAmbiguity : public Error {
public:
    using Error::Error;
};

}  // namespace pj
