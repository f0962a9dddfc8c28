#pragma once

#include <stdexcept>
#include <string>

namespace pfbm {

/// Base class for all recoverable errors raised by this library.
/// Internal numeric corruption (NaN in generator space) is reported via
/// std::logic_error instead, since it indicates a bug rather than bad input.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

/// A t-norm family parameter outside the family's validity domain.
class OutOfDomainGamma : public Error {
public:
    OutOfDomainGamma(const std::string& family, double gamma)
        : Error("gamma " + std::to_string(gamma) + " is outside the validity domain of the " +
                family + " family"),
          family_(family),
          gamma_(gamma) {}

    const std::string& family() const { return family_; }
    double gamma() const { return gamma_; }

private:
    std::string family_;
    double gamma_;
};

/// An argument outside the mathematical domain of an operation.
class DomainError : public Error {
public:
    using Error::Error;
};

/// A membership triple that violates the picture-fuzzy-number invariants.
class InvalidPfn : public Error {
public:
    using Error::Error;
};

/// Paired sequences of unequal length.
class LengthMismatch : public Error {
public:
    using Error::Error;
};

/// An operation that requires a nonempty input received an empty one.
class EmptyInput : public Error {
public:
    using Error::Error;
};

/// A Bonferroni-style aggregation over fewer than two elements.
class TooFewElements : public Error {
public:
    using Error::Error;
};

/// A weight equal to 1 where the normalized coefficients divide by 1 - w.
class DegenerateWeight : public Error {
public:
    using Error::Error;
};

/// A weight vector violating positivity or the unit-sum constraint.
class InvalidWeights : public Error {
public:
    using Error::Error;
};

/// A decision problem that cannot be ranked (e.g. fewer than two criteria).
class DegenerateProblem : public Error {
public:
    using Error::Error;
};

/// A malformed problem file; the message carries the offending location.
class ParseError : public Error {
public:
    using Error::Error;
};

}  // namespace pfbm
