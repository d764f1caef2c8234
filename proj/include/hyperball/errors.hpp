#pragma once

#include <stdexcept>
#include <string>

namespace hyperball {

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Malformed argument: zero vector, non-finite value, bad tolerance.
class InvalidInput : public Error {
public:
    using Error::Error;
};

/// Argument outside the mathematical domain of the operation.
class DomainError : public Error {
public:
    using Error::Error;
};

/// The principal vertex is not outer (p <= 6), so there is no polar truncation.
class NotTruncatable : public DomainError {
public:
    using DomainError::DomainError;
};

/// Computation failed to produce a trustworthy number.
class NumericalFailure : public Error {
public:
    using Error::Error;
};

class SingularMatrix : public NumericalFailure {
public:
    SingularMatrix(const std::string& what, double det)
        : NumericalFailure(what), det_(det) {}

    [[nodiscard]] double det() const noexcept { return det_; }

private:
    double det_;
};

class DegenerateTriangle : public NumericalFailure {
public:
    using NumericalFailure::NumericalFailure;
};

/// Iterative search exhausted its budget; carries the last bracket.
class ConvergenceFailure : public NumericalFailure {
public:
    ConvergenceFailure(const std::string& what, double lo, double hi)
        : NumericalFailure(what), lo_(lo), hi_(hi) {}

    [[nodiscard]] double lo() const noexcept { return lo_; }
    [[nodiscard]] double hi() const noexcept { return hi_; }

private:
    double lo_;
    double hi_;
};

}  // namespace hyperball
