#pragma once

#include <stdexcept>
#include <string>

namespace symhorn {

// Base of every error thrown by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Shapes or lengths that do not fit together.
class DimensionError : public Error {
public:
    using Error::Error;
};

// Argument outside the mathematical domain of an operation (c < 1, non-positive entry, ...).
class DomainError : public Error {
public:
    using Error::Error;
};

// Matrix expected to be positive definite is not.
class DefinitenessError : public Error {
public:
    using Error::Error;
};

// A majorisation precondition fails. Carries the 1-based partial-sum index of the first violation.
class ConstraintError : public Error {
public:
    ConstraintError(const std::string& what, std::size_t index)
        : Error(what), index_(index) {}

    std::size_t violation_index() const noexcept { return index_; }

private:
    std::size_t index_;
};

// Iteration budget exhausted, residual checks failed, or a structural property
// (eigenvalue pairing, bracketing) broke down in floating point.
class NumericalError : public Error {
public:
    using Error::Error;
};

}  // namespace symhorn
