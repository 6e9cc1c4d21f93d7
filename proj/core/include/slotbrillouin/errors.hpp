#pragma once

#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace slotbrillouin {

// Argument outside the physical domain of an operation (negative permittivity,
// zero decay rate, degenerate geometry, ...).
class DomainError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

class NotFoundError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// A requested discretization exceeds the configured cell budget.
class ResourceError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Object used before it reached the required state (e.g. an acoustic mode
// that has not been zero-point normalized).
class StateError : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

class UnsupportedError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class ModelInvalidError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

class ParseError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// A file could not be opened, read or written.
class IoError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class ConvergenceError : public std::runtime_error {
public:
    ConvergenceError(const std::string& what, std::vector<double> residuals)
        : std::runtime_error(what), residuals_(std::move(residuals)) {}

    [[nodiscard]] const std::vector<double>& residuals() const noexcept { return residuals_; }

private:
    std::vector<double> residuals_;
};

}  // namespace slotbrillouin
