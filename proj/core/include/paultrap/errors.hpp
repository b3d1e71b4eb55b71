#pragma once

#include <stdexcept>

namespace paultrap {

/// Thrown when an input lies outside the physical or numerical domain.
class DomainError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Thrown when an iterative method exhausts its budget without converging.
class ConvergenceError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

}  // namespace paultrap
