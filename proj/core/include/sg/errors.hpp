#pragma once

#include <stdexcept>
#include <string>

namespace sg {

/// Malformed or inconsistent input (files, matrices, graphs).
struct InputError : std::runtime_error {
  explicit InputError(const std::string& what) : std::runtime_error(what) {}
};

/// An operation was called outside its stated preconditions.
struct PreconditionError : std::runtime_error {
  explicit PreconditionError(const std::string& what) : std::runtime_error(what) {}
};

/// An iterative numerical routine failed to reach its tolerance.
struct NumericalError : std::runtime_error {
  explicit NumericalError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace sg
