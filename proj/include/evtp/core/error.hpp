#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace evtp {

/// Shape or index-range violation (wrong dimensions, j out of range, ...).
class DimensionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Raised by solves and inversions; carries the 0-based elimination step
/// whose pivot fell at or below the singularity threshold.
class SingularMatrixError : public std::runtime_error {
 public:
  SingularMatrixError(std::size_t pivot_index, const std::string& what)
      : std::runtime_error(what), pivot_index_(pivot_index) {}

  std::size_t pivot_index() const noexcept { return pivot_index_; }

 private:
  std::size_t pivot_index_;
};

/// A documented precondition (other than shape) does not hold.
class PreconditionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// An iterative method did not reach its tolerance within its budget.
class ConvergenceError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace evtp
