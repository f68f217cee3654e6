#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace ilat {

/// Base class for all errors raised by this library.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Malformed or inconsistent input: unparsable files, ground-set
/// mismatches, invalid feature assignments, bad arguments.
struct InvalidInputError : Error {
  using Error::Error;
};

/// An enumeration or closure exceeded a configured size bound.
struct CapacityError : Error {
  CapacityError(const std::string& what, std::size_t partial)
      : Error(what), partial_size(partial) {}

  /// How far the computation got before hitting the bound.
  std::size_t partial_size;
};

/// No solution satisfies the requested constraints.
struct InfeasibleError : Error {
  InfeasibleError(const std::string& what, double residual_value)
      : Error(what), residual(residual_value) {}

  /// Largest remaining constraint violation when the solver gave up.
  double residual;
};

}  // namespace ilat
