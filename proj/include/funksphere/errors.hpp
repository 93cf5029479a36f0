#pragma once

#include <stdexcept>

namespace funksphere {

/// Sizes or band limits of two operands disagree.
class BandLimitMismatch : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Input carries mass on channels an operator annihilates.
class KernelViolation : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A multiplier needed for an inversion is numerically zero.
class IllPosed : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace funksphere

namespace funksphere {

/// A coefficient, grid or config file does not parse.
class FormatError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace funksphere
