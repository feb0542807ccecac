#pragma once

#include <stdexcept>
#include <string>

namespace polyvf {

/// Shapes of operands do not agree (non-square determinant, mixed n, ...).
class DimensionMismatch : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A computation would exceed a configured size or degree bound.
class ResourceError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A bounded search ran out of candidates.
class SearchFailure : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Not enough data to reach a conclusion (e.g. a fit that never stabilizes).
class Inconclusive : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// An input that is required to pass a check (spanning, dominance, ...) failed it.
class VerificationError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace polyvf
