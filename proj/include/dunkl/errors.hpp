#pragma once

#include <stdexcept>
#include <string>

namespace dunkl {

/// Argument outside the documented range of an operation.
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Operator evaluated too close to a reflection-singular locus (x = 0 or y = 0).
class SingularPointError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// No bound lower component exists for the requested upper radial index.
class InvalidPairError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// The energy radicand is negative: the parameter combination is unphysical.
class NegativeRadicandError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Operation requested in a frequency regime where it is not defined.
class RegimeError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace dunkl
