#pragma once

#include <stdexcept>
#include <string>

namespace qprop {

// Base for every error the library raises on a violated precondition.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Argument outside its admissible domain (non-finite angle, bad qubit
// count, non-positive cost or scale, ...).
class DomainError : public Error {
 public:
  using Error::Error;
};

class DimensionError : public Error {
 public:
  using Error::Error;
};

class NonUnitaryError : public Error {
 public:
  using Error::Error;
};

class NotNormalizedError : public Error {
 public:
  using Error::Error;
};

// A point-mass propensity curve was passed where a finite density is needed.
class PointMassError : public Error {
 public:
  using Error::Error;
};

// Density at an evaluation point underflowed (below 1e-300).
class ZeroDensityError : public Error {
 public:
  using Error::Error;
};

}  // namespace qprop
