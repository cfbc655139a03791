#pragma once

#include <stdexcept>
#include <string>

namespace hyperorth {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// (alpha, beta) outside the admissible region of the chosen family.
class ConstraintViolation : public Error {
 public:
  using Error::Error;
};

/// Invalid (l, m) index pair.
class IndexError : public Error {
 public:
  using Error::Error;
};

/// l at or above the cutoff nu of a finite family.
class IndexAboveCutoff : public IndexError {
 public:
  using IndexError::IndexError;
};

/// Evaluation point outside the open interval of definition.
class DomainError : public Error {
 public:
  using Error::Error;
};

/// Quadrature exhausted its refinement levels without meeting tolerance.
class NoConvergence : public Error {
 public:
  using Error::Error;
};

/// Integrand magnitude does not decay at the interval ends.
class NonIntegrable : public Error {
 public:
  using Error::Error;
};

/// Least-squares proportionality fit against an identically vanishing reference.
class DegenerateFit : public Error {
 public:
  using Error::Error;
};

}  // namespace hyperorth
