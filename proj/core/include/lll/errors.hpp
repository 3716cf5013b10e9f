#pragma once

#include <stdexcept>
#include <string>

namespace lll {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Argument outside the domain of an operation (e.g. x on the polytope boundary).
class DomainError : public Error {
 public:
  using Error::Error;
};

/// Adaptive quadrature ran out of subdivisions before meeting its tolerance.
class NonConvergence : public Error {
 public:
  using Error::Error;
};

/// Polynomial expansion would exceed the configured term budget.
class SizeError : public Error {
 public:
  using Error::Error;
};

/// A requested abscissa is not present on a density grid.
class GridError : public Error {
 public:
  using Error::Error;
};

/// An orbital level is not occupied by any Slater index of an expansion.
class EmptySupport : public Error {
 public:
  using Error::Error;
};

class IoError : public Error {
 public:
  using Error::Error;
};

}  // namespace lll
