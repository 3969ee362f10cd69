#pragma once

#include <stdexcept>
#include <string>
#include <vector>

namespace grnet {

/// Base class for all errors raised by the library.
class Error : public std::runtime_error {
 public:
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

/// Operands live in different ambient spaces.
class AmbientMismatch : public Error {
 public:
  using Error::Error;
};

/// A linear system X*A = B has no exact solution.
class NoSolution : public Error {
 public:
  using Error::Error;
};

/// Malformed input file.
class ParseError : public Error {
 public:
  using Error::Error;
};

std::string format_vertex(const std::vector<int>& coords);
std::string format_axes(const std::vector<int>& axes);

/// Error tied to a lattice location. `at` is the base vertex of the
/// offending cell (empty when the error is not lattice-local), `axes`
/// the involved coordinate directions.
class LatticeError : public Error {
 public:
  LatticeError(const std::string& detail, std::vector<int> at = {},
               std::vector<int> axes = {});

  const std::string& detail() const { return detail_; }
  const std::vector<int>& at() const { return at_; }
  const std::vector<int>& axes() const { return axes_; }

 private:
  std::string detail_;
  std::vector<int> at_;
  std::vector<int> axes_;
};

class Singular : public LatticeError {
 public:
  using LatticeError::LatticeError;
};

class NotAffine : public LatticeError {
 public:
  using LatticeError::LatticeError;
};

class MissingVertex : public LatticeError {
 public:
  using LatticeError::LatticeError;
};

class MissingEdge : public LatticeError {
 public:
  using LatticeError::LatticeError;
};

/// A stored field value required by an operation is absent.
class MissingValue : public LatticeError {
 public:
  using LatticeError::LatticeError;
};

class DegenerateInput : public LatticeError {
 public:
  using LatticeError::LatticeError;
};

class DegenerateIntersection : public LatticeError {
 public:
  using LatticeError::LatticeError;
};

class UnderDetermined : public LatticeError {
 public:
  using LatticeError::LatticeError;
};

class Inconsistent : public LatticeError {
 public:
  using LatticeError::LatticeError;
};

class NotClosed : public LatticeError {
 public:
  using LatticeError::LatticeError;
};

class SingularDenominator : public LatticeError {
 public:
  using LatticeError::LatticeError;
};

class DegenerateSlice : public LatticeError {
 public:
  using LatticeError::LatticeError;
};

}  // namespace grnet
