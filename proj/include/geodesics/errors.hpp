#pragma once

#include <stdexcept>
#include <string>

namespace geodesics {

/// Base class for every error raised by the library.
class GeometryError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class NotHyperbolic : public GeometryError {
 public:
  using GeometryError::GeometryError;
};

class SharedEndpoint : public GeometryError {
 public:
  using GeometryError::GeometryError;
};

class InvalidPoint : public GeometryError {
 public:
  using GeometryError::GeometryError;
};

class NonPositiveLength : public GeometryError {
 public:
  using GeometryError::GeometryError;
};

class DomainError : public GeometryError {
 public:
  using GeometryError::GeometryError;
};

class BracketFailure : public GeometryError {
 public:
  using GeometryError::GeometryError;
};

class ConstructionFailure : public GeometryError {
 public:
  using GeometryError::GeometryError;
};

class InvalidWord : public GeometryError {
 public:
  using GeometryError::GeometryError;
};

class ChainViolation : public GeometryError {
 public:
  using GeometryError::GeometryError;
};

/// Raised when raising the conjugator cutoff by 2 still changes the count.
class CutoffTooSmall : public GeometryError {
 public:
  CutoffTooSmall(const std::string& what, int cutoff)
      : GeometryError(what), cutoff_(cutoff) {}
  int cutoff() const noexcept { return cutoff_; }

 private:
  int cutoff_;
};

class DegenerateCrossing : public GeometryError {
 public:
  using GeometryError::GeometryError;
};

/// The two independent intersection counts disagreed for a class.
class MethodDisagreement : public GeometryError {
 public:
  using GeometryError::GeometryError;
};

}  // namespace geodesics
