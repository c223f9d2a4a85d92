#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace lozimax {

/// Base class for every error raised by the library. `kind()` is a stable
/// identifier used in machine-readable error records.
class Error : public std::runtime_error {
 public:
  Error(std::string kind, const std::string& what)
      : std::runtime_error(what), kind_(std::move(kind)) {}
  const std::string& kind() const noexcept { return kind_; }

 private:
  std::string kind_;
};

/// A state lies outside the domain of a map (e.g. non-positive input to a
/// max-type equation).
class DomainError : public Error {
 public:
  explicit DomainError(const std::string& what) : Error("DomainError", what) {}
};

class InvalidParameters : public Error {
 public:
  explicit InvalidParameters(const std::string& what)
      : Error("InvalidParameters", what) {}
};

/// The sign condition between the base A and alpha/q fails.
class IncompatibleChange : public Error {
 public:
  explicit IncompatibleChange(const std::string& what)
      : Error("IncompatibleChange", what) {}
};

/// Jacobian requested on the switching line y = 0.
class NonSmooth : public Error {
 public:
  explicit NonSmooth(const std::string& what) : Error("NonSmooth", what) {}
};

class Diverged : public Error {
 public:
  Diverged(const std::string& what, std::size_t step)
      : Error("Diverged", what), step_(step) {}
  std::size_t step() const noexcept { return step_; }

 private:
  std::size_t step_;
};

class DegenerateParameters : public Error {
 public:
  explicit DegenerateParameters(const std::string& what)
      : Error("DegenerateParameters", what) {}
};

/// Square index is not on the boundary frame of any level.
class OutOfFrame : public Error {
 public:
  explicit OutOfFrame(const std::string& what) : Error("OutOfFrame", what) {}
};

class ParseError : public Error {
 public:
  explicit ParseError(const std::string& what) : Error("ParseError", what) {}
};

}  // namespace lozimax
