#pragma once

#include <stdexcept>
#include <string>

namespace alf {

/// Base class for every error raised by the library. Carries an optional
/// location (a JSON-pointer style path into the pair description that was
/// being processed when the error occurred).
class Error : public std::runtime_error {
 public:
  explicit Error(const std::string& message, std::string location = {})
      : std::runtime_error(message), location_(std::move(location)) {}

  const std::string& location() const noexcept { return location_; }
  void set_location(std::string location) { location_ = std::move(location); }

  /// Short machine-readable category, used in reports.
  virtual const char* kind() const noexcept { return "error"; }

 private:
  std::string location_;
};

/// Malformed pair description. When a well-formed document describes an
/// impossible construction, cause() names the underlying error kind.
class ParseError : public Error {
 public:
  using Error::Error;
  ParseError(const std::string& message, std::string location, std::string cause)
      : Error(message, std::move(location)), cause_(std::move(cause)) {}
  const char* kind() const noexcept override { return "parse_error"; }
  const std::string& cause() const noexcept { return cause_; }

 private:
  std::string cause_;
};

class UnknownCurve : public Error {
 public:
  using Error::Error;
  const char* kind() const noexcept override { return "unknown_curve"; }
};

/// A blow-up or declaration would break the simple-normal-crossings
/// combinatorics (three curves through a point, a negative intersection
/// between distinct curves, ...).
class SncViolation : public Error {
 public:
  using Error::Error;
  const char* kind() const noexcept override { return "snc_violation"; }
};

class DimensionMismatch : public Error {
 public:
  using Error::Error;
  const char* kind() const noexcept override { return "dimension_mismatch"; }
};

class PreconditionError : public Error {
 public:
  using Error::Error;
  const char* kind() const noexcept override { return "precondition"; }
};

/// The tracked curves do not certifiably generate the Mori cone, so no
/// sound ampleness region can be computed.
class IncompleteMoriData : public Error {
 public:
  using Error::Error;
  const char* kind() const noexcept override { return "incomplete_mori_data"; }
};

}  // namespace alf
