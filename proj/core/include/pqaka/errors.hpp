#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace pqaka {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A value violates the length or shape invariants of its type.
class EncodingError : public Error {
 public:
  using Error::Error;
};

/// Malformed bytes on the wire. `offset` is where decoding stopped.
class ParseError : public Error {
 public:
  ParseError(const std::string& what, std::size_t offset)
      : Error(what + " at offset " + std::to_string(offset)), offset_(offset) {}

  std::size_t offset() const noexcept { return offset_; }

 private:
  std::size_t offset_;
};

/// Caller contract violation (empty input list, missing configuration).
class UsageError : public Error {
 public:
  using Error::Error;
};

/// Requested KEM backend is not compiled in or failed at runtime.
class SuiteUnavailable : public Error {
 public:
  using Error::Error;
};

/// An attacker action outside the threat model (e.g. tapping the core
/// network channel).
class ThreatModelViolation : public Error {
 public:
  using Error::Error;
};

}  // namespace pqaka
