#pragma once

#include <stdexcept>
#include <string>

namespace crc {

/// Failure categories. Each maps onto one CLI exit code.
enum class ErrorKind {
  input,             // malformed input or violated precondition
  unsupported,       // operation unavailable for this alphabet or shape
  capacity,          // would materialize more vertices than allowed
  theorem_violation  // a checked theorem failed: necessarily a bug somewhere
};

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what) : std::runtime_error(what), kind_(kind) {}
  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

class InputError : public Error {
 public:
  explicit InputError(const std::string& what) : Error(ErrorKind::input, what) {}
};

class UnsupportedOperation : public Error {
 public:
  explicit UnsupportedOperation(const std::string& what) : Error(ErrorKind::unsupported, what) {}
};

class CapacityError : public Error {
 public:
  explicit CapacityError(const std::string& what) : Error(ErrorKind::capacity, what) {}
};

class TheoremViolation : public Error {
 public:
  explicit TheoremViolation(const std::string& what) : Error(ErrorKind::theorem_violation, what) {}
};

const char* to_string(ErrorKind kind) noexcept;

}  // namespace crc
