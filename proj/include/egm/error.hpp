#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>

namespace egm {

/// Malformed or out-of-contract arguments (bad vertex ids, invalid partitions, ...).
class InputError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Argument outside a function's mathematical domain, e.g. phi(x) for x < -1.
class DomainError : public InputError {
 public:
  using InputError::InputError;
};

/// A structural precondition that a well-behaved caller guarantees was violated.
class StructuralError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

/// The request is well-formed but exceeds a configured size or node budget.
/// When a search ran out of budget the best bounds found are attached.
class CapabilityError : public std::runtime_error {
 public:
  explicit CapabilityError(const std::string& what) : std::runtime_error(what) {}
  CapabilityError(const std::string& what, std::int64_t lower, std::int64_t upper)
      : std::runtime_error(what), lower_(lower), upper_(upper) {}

  std::optional<std::int64_t> lower() const { return lower_; }
  std::optional<std::int64_t> upper() const { return upper_; }

 private:
  std::optional<std::int64_t> lower_;
  std::optional<std::int64_t> upper_;
};

}  // namespace egm
