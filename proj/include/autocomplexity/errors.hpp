#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace autocomplexity {

// Precondition violations (length mismatch, bad alphabet, ...) are reported
// with std::invalid_argument. The classes below cover the remaining failure
// modes that callers are expected to distinguish.

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class ParseError : public Error {
 public:
  ParseError(const std::string& what, std::size_t position)
      : Error(what + " (at offset " + std::to_string(position) + ")"),
        position_(position) {}
  /// Structural errors that have a path but no byte offset.
  explicit ParseError(const std::string& what)
      : Error(what), position_(static_cast<std::size_t>(-1)) {}

  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

/// A search ran out of node budget. `lower_bound()` is the largest state
/// count proven necessary before giving up.
class BudgetExceeded : public Error {
 public:
  BudgetExceeded(const std::string& what, std::size_t lower_bound)
      : Error(what + " (proven lower bound " + std::to_string(lower_bound) + ")"),
        lower_bound_(lower_bound) {}

  std::size_t lower_bound() const noexcept { return lower_bound_; }

 private:
  std::size_t lower_bound_;
};

class CapacityError : public Error {
 public:
  using Error::Error;
};

}  // namespace autocomplexity
