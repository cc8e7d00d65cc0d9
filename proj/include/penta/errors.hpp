#pragma once

#include <stdexcept>
#include <string>

namespace penta {

/// Thrown when fixed-width integer arithmetic would wrap. The message names
/// the operation that overflowed.
class overflow_error : public std::overflow_error {
 public:
  explicit overflow_error(const std::string& op)
      : std::overflow_error("integer overflow in " + op) {}
};

/// An algebraic identity that must hold did not. Indicates a bug, never bad
/// user input.
class internal_error : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

class io_error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed or inconsistent snapshot file contents.
class format_error : public io_error {
 public:
  format_error(std::size_t line, const std::string& what)
      : io_error("line " + std::to_string(line) + ": " + what), line_(line) {}

  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

}  // namespace penta
