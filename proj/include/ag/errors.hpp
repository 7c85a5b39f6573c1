#pragma once

#include <stdexcept>
#include <string>

namespace ag {

/// Invalid arguments or a violated operation precondition.
class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Request exceeds a configured bound (enumeration order, quantifier budget).
class CapabilityError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed input text. Positions are 1-based; column counts characters.
class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& msg, int line, int column)
      : std::runtime_error("line " + std::to_string(line) + ", column " +
                           std::to_string(column) + ": " + msg),
        line_(line),
        column_(column) {}

  int line() const { return line_; }
  int column() const { return column_; }

 private:
  int line_;
  int column_;
};

}  // namespace ag
