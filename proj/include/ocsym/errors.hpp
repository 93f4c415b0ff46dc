#pragma once

#include <stdexcept>
#include <string>

namespace ocsym {

/// Base of every error raised by the engine.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class SyntaxError : public Error {
 public:
  SyntaxError(const std::string& message, int line, int column)
      : Error(format(message, line, column)), line_(line), column_(column) {}

  int line() const { return line_; }
  int column() const { return column_; }

 private:
  static std::string format(const std::string& message, int line, int column) {
    std::string where = line > 0 ? "line " + std::to_string(line) + ", " : "";
    return "syntax error at " + where + "column " + std::to_string(column) + ": " + message;
  }

  int line_;
  int column_;
};

class UnknownIdentifier : public Error {
 public:
  explicit UnknownIdentifier(std::string name, int column = 0)
      : Error("unknown identifier '" + name + "'"), name_(std::move(name)), column_(column) {}
  const std::string& name() const { return name_; }
  int column() const { return column_; }

 private:
  std::string name_;
  int column_;
};

class DimensionMismatch : public Error {
 public:
  using Error::Error;
};

class DivisionByZero : public Error {
 public:
  DivisionByZero() : Error("division by zero") {}
};

class OpaqueDifferentiation : public Error {
 public:
  explicit OpaqueDifferentiation(const std::string& name)
      : Error("cannot differentiate with respect to opaque symbol '" + name + "'") {}
};

class NotPolynomialIn : public Error {
 public:
  using Error::Error;
};

class NonlinearControls : public Error {
 public:
  using Error::Error;
};

class SingularControls : public Error {
 public:
  using Error::Error;
};

class ControlDependent : public Error {
 public:
  using Error::Error;
};

}  // namespace ocsym
