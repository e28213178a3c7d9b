#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace frobforge {

/// Base of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class AmbientMismatch : public Error {
 public:
  using Error::Error;
};

class OverflowError : public Error {
 public:
  using Error::Error;
};

class InhomogeneousInput : public Error {
 public:
  using Error::Error;
};

class InvalidArgument : public Error {
 public:
  using Error::Error;
};

/// A computation hit its degree or pair cap. Callers surface this as an
/// Undecided outcome; it never stands for a mathematical answer.
class BudgetExceeded : public Error {
 public:
  enum class Kind { DegreeCap, PairCap, Iterations, Time };

  BudgetExceeded(Kind kind, std::int64_t limit, const std::string& what)
      : Error(what), kind_(kind), limit_(limit) {}

  Kind kind() const noexcept { return kind_; }
  std::int64_t limit() const noexcept { return limit_; }

 private:
  Kind kind_;
  std::int64_t limit_;
};

/// Raised by chain-map lifting when a required membership fails.
class NoLift : public Error {
 public:
  using Error::Error;
};

class ParseError : public Error {
 public:
  ParseError(const std::string& msg, int line, int column)
      : Error(msg + " at " + std::to_string(line) + ":" +
              std::to_string(column)),
        line_(line),
        column_(column) {}

  int line() const noexcept { return line_; }
  int column() const noexcept { return column_; }

 private:
  int line_;
  int column_;
};

class SchemaMismatch : public Error {
 public:
  using Error::Error;
};

/// A stored certificate failed its re-check.
class DataIntegrityError : public Error {
 public:
  using Error::Error;
};

const char* budget_kind_name(BudgetExceeded::Kind kind) noexcept;

}  // namespace frobforge
