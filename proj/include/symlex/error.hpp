#ifndef SYMLEX_ERROR_HPP
#define SYMLEX_ERROR_HPP

#include <stdexcept>
#include <string>

namespace symlex {

class Error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// Lexical or syntactic failure with a 1-based source position.
class ParseError : public Error {
public:
  ParseError(std::string msg, int line, int col)
      : Error(msg + " at line " + std::to_string(line) + ", column " +
              std::to_string(col)),
        line_(line), col_(col) {}

  int line() const { return line_; }
  int col() const { return col_; }

private:
  int line_;
  int col_;
};

/// Raised when a value space or cell count exceeds the configured budget.
class BudgetError : public Error {
public:
  using Error::Error;
};

/// Raised for domain kinds the tool deliberately does not support.
class OutOfScopeError : public Error {
public:
  explicit OutOfScopeError(const std::string &kind)
      : Error("out of scope: " + kind + " domains are not supported") {}
};

} // namespace symlex

#endif
