#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace guess {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Malformed DSL text; line and column are 1-based.
struct ParseError : Error {
  ParseError(const std::string& msg, std::size_t line, std::size_t column)
      : Error(std::to_string(line) + ":" + std::to_string(column) + ": " + msg), line(line), column(column) {}
  std::size_t line;
  std::size_t column;
};

// Unknown symbol, arity mismatch, duplicate or reserved name.
struct SignatureError : Error {
  using Error::Error;
};

struct SubstitutionError : Error {
  using Error::Error;
};

// Misuse of an evaluator (quantifier in a quantifier-free context, resource limit).
struct EvalError : Error {
  using Error::Error;
};

// A sentence that does not have the required prenex shape.
struct ShapeError : Error {
  using Error::Error;
};

}  // namespace guess
