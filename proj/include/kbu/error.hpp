#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace kbu {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Raised when a translation receives a constructor outside its source language.
struct LanguageError : Error {
  using Error::Error;
};

struct TypeError : Error {
  using Error::Error;
};

// Syntax error in the canonical s-expression format. Line and column are 1-based.
struct SyntaxError : Error {
  SyntaxError(const std::string& what, std::size_t line, std::size_t column)
      : Error(std::to_string(line) + ":" + std::to_string(column) + ": " + what),
        line(line),
        column(column) {}
  std::size_t line;
  std::size_t column;
};

// A domain the evaluator would have to materialize exceeds the model's size cap.
struct DomainTooLarge : Error {
  DomainTooLarge(const std::string& type, const std::string& cardinality)
      : Error("domain of type " + type + " has " + cardinality +
              " elements, exceeding the size cap"),
        type(type),
        cardinality(cardinality) {}
  std::string type;
  std::string cardinality;
};

struct ModelError : Error {
  using Error::Error;
};

}  // namespace kbu
