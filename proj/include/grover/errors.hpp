#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace grover {

// Register size or dimension mismatch between a state and a problem.
class SizeError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Argument outside the mathematical domain of a formula (M > N, N not a power of two, ...).
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

// theta is undefined when there is nothing to find (M = 0).
class UndefinedAngleError : public DomainError {
 public:
  using DomainError::DomainError;
};

// 1/sin(2 theta) diverges at M = N.
class DivergenceError : public DomainError {
 public:
  using DomainError::DomainError;
};

// Formula requested outside the range where it is a valid model (M > 3N/4).
class ValidityError : public DomainError {
 public:
  using DomainError::DomainError;
};

// Invalid oracle or configuration value.
class ConstructionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class ParseError : public std::runtime_error {
 public:
  ParseError(std::size_t line, const std::string& what)
      : std::runtime_error("line " + std::to_string(line) + ": " + what), line_(line) {}

  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

}  // namespace grover
