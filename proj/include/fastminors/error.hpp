#pragma once

#include <cstdint>
#include <random>
#include <stdexcept>
#include <string>

namespace fastminors {

/// Random source used everywhere a heuristic needs randomness.  Never shared
/// between workers; callers seed one per loop.
using Rng = std::mt19937_64;

enum class ErrorKind {
  InvalidInput,
  Parse,
  SelectionFailed,
  BudgetExceeded,
  UnsupportedField,
};

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what) : std::runtime_error(what), kind_(kind) {}
  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

class InvalidInput : public Error {
 public:
  explicit InvalidInput(const std::string& what) : Error(ErrorKind::InvalidInput, what) {}
};

class ParseError : public Error {
 public:
  ParseError(const std::string& what, std::size_t position)
      : Error(ErrorKind::Parse, what + " at position " + std::to_string(position)),
        position_(position) {}
  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

class SelectionFailed : public Error {
 public:
  explicit SelectionFailed(const std::string& what) : Error(ErrorKind::SelectionFailed, what) {}
};

class BudgetExceeded : public Error {
 public:
  explicit BudgetExceeded(const std::string& what) : Error(ErrorKind::BudgetExceeded, what) {}
};

class UnsupportedField : public Error {
 public:
  explicit UnsupportedField(const std::string& what) : Error(ErrorKind::UnsupportedField, what) {}
};

}  // namespace fastminors
