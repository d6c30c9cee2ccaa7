#pragma once

#include <stdexcept>
#include <string>

namespace glat {

// Base for all library errors. CLI maps InputError -> exit 2 and
// CheckFailed -> exit 3; everything else is a plain failure.
struct Error : std::runtime_error {
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

// Bad data supplied by the caller (files, flags, mismatched objects).
struct InputError : Error {
  using Error::Error;
};

struct ParseError : InputError {
  using InputError::InputError;
};

// A self-check on a computed result did not hold. Indicates a bug, not
// bad input.
struct CheckFailed : Error {
  using Error::Error;
};

struct NotFinite : Error {
  using Error::Error;
};

struct NotUnimodular : InputError {
  using InputError::InputError;
};

struct NotCommuting : InputError {
  using InputError::InputError;
};

struct NotAbelian : InputError {
  using InputError::InputError;
};

struct NotCyclic : InputError {
  using InputError::InputError;
};

struct NotNormal : InputError {
  using InputError::InputError;
};

struct GroupMismatch : InputError {
  using InputError::InputError;
};

struct SubNotContained : InputError {
  using InputError::InputError;
};

}  // namespace glat
