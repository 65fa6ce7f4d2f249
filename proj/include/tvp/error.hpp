#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace tvp {

/// Base of every exception thrown by the core library.
class Error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// Inputs whose vector dimensions disagree.
class DimensionError : public Error {
public:
  using Error::Error;
};

/// Point count does not match what the operation requires (d+2, (d+1)(r-1)+1, ...).
class SizeError : public Error {
public:
  using Error::Error;
};

/// Text that is not an exact rational, or a malformed point/certificate file.
class ParseError : public Error {
public:
  using Error::Error;
};

/// File that cannot be opened, read or written.
class IoError : public Error {
public:
  using Error::Error;
};

/// A color class whose convex hull misses the origin.
class HypothesisError : public Error {
public:
  HypothesisError(std::size_t class_index, const std::string& what)
      : Error(what), class_index_(class_index) {}

  /// Zero-based index of the offending class.
  std::size_t class_index() const noexcept { return class_index_; }

private:
  std::size_t class_index_;
};

/// Violated pre/postcondition; signals a caller or implementation bug.
class ContractError : public Error {
public:
  using Error::Error;
};

/// Brute-force enumeration refused because the search space exceeds the cap.
class CapExceededError : public Error {
public:
  CapExceededError(unsigned long long cap, const std::string& what)
      : Error(what), cap_(cap) {}

  unsigned long long cap() const noexcept { return cap_; }

private:
  unsigned long long cap_;
};

}  // namespace tvp
