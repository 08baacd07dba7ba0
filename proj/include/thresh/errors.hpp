#pragma once

#include <stdexcept>
#include <string>

namespace thresh {

/// Malformed textual input (creation sequences, integer lists, polynomial text).
class ParseError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Argument outside the operation's domain (bad vertex, length mismatch, ...).
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// A dense oracle was asked for a matrix larger than the configured cap.
class CapExceeded : public std::length_error {
 public:
  using std::length_error::length_error;
};

/// An exactness check inside an algorithm failed. Always a bug.
class ArithmeticInvariantError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace thresh
