#pragma once

#include <stdexcept>
#include <string>

namespace hnzz {

// Caller supplied something outside an operation's contract.
class InvalidArgument : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// A brute-force enumeration was asked to run beyond its configured limits.
class GuardExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Input text is not well-formed JSON or lacks required keys.
class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// An invariant that the mathematics guarantees did not hold.
class InternalError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace hnzz
