#pragma once

#include <stdexcept>
#include <string>

namespace kneser {

// Argument outside the mathematical domain of an operation (e.g. n < 2k).
class DomainError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Input exceeds an encoding or memory capacity (n > 64, vertex cap, oracle cap).
class CapacityError : public std::length_error {
 public:
  using std::length_error::length_error;
};

// Caller broke a documented precondition that is not a domain issue
// (e.g. asking for the non-neighbourhood of a non-edge).
class ContractError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

// Exact integer arithmetic would overflow its result type.
class ArithmeticError : public std::overflow_error {
 public:
  using std::overflow_error::overflow_error;
};

// A bounded scan ran off the end of its range without an answer.
class SearchFailure : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Malformed DIMACS / JSON input.
class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace kneser
