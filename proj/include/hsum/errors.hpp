#pragma once

#include <stdexcept>
#include <string>

namespace hsum {

// Argument outside the mathematical domain of an operation.
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

// Requested degree exceeds what the grid can resolve.
class AliasingError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class RangeError : public std::out_of_range {
 public:
  using std::out_of_range::out_of_range;
};

// Inputs that must share one grid do not.
class ShapeError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Exact arithmetic would exceed the configured representation budget.
class CapacityError : public std::length_error {
 public:
  using std::length_error::length_error;
};

}  // namespace hsum
