#pragma once

#include <stdexcept>
#include <string>

namespace outer {

/// Precondition and input failures.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Raised when an algorithm fails a self-check that should hold on valid input.
class InternalError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace outer
