#pragma once

#include <stdexcept>
#include <string>

namespace tiltq {

// Bad user input or a violated precondition. The CLI maps it to exit code 2.
class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// An internal consistency check failed (two computations that must agree did not).
class EngineError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace tiltq
