#pragma once

#include <stdexcept>
#include <string>

namespace dimkit {

// Malformed input or a violated precondition.
class InputError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Instance larger than the configured search bound.
class CapacityError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Search ran past its deadline. Carries the best verified upper bound.
class TimeoutError : public std::runtime_error {
 public:
  TimeoutError(const std::string& what, int best_upper_bound)
      : std::runtime_error(what), best_upper_bound_(best_upper_bound) {}

  int best_upper_bound() const noexcept { return best_upper_bound_; }

 private:
  int best_upper_bound_;
};

// A construction produced something its invariants forbid. Always a bug.
class ConsistencyError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace dimkit
