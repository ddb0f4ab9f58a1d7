#pragma once

#include <chrono>
#include <cstdint>
#include <string>

#include "dimkit/errors.hpp"

namespace dimkit {

/// Bounds for the exact oracles.
struct SearchLimits {
  int max_size = 10;
  std::chrono::milliseconds timeout{60000};
};

inline SearchLimits poset_limits() { return SearchLimits{8, std::chrono::milliseconds{60000}}; }

namespace detail {

class Deadline {
 public:
  Deadline(std::chrono::milliseconds budget, std::string what)
      : end_(std::chrono::steady_clock::now() + budget), what_(std::move(what)) {}

  // Polls the clock on the first call and every 256th after it.
  void check(int best_upper_bound) {
    if ((ticks_++ & 0xff) != 0) return;
    if (std::chrono::steady_clock::now() >= end_)
      throw TimeoutError(what_ + ": timed out; best upper bound " + std::to_string(best_upper_bound),
                         best_upper_bound);
  }

 private:
  std::chrono::steady_clock::time_point end_;
  std::string what_;
  std::uint64_t ticks_ = 0;
};

inline void require_capacity(int size, const SearchLimits& limits, const std::string& what) {
  if (size > limits.max_size)
    throw CapacityError(what + ": size " + std::to_string(size) + " exceeds bound " +
                        std::to_string(limits.max_size));
}

}  // namespace detail
}  // namespace dimkit
