#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace kserver {

using Point = int;
using Cost = std::int64_t;

// Invalid input: malformed matrix, out-of-range point, mismatched k, ...
class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// The brute-force oracle refuses instances whose schedule count exceeds its guard.
class GuardExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace kserver
