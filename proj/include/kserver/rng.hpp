#pragma once

#include <cstdint>
#include <random>

namespace kserver {

// Seeded generator used for every random choice in the project.
//
// The engine is std::mt19937_64, whose output sequence is fixed by the C++
// standard. Bounded draws do not go through std::uniform_int_distribution
// (its algorithm is implementation-defined); uniform_below() uses plain
// rejection sampling on the raw 64-bit output:
//
//   limit = 2^64 - (2^64 mod bound)
//   repeat x = next() until x < limit; return x mod bound
//
// so the same seed yields the same values on every conforming toolchain.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t next() { return engine_(); }

  // Uniform in [0, bound). bound must be positive.
  std::uint64_t uniform_below(std::uint64_t bound);

  // Uniform in [lo, hi] (inclusive). Requires lo <= hi.
  std::int64_t uniform_int(std::int64_t lo, std::int64_t hi);

 private:
  std::mt19937_64 engine_;
};

}  // namespace kserver
