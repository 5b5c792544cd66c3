#include "kserver/rng.hpp"

#include <limits>
#include <stdexcept>

namespace kserver {

std::uint64_t Rng::uniform_below(std::uint64_t bound) {
  if (bound == 0) throw std::invalid_argument("uniform_below: bound must be positive");
  constexpr std::uint64_t kMax = std::numeric_limits<std::uint64_t>::max();
  // 2^64 mod bound, computed without overflow.
  const std::uint64_t rem = (kMax % bound + 1) % bound;
  const std::uint64_t limit = kMax - rem;  // accept x <= limit
  std::uint64_t x;
  do {
    x = engine_();
  } while (rem != 0 && x > limit);
  return x % bound;
}

std::int64_t Rng::uniform_int(std::int64_t lo, std::int64_t hi) {
  if (lo > hi) throw std::invalid_argument("uniform_int: empty range");
  const auto span = static_cast<std::uint64_t>(hi - lo) + 1;
  return lo + static_cast<std::int64_t>(uniform_below(span));
}

}  // namespace kserver
