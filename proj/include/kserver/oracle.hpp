#pragma once

#include <map>
#include <optional>
#include <vector>

#include "kserver/metric.hpp"

namespace kserver {

// Upper bound on k^|requests| schedules the oracle will enumerate.
inline constexpr std::uint64_t kOracleScheduleGuard = 10'000'000;

// Brute-force offline optimum, independent of the work-function DP.
//
// Enumerates every assignment of requests to servers (k^|rho| schedules),
// moving the assigned server onto each request and summing the distances.
// Servers may share a node. Distinct final server multisets are kept with
// their cheapest cost; a target X is then reached by the cheapest
// permutation matching from each of them.
class BruteForceOracle {
 public:
  // Throws GuardExceeded when k^|requests| > guard.
  explicit BruteForceOracle(const Instance& instance,
                            std::uint64_t guard = kOracleScheduleGuard);

  Cost opt() const;
  Cost opt_to(const Configuration& target) const;
  std::size_t schedules() const { return schedules_; }

 private:
  MetricSpace metric_;
  std::map<std::vector<Point>, Cost> finals_;
  std::size_t schedules_ = 0;
};

Cost oracle_opt(const Instance& instance, const std::optional<Configuration>& target = std::nullopt,
                std::uint64_t guard = kOracleScheduleGuard);

// k^len, saturating at UINT64_MAX.
std::uint64_t schedule_count(int k, std::size_t len);

}  // namespace kserver
