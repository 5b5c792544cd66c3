#include "kserver/oracle.hpp"

#include <algorithm>
#include <limits>

namespace kserver {

std::uint64_t schedule_count(int k, std::size_t len) {
  std::uint64_t total = 1;
  for (std::size_t i = 0; i < len; ++i) {
    if (total > std::numeric_limits<std::uint64_t>::max() / static_cast<std::uint64_t>(k)) {
      return std::numeric_limits<std::uint64_t>::max();
    }
    total *= static_cast<std::uint64_t>(k);
  }
  return total;
}

namespace {

// Cheapest way to move servers at `from` (a multiset) onto the set `to`,
// by trying every permutation.
Cost permutation_distance(std::vector<Point> from, const std::vector<Point>& to,
                          const MetricSpace& metric) {
  std::sort(from.begin(), from.end());
  Cost best = std::numeric_limits<Cost>::max();
  do {
    Cost total = 0;
    for (std::size_t i = 0; i < from.size(); ++i) total += metric(from[i], to[i]);
    best = std::min(best, total);
  } while (std::next_permutation(from.begin(), from.end()));
  return best;
}

struct Enumerator {
  const MetricSpace& metric;
  const std::vector<Point>& requests;
  std::map<std::vector<Point>, Cost>& finals;
  std::size_t leaves = 0;

  void run(std::vector<Point>& servers, std::size_t t, Cost cost) {
    if (t == requests.size()) {
      ++leaves;
      std::vector<Point> key = servers;
      std::sort(key.begin(), key.end());
      auto [it, inserted] = finals.emplace(std::move(key), cost);
      if (!inserted) it->second = std::min(it->second, cost);
      return;
    }
    const Point r = requests[t];
    for (auto& s : servers) {
      const Point was = s;
      s = r;
      run(servers, t + 1, cost + metric(was, r));
      s = was;
    }
  }
};

}  // namespace

BruteForceOracle::BruteForceOracle(const Instance& instance, std::uint64_t guard)
    : metric_(instance.metric) {
  instance.validate();
  const std::uint64_t count = schedule_count(instance.k, instance.requests.size());
  if (count > guard) {
    throw GuardExceeded("oracle refuses " + std::to_string(instance.k) + "^" +
                        std::to_string(instance.requests.size()) +
                        " schedules (guard " + std::to_string(guard) + ")");
  }
  std::vector<Point> servers(instance.initial.begin(), instance.initial.end());
  Enumerator e{metric_, instance.requests, finals_};
  e.run(servers, 0, 0);
  schedules_ = e.leaves;
}

Cost BruteForceOracle::opt() const {
  Cost best = std::numeric_limits<Cost>::max();
  for (const auto& [positions, cost] : finals_) best = std::min(best, cost);
  return best;
}

Cost BruteForceOracle::opt_to(const Configuration& target) const {
  const std::vector<Point> to(target.begin(), target.end());
  if (!finals_.empty() && finals_.begin()->first.size() != to.size()) {
    throw InputError("target configuration has the wrong number of points");
  }
  for (Point p : to) {
    if (!metric_.contains(p)) throw InputError("target point outside metric");
  }
  Cost best = std::numeric_limits<Cost>::max();
  for (const auto& [positions, cost] : finals_) {
    if (cost >= best) continue;
    best = std::min(best, cost + permutation_distance(positions, to, metric_));
  }
  return best;
}

Cost oracle_opt(const Instance& instance, const std::optional<Configuration>& target,
                std::uint64_t guard) {
  const BruteForceOracle oracle(instance, guard);
  return target ? oracle.opt_to(*target) : oracle.opt();
}

}  // namespace kserver
