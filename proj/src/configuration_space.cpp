#include "kserver/configuration_space.hpp"

namespace kserver {

namespace {

void enumerate(int n, int k, int next, std::uint32_t mask, std::vector<std::uint32_t>& out) {
  if (k == 0) {
    out.push_back(mask);
    return;
  }
  for (int p = next; p <= n - k; ++p) enumerate(n, k - 1, p + 1, mask | (1u << p), out);
}

}  // namespace

ConfigurationSpace::ConfigurationSpace(MetricSpace metric, int k)
    : metric_(std::move(metric)), k_(k) {
  const int n = metric_.size();
  if (k < 1 || k > n) {
    throw InputError("k must lie in [1, n]; got k = " + std::to_string(k) +
                     ", n = " + std::to_string(n));
  }
  enumerate(n, k, 0, 0, masks_);
  rank_by_mask_.assign(std::size_t{1} << n, -1);
  for (std::size_t r = 0; r < masks_.size(); ++r) {
    rank_by_mask_[masks_[r]] = static_cast<std::int32_t>(r);
  }
}

std::size_t ConfigurationSpace::rank_of(const Configuration& c) const {
  if (c.size() != k_) {
    throw InputError("configuration " + c.to_string() + " has " + std::to_string(c.size()) +
                     " points, expected " + std::to_string(k_));
  }
  require_in_metric(c, metric_);
  return rank_of_mask(c.mask());
}

}  // namespace kserver
