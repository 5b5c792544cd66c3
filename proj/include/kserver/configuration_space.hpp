#pragma once

#include <cstdint>
#include <memory>
#include <vector>

#include "kserver/metric.hpp"

namespace kserver {

// All k-configurations of a metric, indexed by lexicographic rank of their
// sorted point lists: {0,1,..,k-1} has rank 0.
class ConfigurationSpace {
 public:
  ConfigurationSpace(MetricSpace metric, int k);

  static std::shared_ptr<const ConfigurationSpace> make(MetricSpace metric, int k) {
    return std::make_shared<const ConfigurationSpace>(std::move(metric), k);
  }

  const MetricSpace& metric() const { return metric_; }
  int k() const { return k_; }
  std::size_t size() const { return masks_.size(); }

  std::uint32_t mask_at(std::size_t rank) const { return masks_[rank]; }
  Configuration at(std::size_t rank) const { return Configuration::from_mask(masks_[rank]); }

  // Rank of the configuration with the given membership mask; the mask
  // must have exactly k bits inside [0, n).
  std::size_t rank_of_mask(std::uint32_t mask) const {
    return static_cast<std::size_t>(rank_by_mask_[mask]);
  }
  std::size_t rank_of(const Configuration& c) const;

  bool operator==(const ConfigurationSpace& other) const {
    return k_ == other.k_ && metric_ == other.metric_;
  }

 private:
  MetricSpace metric_;
  int k_;
  std::vector<std::uint32_t> masks_;
  std::vector<std::int32_t> rank_by_mask_;
};

}  // namespace kserver
