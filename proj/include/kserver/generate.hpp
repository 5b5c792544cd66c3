#pragma once

#include <optional>
#include <string>
#include <utility>

#include "kserver/metric.hpp"
#include "kserver/rng.hpp"

namespace kserver {

enum class RequestModel {
  kUniform,           // i.i.d. uniform points
  kRoundRobinKPlus1,  // cycle over k+1 points: A0 plus one outside point
  kGreedyAdversary,   // uncovered point that costs WFA the most right now
};

const char* request_model_name(RequestModel model);
std::optional<RequestModel> parse_request_model(const std::string& name);

inline constexpr std::pair<Cost, Cost> kDefaultWeightRange{1, 9};

struct InstanceShape {
  int n = 0;
  int k = 0;
  std::size_t rho_len = 0;
  RequestModel model = RequestModel::kUniform;
  std::pair<Cost, Cost> weight_range = kDefaultWeightRange;
};

// Draws, in this order from `rng`: the metric (random_metric), A0, and the
// requests. Throws InputError for shapes the model cannot realize.
Instance generate_instance(const InstanceShape& shape, Rng& rng);
Instance generate_instance(const InstanceShape& shape, std::uint64_t seed);

}  // namespace kserver
