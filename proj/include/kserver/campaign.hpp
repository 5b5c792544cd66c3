#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "kserver/generate.hpp"
#include "kserver/harness.hpp"

namespace kserver {

template <typename T>
struct Range {
  T lo{};
  T hi{};
};

struct CampaignConfig {
  Range<std::uint64_t> seeds{1, 0};  // inclusive; lo > hi means no instances
  Range<int> n{3, 8};
  Range<int> k{2, 3};
  Range<std::size_t> rho_len{0, 12};
  RequestModel model = RequestModel::kUniform;
  std::optional<Cost> alpha;  // nullopt: 2k-1 per instance
  Cost beta = 0;
  int q = 3;
  std::pair<Cost, Cost> weight_range = kDefaultWeightRange;

  // Throws InputError describing the first inconsistent field.
  void validate() const;
  std::size_t instance_count() const;
};

struct CampaignRow {
  std::size_t instance_id = 0;
  std::uint64_t seed = 0;
  PropertyReport properties;
  RatioRow ratio;

  CheckStatus status() const;
};

struct ExperimentReport {
  std::vector<CampaignRow> rows;

  // kFail if any row has a failed check or ratio, else kInconclusive if any
  // check is inconclusive, else kPass (also for an empty campaign).
  CheckStatus status() const;
};

// Instance for one seed: k, n and |rho| are drawn from Rng(seed) in that
// order, then generate_instance continues on the same generator.
Instance campaign_instance(const CampaignConfig& config, std::uint64_t seed);

// Verifies every instance; `threads` workers (0 = hardware concurrency).
// Rows come back in seed order whatever the completion order.
ExperimentReport run_campaign(const CampaignConfig& config, unsigned threads = 0);

inline constexpr const char* kCsvHeader =
    "instance_id,seed,n,k,rho_len,m,ell,beta_used,opt,alg,opt_rho_sigma,alg_rho_sigma,"
    "P1,E1,C1a,C1b,C2,E2,E3,R1,T1,ratio_pass";

std::string to_csv(const ExperimentReport& report);

}  // namespace kserver
