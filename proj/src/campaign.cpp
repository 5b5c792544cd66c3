#include "kserver/campaign.hpp"

#include <algorithm>
#include <atomic>
#include <exception>
#include <sstream>
#include <thread>

namespace kserver {

void CampaignConfig::validate() const {
  const int extra = model == RequestModel::kRoundRobinKPlus1 ? 1 : 0;
  if (k.lo < 2) throw InputError("campaign k must be at least 2 (the anchor needs two servers)");
  if (k.lo > k.hi) throw InputError("campaign k range is empty");
  if (n.lo > n.hi) throw InputError("campaign n range is empty");
  if (n.lo < 2 || n.hi > kMaxPoints) {
    throw InputError("campaign n must lie in [2, " + std::to_string(kMaxPoints) + "]");
  }
  if (k.hi + extra > n.hi) {
    throw InputError("campaign k range exceeds n (k hi " + std::to_string(k.hi) + ", n hi " +
                     std::to_string(n.hi) + ")");
  }
  if (rho_len.lo > rho_len.hi) throw InputError("campaign rho_len range is empty");
  if (alpha && *alpha < 1) throw InputError("campaign alpha must be positive");
  if (beta < 0) throw InputError("campaign beta must be nonnegative");
  if (q < 1) throw InputError("campaign q must be at least 1");
  if (weight_range.first < 1 || weight_range.second < weight_range.first) {
    throw InputError("campaign weight_range must be positive and nonempty");
  }
}

std::size_t CampaignConfig::instance_count() const {
  return seeds.lo > seeds.hi ? 0 : static_cast<std::size_t>(seeds.hi - seeds.lo) + 1;
}

CheckStatus CampaignRow::status() const {
  if (!ratio.pass) return CheckStatus::kFail;
  return properties.overall();
}

CheckStatus ExperimentReport::status() const {
  CheckStatus out = CheckStatus::kPass;
  for (const auto& row : rows) {
    const CheckStatus s = row.status();
    if (s == CheckStatus::kFail) return s;
    if (s == CheckStatus::kInconclusive) out = s;
  }
  return out;
}

Instance campaign_instance(const CampaignConfig& config, std::uint64_t seed) {
  Rng rng(seed);
  InstanceShape shape;
  shape.model = config.model;
  shape.weight_range = config.weight_range;
  shape.k = static_cast<int>(rng.uniform_int(config.k.lo, config.k.hi));
  const int extra = config.model == RequestModel::kRoundRobinKPlus1 ? 1 : 0;
  shape.n = static_cast<int>(rng.uniform_int(std::max(config.n.lo, shape.k + extra), config.n.hi));
  shape.rho_len = static_cast<std::size_t>(rng.uniform_int(static_cast<std::int64_t>(config.rho_len.lo),
                                                           static_cast<std::int64_t>(config.rho_len.hi)));
  return generate_instance(shape, rng);
}

ExperimentReport run_campaign(const CampaignConfig& config, unsigned threads) {
  config.validate();
  const std::size_t count = config.instance_count();
  ExperimentReport report;
  report.rows.resize(count);
  std::vector<std::exception_ptr> errors(count);

  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < count; i = next++) {
      try {
        CampaignRow& row = report.rows[i];
        row.instance_id = i;
        row.seed = config.seeds.lo + i;
        const Instance instance = campaign_instance(config, row.seed);
        const Cost alpha = config.alpha.value_or(2 * static_cast<Cost>(instance.k) - 1);
        row.properties = verify_anchored_properties(instance, alpha, config.beta, config.q);
        row.ratio = measure_strict_ratio(instance);
      } catch (...) {
        errors[i] = std::current_exception();
      }
    }
  };

  if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());
  threads = static_cast<unsigned>(std::min<std::size_t>(threads, std::max<std::size_t>(count, 1)));
  {
    std::vector<std::jthread> pool;
    for (unsigned t = 1; t < threads; ++t) pool.emplace_back(worker);
    worker();
  }
  for (const auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }
  return report;
}

std::string to_csv(const ExperimentReport& report) {
  std::ostringstream out;
  out << kCsvHeader << '\n';
  for (const auto& row : report.rows) {
    const PropertyReport& p = row.properties;
    out << row.instance_id << ',' << row.seed << ',' << row.ratio.n << ',' << row.ratio.k << ','
        << row.ratio.rho_len << ',' << p.m << ',' << p.ell << ',' << p.beta_used << ','
        << row.ratio.opt << ',' << row.ratio.alg << ',' << p.opt_rho_sigma << ','
        << p.alg_rho_sigma;
    for (const auto& info : kChecks) out << ',' << check_status_name(p.check(info.id).status);
    out << ',' << (row.ratio.pass ? "pass" : "fail") << '\n';
  }
  return out.str();
}

}  // namespace kserver
