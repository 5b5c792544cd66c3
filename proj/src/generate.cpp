#include "kserver/generate.hpp"

#include <numeric>

#include "kserver/workfunction.hpp"

namespace kserver {

const char* request_model_name(RequestModel model) {
  switch (model) {
    case RequestModel::kUniform: return "uniform";
    case RequestModel::kRoundRobinKPlus1: return "roundrobin_k_plus_1";
    case RequestModel::kGreedyAdversary: return "greedy_adversary";
  }
  return "unknown";
}

std::optional<RequestModel> parse_request_model(const std::string& name) {
  for (auto m : {RequestModel::kUniform, RequestModel::kRoundRobinKPlus1,
                 RequestModel::kGreedyAdversary}) {
    if (name == request_model_name(m)) return m;
  }
  return std::nullopt;
}

namespace {

// First `count` entries of a Fisher-Yates shuffle of 0..n-1.
std::vector<Point> draw_distinct(int n, int count, Rng& rng) {
  std::vector<Point> pts(static_cast<std::size_t>(n));
  std::iota(pts.begin(), pts.end(), 0);
  for (int i = 0; i < count; ++i) {
    const auto j = i + static_cast<int>(rng.uniform_below(static_cast<std::uint64_t>(n - i)));
    std::swap(pts[static_cast<std::size_t>(i)], pts[static_cast<std::size_t>(j)]);
  }
  pts.resize(static_cast<std::size_t>(count));
  return pts;
}

std::vector<Point> greedy_requests(const MetricSpace& metric, const Configuration& a0,
                                   std::size_t len) {
  WorkVector w = initial_work_vector(metric, a0);
  Configuration current = a0;
  std::vector<Point> requests;
  requests.reserve(len);
  for (std::size_t t = 0; t < len; ++t) {
    Point pick = 0;
    Cost worst = -1;
    for (Point r = 0; r < metric.size(); ++r) {
      if (current.contains(r)) continue;
      const Cost paid = wfa_decide(w, current, r).cost;
      if (paid > worst) {
        worst = paid;
        pick = r;
      }
    }
    current = wfa_decide(w, current, pick).next;
    w = update_work_vector(w, pick);
    requests.push_back(pick);
  }
  return requests;
}

}  // namespace

Instance generate_instance(const InstanceShape& shape, Rng& rng) {
  const int n = shape.n;
  const int k = shape.k;
  if (n < 2 || n > kMaxPoints) throw InputError("n must lie in [2, " + std::to_string(kMaxPoints) + "]");
  if (k < 1) throw InputError("k must be at least 1");
  if (k > n) throw InputError("k exceeds n (" + std::to_string(k) + " > " + std::to_string(n) + ")");
  if (shape.model == RequestModel::kRoundRobinKPlus1 && k + 1 > n) {
    throw InputError("roundrobin_k_plus_1 needs n >= k + 1");
  }

  MetricSpace metric = random_metric(n, rng, shape.weight_range);
  std::vector<Point> requests;
  Configuration a0;
  switch (shape.model) {
    case RequestModel::kUniform: {
      a0 = Configuration(draw_distinct(n, k, rng));
      requests.reserve(shape.rho_len);
      for (std::size_t t = 0; t < shape.rho_len; ++t) {
        requests.push_back(static_cast<Point>(rng.uniform_below(static_cast<std::uint64_t>(n))));
      }
      break;
    }
    case RequestModel::kRoundRobinKPlus1: {
      // cycle[0..k-1] is A0; the cycle starts at the outside point cycle[k].
      const std::vector<Point> cycle = draw_distinct(n, k + 1, rng);
      a0 = Configuration(std::vector<Point>(cycle.begin(), cycle.begin() + k));
      for (std::size_t t = 0; t < shape.rho_len; ++t) {
        requests.push_back(cycle[(static_cast<std::size_t>(k) + t) % (static_cast<std::size_t>(k) + 1)]);
      }
      break;
    }
    case RequestModel::kGreedyAdversary: {
      a0 = Configuration(draw_distinct(n, k, rng));
      requests = greedy_requests(metric, a0, shape.rho_len);
      break;
    }
  }
  Instance instance{std::move(metric), k, std::move(a0), std::move(requests)};
  instance.validate();
  return instance;
}

Instance generate_instance(const InstanceShape& shape, std::uint64_t seed) {
  Rng rng(seed);
  return generate_instance(shape, rng);
}

}  // namespace kserver
