#include "kserver/anchor.hpp"

#include <algorithm>

#include "kserver/offline.hpp"
#include "kserver/workfunction.hpp"

namespace kserver {

namespace {

Cost ceil_div(Cost num, Cost den) { return num / den + (num % den != 0 ? 1 : 0); }

}  // namespace

Cost anchor_cycle_count(int k, Cost opt, Cost ell, Cost alpha, Cost beta) {
  if (k < 2) throw InputError("the anchor needs k >= 2");
  if (ell <= 0) throw InputError("the anchor needs ell > 0");
  if (opt < 0 || alpha < 1 || beta < 0) throw InputError("anchor parameters out of range");
  const Cost kk = k;
  // Both terms of the max share the denominator ell.
  const Cost structural = 2 * kk * opt + kk * kk * ell;
  const Cost competitive = 2 * alpha * opt + beta;
  return ceil_div(std::max(structural, competitive), ell) + 1;
}

std::vector<Point> round_robin(const Configuration& a0, Cost m) {
  std::vector<Point> sigma;
  sigma.reserve(static_cast<std::size_t>(m) * static_cast<std::size_t>(a0.size()));
  for (Cost cycle = 0; cycle < m; ++cycle) sigma.insert(sigma.end(), a0.begin(), a0.end());
  return sigma;
}

AnchorSpec compute_anchor(const Instance& instance, Cost alpha, Cost beta, Cost opt) {
  instance.validate();
  AnchorSpec spec;
  spec.ell = min_pairwise_distance(instance.initial, instance.metric);
  spec.alpha = alpha;
  spec.beta = beta;
  spec.opt = opt;
  spec.m = anchor_cycle_count(instance.k, opt, spec.ell, alpha, beta);
  spec.sigma = round_robin(instance.initial, spec.m);
  return spec;
}

AnchorSpec compute_anchor(const Instance& instance, Cost alpha, Cost beta) {
  if (instance.k < 2) throw InputError("the anchor needs k >= 2");
  return compute_anchor(instance, alpha, beta, opt_cost(final_work_vector(instance)));
}

std::vector<Point> build_chi(const std::vector<Point>& rho, const std::vector<Point>& sigma, int q) {
  if (q < 1) throw InputError("q must be at least 1");
  std::vector<Point> chi;
  chi.reserve(static_cast<std::size_t>(q) * (rho.size() + sigma.size()));
  for (int i = 0; i < q; ++i) {
    chi.insert(chi.end(), rho.begin(), rho.end());
    chi.insert(chi.end(), sigma.begin(), sigma.end());
  }
  return chi;
}

}  // namespace kserver
