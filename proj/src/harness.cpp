#include "kserver/harness.hpp"

#include <algorithm>
#include <cstdio>
#include <numeric>
#include <sstream>

#include "kserver/matching.hpp"
#include "kserver/offline.hpp"
#include "kserver/rng.hpp"
#include "kserver/serialize.hpp"
#include "kserver/workfunction.hpp"

namespace kserver {

const char* check_status_name(CheckStatus status) {
  switch (status) {
    case CheckStatus::kPass: return "pass";
    case CheckStatus::kFail: return "fail";
    case CheckStatus::kInconclusive: return "inconclusive";
  }
  return "unknown";
}

const CheckResult& PropertyReport::check(std::string_view id) const {
  for (const auto& c : checks) {
    if (c.id == id) return c;
  }
  throw std::out_of_range("no check with id " + std::string(id));
}

CheckStatus PropertyReport::overall() const {
  CheckStatus out = CheckStatus::kPass;
  for (const auto& c : checks) {
    if (c.status == CheckStatus::kFail) return CheckStatus::kFail;
    if (c.status == CheckStatus::kInconclusive) out = CheckStatus::kInconclusive;
  }
  return out;
}

double RatioRow::ratio() const {
  return opt == 0 ? 0.0 : static_cast<double>(alg) / static_cast<double>(opt);
}

std::string instance_fingerprint(const Instance& instance) {
  const std::string text = instance_to_json(instance).dump();
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : text) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

namespace {

Instance with_requests(const Instance& base, std::vector<Point> requests) {
  return Instance{base.metric, base.k, base.initial, std::move(requests)};
}

std::vector<Point> concat(const std::vector<Point>& a, const std::vector<Point>& b) {
  std::vector<Point> out = a;
  out.insert(out.end(), b.begin(), b.end());
  return out;
}

CheckResult leq(std::string id, Cost lhs, Cost rhs, std::string relation) {
  return {std::move(id), lhs <= rhs ? CheckStatus::kPass : CheckStatus::kFail, lhs, rhs,
          std::move(relation)};
}

CheckResult equal(std::string id, Cost lhs, Cost rhs, std::string relation) {
  return {std::move(id), lhs == rhs ? CheckStatus::kPass : CheckStatus::kFail, lhs, rhs,
          std::move(relation)};
}

std::vector<std::size_t> c1b_ranks(std::size_t total, std::size_t cap, const std::string& fingerprint) {
  std::vector<std::size_t> ranks(total);
  std::iota(ranks.begin(), ranks.end(), std::size_t{0});
  if (total <= cap) return ranks;
  Rng rng(std::stoull(fingerprint, nullptr, 16));
  for (std::size_t i = 0; i < cap; ++i) {
    const auto j = i + static_cast<std::size_t>(rng.uniform_below(total - i));
    std::swap(ranks[i], ranks[j]);
  }
  ranks.resize(cap);
  std::sort(ranks.begin(), ranks.end());
  return ranks;
}

}  // namespace

BetaSearch search_beta(Cost initial, Cost cap, const std::function<bool(Cost)>& accept) {
  BetaSearch out{initial, 0, false};
  for (;;) {
    out.succeeded = accept(out.beta);
    const Cost next = out.beta == 0 ? 1 : 2 * out.beta;
    if (out.succeeded || next > cap) return out;
    out.beta = next;
    ++out.escalations;
  }
}

PropertyReport verify_anchored_properties(const Instance& instance, Cost alpha, Cost beta_initial,
                                          int q, const VerifyOptions& options) {
  instance.validate();
  if (instance.k < 2) throw InputError("anchored verification needs k >= 2");
  if (alpha < 1) throw InputError("alpha must be positive");
  if (beta_initial < 0) throw InputError("beta must be nonnegative");
  if (q < 1) throw InputError("q must be at least 1");

  PropertyReport report;
  report.fingerprint = instance_fingerprint(instance);
  report.alpha = alpha;
  report.beta_initial = beta_initial;
  report.q = q;

  const Configuration& a0 = instance.initial;
  const std::vector<Point>& rho = instance.requests;
  const WorkVector w_rho = final_work_vector(instance);
  report.opt_rho = opt_cost(w_rho);

  // Anchor, escalating beta until WFA returns to A0 after rho sigma.
  AnchorSpec anchor;
  ExecutionTrace wfa_rs;
  const Cost ell = min_pairwise_distance(a0, instance.metric);
  const BetaSearch search =
      search_beta(beta_initial, options.beta_cap_factor * ell, [&](Cost beta) {
        anchor = compute_anchor(instance, alpha, beta, report.opt_rho);
        wfa_rs = run_wfa(with_requests(instance, concat(rho, anchor.sigma)));
        return wfa_rs.final_configuration() == a0;
      });
  const bool returned = search.succeeded;
  const Cost beta = search.beta;
  report.beta_used = beta;
  report.beta_escalations = search.escalations;
  report.m = anchor.m;
  report.ell = anchor.ell;

  const std::vector<Point> rho_sigma = concat(rho, anchor.sigma);
  const Instance inst_rs = with_requests(instance, rho_sigma);
  const std::vector<WorkVector> history = work_vector_history(inst_rs);
  const WorkVector& w_rs = history.back();
  const ConfigurationSpace& space = w_rs.space();
  const MetricSpace& metric = instance.metric;
  report.opt_rho_sigma = opt_cost(w_rs);
  report.alg_rho_sigma = wfa_rs.total_cost;

  const ExecutionTrace wfa_rho = run_wfa(instance);
  report.alg_rho = wfa_rho.total_cost;

  const Instance inst_chi = with_requests(instance, build_chi(rho, anchor.sigma, q));
  report.opt_chi = opt_cost(final_work_vector(inst_chi));
  const ExecutionTrace wfa_chi = run_wfa(inst_chi);
  report.alg_chi = wfa_chi.total_cost;

  // P1
  report.checks.push_back(leq("P1", w_rho(a0), 2 * report.opt_rho, "OPT(A0,rho,A0) <= 2 OPT(A0,rho)"));

  // E1: both sides of the sandwich.
  {
    CheckResult c = leq("E1", report.opt_rho_sigma, 2 * report.opt_rho,
                        "OPT(A0,rho) <= OPT(A0,rho sigma) <= 2 OPT(A0,rho)");
    if (report.opt_rho > report.opt_rho_sigma) {
      c.status = CheckStatus::kFail;
      c.detail += "; lower side fails: OPT(A0,rho) = " + std::to_string(report.opt_rho);
    }
    report.checks.push_back(std::move(c));
  }

  // C1a
  {
    const std::size_t a0_rank = space.rank_of(a0);
    const Cost at_a0 = w_rs.at_rank(a0_rank);
    CheckResult c{"C1a", CheckStatus::kPass, at_a0, report.opt_rho_sigma,
                  "argmin of w_{rho sigma} is exactly {A0}"};
    for (std::size_t r = 0; r < space.size(); ++r) {
      if (r != a0_rank && w_rs.at_rank(r) <= at_a0) {
        c.status = CheckStatus::kFail;
        c.detail += "; witness " + space.at(r).to_string() + " has value " +
                    std::to_string(w_rs.at_rank(r));
        break;
      }
    }
    report.checks.push_back(std::move(c));
  }

  // C1b
  {
    const auto ranks = c1b_ranks(space.size(), options.c1b_configuration_cap, report.fingerprint);
    report.c1b_configurations = ranks.size();
    CheckResult c{"C1b", CheckStatus::kPass, static_cast<Cost>(ranks.size()), 0,
                  "configurations whose extracted X-lazy optimum visits A0 in rounds [|rho|, |rho sigma|)"};
    for (std::size_t r : ranks) {
      const Configuration x = space.at(r);
      const ExecutionTrace trace = opt_trace(inst_rs, history, x);
      bool visits = false;
      for (std::size_t t = rho.size(); t < rho_sigma.size() && !visits; ++t) {
        visits = trace.configuration_after(t) == a0;
      }
      if (visits) {
        ++c.rhs;
      } else if (c.status == CheckStatus::kPass) {
        c.status = CheckStatus::kFail;
        c.detail += "; witness X = " + x.to_string();
      }
    }
    report.checks.push_back(std::move(c));
  }

  // C2: lhs/rhs record the first mismatch, or w(A0) and 0 when all agree.
  {
    const Cost at_a0 = w_rs(a0);
    CheckResult c{"C2", CheckStatus::kPass, at_a0, at_a0,
                  "w_{rho sigma}(X) = w_{rho sigma}(A0) + D(A0,X) for all X"};
    for (std::size_t r = 0; r < space.size(); ++r) {
      const Configuration x = space.at(r);
      const Cost expected = at_a0 + configuration_distance(a0, x, metric);
      if (w_rs.at_rank(r) != expected) {
        c = {"C2", CheckStatus::kFail, w_rs.at_rank(r), expected,
             c.detail + "; witness X = " + x.to_string()};
        break;
      }
    }
    report.checks.push_back(std::move(c));
  }

  // E2
  report.checks.push_back(
      equal("E2", report.opt_chi, q * report.opt_rho_sigma, "OPT(A0,chi) = q OPT(A0,rho sigma)"));

  // E3: cost identity and round-by-round repetition of the move list.
  {
    CheckResult c = equal("E3", report.alg_chi, q * report.alg_rho_sigma,
                          "ALG(A0,chi) = q ALG(A0,rho sigma), moves repeat q times");
    const std::size_t period = rho_sigma.size();
    for (std::size_t t = 0; t < wfa_chi.rounds.size(); ++t) {
      if (wfa_chi.rounds[t].moves != wfa_rs.rounds[t % period].moves) {
        c.status = CheckStatus::kFail;
        c.detail += "; moves diverge at chi round " + std::to_string(t + 1);
        break;
      }
    }
    // Repetition is only implied once WFA is back in A0 after rho sigma.
    if (!returned && c.status == CheckStatus::kFail) c.status = CheckStatus::kInconclusive;
    report.checks.push_back(std::move(c));
  }

  // R1
  {
    CheckResult c{"R1", returned ? CheckStatus::kPass : CheckStatus::kInconclusive,
                  static_cast<Cost>(space.rank_of(wfa_rs.final_configuration())),
                  static_cast<Cost>(space.rank_of(a0)),
                  "rank of WFA's configuration after rho sigma equals rank of A0"};
    if (!returned) {
      c.detail += "; WFA ends in " + wfa_rs.final_configuration().to_string() +
                  " even with beta = " + std::to_string(beta) + " (cap reached)";
    }
    report.checks.push_back(std::move(c));
  }

  // T1
  report.checks.push_back(
      leq("T1", report.alg_rho, 2 * alpha * report.opt_rho, "ALG(A0,rho) <= 2 alpha OPT(A0,rho)"));

  return report;
}

RatioRow measure_strict_ratio(const Instance& instance) {
  instance.validate();
  RatioRow row;
  row.n = instance.metric.size();
  row.k = instance.k;
  row.rho_len = instance.requests.size();
  row.alg = run_wfa(instance).total_cost;
  row.opt = opt_cost(final_work_vector(instance));
  row.bound = 4 * static_cast<Cost>(instance.k) - 2;
  row.pass = row.opt == 0 ? row.alg == 0 : row.alg <= row.bound * row.opt;
  return row;
}

}  // namespace kserver
