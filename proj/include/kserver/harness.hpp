#pragma once

#include <array>
#include <functional>
#include <string>
#include <string_view>
#include <vector>

#include "kserver/anchor.hpp"
#include "kserver/metric.hpp"

namespace kserver {

enum class CheckStatus { kPass, kFail, kInconclusive };

const char* check_status_name(CheckStatus status);

// Check ids in report order, with a one-line meaning for --help output.
struct CheckInfo {
  std::string_view id;
  std::string_view meaning;
};

inline constexpr std::array<CheckInfo, 9> kChecks{{
    {"P1", "OPT(A0,rho,A0) <= 2 OPT(A0,rho): returning to A0 at most doubles the optimum"},
    {"E1", "OPT(A0,rho) <= OPT(A0,rho sigma) <= 2 OPT(A0,rho): the anchor is nearly free"},
    {"C1a", "A0 is the unique minimizer of the work vector after rho sigma"},
    {"C1b", "every extracted X-lazy optimum for rho sigma sits in A0 at some round in [|rho|, |rho sigma|)"},
    {"C2", "w_{rho sigma}(X) = w_{rho sigma}(A0) + D(A0,X) for every configuration X"},
    {"E2", "OPT(A0,chi) = q OPT(A0,rho sigma) for chi = (rho sigma)^q"},
    {"E3", "WFA on chi repeats its rho sigma moves q times, so ALG(A0,chi) = q ALG(A0,rho sigma)"},
    {"R1", "WFA is back in A0 after serving rho sigma"},
    {"T1", "ALG(A0,rho) <= 2 alpha OPT(A0,rho)"},
}};

struct CheckResult {
  std::string id;
  CheckStatus status = CheckStatus::kPass;
  Cost lhs = 0;
  Cost rhs = 0;
  std::string detail;  // relation checked, plus a witness on failure
};

struct VerifyOptions {
  // beta escalation stops once beta would exceed beta_cap_factor * ell.
  Cost beta_cap_factor = Cost{1} << 20;
  // C1b inspects every X when C(n,k) is at most this, else a seeded sample.
  std::size_t c1b_configuration_cap = 512;
};

struct BetaSearch {
  Cost beta = 0;        // last beta tried
  int escalations = 0;  // number of doublings performed
  bool succeeded = false;
};

// Tries `initial`, then doubles (0 goes to 1) while `accept(beta)` is false
// and the next value stays within `cap`.
BetaSearch search_beta(Cost initial, Cost cap, const std::function<bool(Cost)>& accept);

struct PropertyReport {
  std::string fingerprint;
  Cost alpha = 0;
  Cost beta_initial = 0;
  Cost beta_used = 0;
  int q = 0;
  Cost m = 0;
  Cost ell = 0;
  int beta_escalations = 0;

  Cost opt_rho = 0;
  Cost alg_rho = 0;
  Cost opt_rho_sigma = 0;
  Cost alg_rho_sigma = 0;
  Cost opt_chi = 0;
  Cost alg_chi = 0;
  std::size_t c1b_configurations = 0;

  std::vector<CheckResult> checks;

  const CheckResult& check(std::string_view id) const;
  // kFail if any check failed, else kInconclusive if any is, else kPass.
  CheckStatus overall() const;
};

// Builds the anchor for (instance, alpha, beta) and evaluates all nine
// checks on rho, rho sigma, sigma and chi = (rho sigma)^q. If WFA does not
// return to A0 (R1), beta is doubled (0 goes to 1) and everything is
// rebuilt; past the cap R1 is reported inconclusive.
PropertyReport verify_anchored_properties(const Instance& instance, Cost alpha, Cost beta_initial,
                                          int q, const VerifyOptions& options = {});

struct RatioRow {
  int n = 0;
  int k = 0;
  std::size_t rho_len = 0;
  Cost opt = 0;
  Cost alg = 0;
  Cost bound = 0;  // 4k - 2
  bool pass = false;

  // alg / opt, or 0 when opt is 0.
  double ratio() const;
};

// WFA cost against (4k-2) OPT in exact integers. With opt = 0 the row
// passes only when alg = 0.
RatioRow measure_strict_ratio(const Instance& instance);

// Stable 64-bit FNV-1a digest of the instance's canonical JSON, as hex.
std::string instance_fingerprint(const Instance& instance);

}  // namespace kserver
