// kserver: instance generation, single runs, anchored verification and
// campaigns for the k-server Work Function Algorithm.

#include <cstdint>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "kserver/campaign.hpp"
#include "kserver/generate.hpp"
#include "kserver/harness.hpp"
#include "kserver/offline.hpp"
#include "kserver/serialize.hpp"
#include "kserver/workfunction.hpp"

namespace {

using namespace kserver;

enum ExitCode : int {
  kOk = 0,
  kCheckFailure = 1,
  kInconclusive = 2,
  kInputError = 3,
  kIoError = 4,
};

int exit_for(CheckStatus status) {
  switch (status) {
    case CheckStatus::kPass: return kOk;
    case CheckStatus::kFail: return kCheckFailure;
    case CheckStatus::kInconclusive: return kInconclusive;
  }
  return kCheckFailure;
}

std::string checks_footer() {
  std::string out = "Exit codes: 0 ok, 1 check failure, 2 inconclusive (R1), 3 input error, 4 I/O error.\n\n"
                    "Checks evaluated by `verify` and `campaign`:\n";
  for (const auto& c : kChecks) {
    out += "  " + std::string(c.id) + std::string(5 - c.id.size(), ' ') + std::string(c.meaning) + "\n";
  }
  out += "  ratio_pass  ALG(A0,rho) <= (4k-2) OPT(A0,rho) in exact integers\n";
  return out;
}

Cost resolve_alpha(const std::string& token, int k) {
  if (token == "2k-1") return 2 * static_cast<Cost>(k) - 1;
  std::size_t used = 0;
  long long value = 0;
  try {
    value = std::stoll(token, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used != token.size() || value < 1) {
    throw InputError("--alpha must be a positive integer or 2k-1, got \"" + token + "\"");
  }
  return value;
}

struct GenArgs {
  int n = 0;
  int k = 0;
  std::size_t rho_len = 0;
  std::uint64_t seed = 0;
  std::string model = "uniform";
  std::vector<Cost> weight_range{kDefaultWeightRange.first, kDefaultWeightRange.second};
  std::string out;
};

int cmd_gen(const GenArgs& a) {
  const auto model = parse_request_model(a.model);
  if (!model) throw InputError("unknown request model \"" + a.model + "\"");
  InstanceShape shape{a.n, a.k, a.rho_len, *model, {a.weight_range[0], a.weight_range[1]}};
  const Instance instance = generate_instance(shape, a.seed);
  write_text_file(a.out, instance_to_json(instance).dump(2) + "\n");
  return kOk;
}

struct RunArgs {
  std::string instance;
  std::string algo = "wfa";
  std::string trace_out;
  std::vector<Point> target;
};

int cmd_run(const RunArgs& a) {
  const Instance instance = instance_from_json(read_json_file(a.instance));
  ExecutionTrace trace;
  if (a.algo == "wfa") {
    if (!a.target.empty()) throw InputError("--target only applies to --algo opt");
    trace = run_wfa(instance);
  } else {
    std::optional<Configuration> target;
    if (!a.target.empty()) target = Configuration(a.target);
    trace = opt_trace(instance, target);
  }
  std::cout << trace.total_cost << "\n";
  if (!a.trace_out.empty()) write_text_file(a.trace_out, trace_to_json(trace).dump(2) + "\n");
  return kOk;
}

struct VerifyArgs {
  std::string instance;
  std::string alpha = "2k-1";
  Cost beta = 0;
  int q = 3;
  Cost beta_cap_factor = VerifyOptions{}.beta_cap_factor;
  std::string report_out;
};

int cmd_verify(const VerifyArgs& a) {
  const Instance instance = instance_from_json(read_json_file(a.instance));
  VerifyOptions options;
  options.beta_cap_factor = a.beta_cap_factor;
  const PropertyReport report =
      verify_anchored_properties(instance, resolve_alpha(a.alpha, instance.k), a.beta, a.q, options);
  for (const auto& c : report.checks) {
    std::cout << c.id << ' ' << check_status_name(c.status) << "  lhs=" << c.lhs
              << " rhs=" << c.rhs << "  " << c.detail << "\n";
  }
  std::cout << "beta_used=" << report.beta_used << " m=" << report.m << " ell=" << report.ell
            << " status=" << check_status_name(report.overall()) << "\n";
  if (!a.report_out.empty()) {
    write_text_file(a.report_out, property_report_to_json(report).dump(2) + "\n");
  }
  return exit_for(report.overall());
}

struct CampaignArgs {
  std::string config;
  std::string out;
  std::string json_out;
  unsigned threads = 0;
};

int cmd_campaign(const CampaignArgs& a) {
  const CampaignConfig config = campaign_config_from_json(read_json_file(a.config));
  const ExperimentReport report = run_campaign(config, a.threads);
  write_text_file(a.out, to_csv(report));
  if (!a.json_out.empty()) {
    write_text_file(a.json_out, experiment_report_to_json(report).dump(2) + "\n");
  }
  std::size_t failed = 0;
  for (const auto& row : report.rows) failed += row.status() != CheckStatus::kPass;
  std::cout << report.rows.size() << " instances, " << failed << " not passing, status "
            << check_status_name(report.status()) << "\n";
  return exit_for(report.status());
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"k-server Work Function Algorithm testbed"};
  app.footer(checks_footer());
  app.require_subcommand(1);

  GenArgs gen;
  auto* gen_cmd = app.add_subcommand("gen", "Generate a random instance JSON");
  gen_cmd->add_option("--n", gen.n, "Number of points")->required();
  gen_cmd->add_option("--k", gen.k, "Number of servers")->required();
  gen_cmd->add_option("--rho-len", gen.rho_len, "Number of requests")->required();
  gen_cmd->add_option("--seed", gen.seed, "64-bit seed")->required();
  gen_cmd->add_option("--request-model", gen.model,
                      "uniform | roundrobin_k_plus_1 | greedy_adversary")->capture_default_str();
  gen_cmd->add_option("--weight-range", gen.weight_range, "Edge weight range lo hi")
      ->expected(2)->capture_default_str();
  gen_cmd->add_option("--out", gen.out, "Output path")->required();

  RunArgs run;
  auto* run_cmd = app.add_subcommand("run", "Serve an instance with WFA or the offline optimum");
  run_cmd->add_option("instance", run.instance, "Instance JSON")->required();
  run_cmd->add_option("--algo", run.algo, "wfa | opt")
      ->check(CLI::IsMember({"wfa", "opt"}))->capture_default_str();
  run_cmd->add_option("--trace-out", run.trace_out, "Write the execution trace JSON here");
  run_cmd->add_option("--target", run.target, "Final configuration for --algo opt (X-lazy)");

  VerifyArgs verify;
  auto* verify_cmd = app.add_subcommand("verify", "Check every anchored property on one instance");
  verify_cmd->add_option("instance", verify.instance, "Instance JSON")->required();
  verify_cmd->add_option("--alpha", verify.alpha, "Assumed ratio: integer or 2k-1")->capture_default_str();
  verify_cmd->add_option("--beta", verify.beta, "Initial additive constant")->capture_default_str();
  verify_cmd->add_option("--q", verify.q, "Repetitions in chi")->capture_default_str();
  verify_cmd->add_option("--beta-cap-factor", verify.beta_cap_factor,
                         "Stop escalating once beta exceeds this times ell")->capture_default_str();
  verify_cmd->add_option("--report-out", verify.report_out, "Write the property report JSON here");

  CampaignArgs campaign;
  auto* campaign_cmd = app.add_subcommand("campaign", "Run a seeded experiment campaign");
  campaign_cmd->add_option("config", campaign.config, "Campaign config JSON")->required();
  campaign_cmd->add_option("--out", campaign.out, "CSV report path")->required();
  campaign_cmd->add_option("--json-out", campaign.json_out, "Full JSON report path");
  campaign_cmd->add_option("--threads", campaign.threads, "Worker threads (0 = all cores)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kInputError;
  }

  try {
    if (*gen_cmd) return cmd_gen(gen);
    if (*run_cmd) return cmd_run(run);
    if (*verify_cmd) return cmd_verify(verify);
    if (*campaign_cmd) return cmd_campaign(campaign);
  } catch (const IoError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kIoError;
  } catch (const InputError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kInputError;
  }
  return kInputError;
}
