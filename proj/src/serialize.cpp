#include "kserver/serialize.hpp"

#include <fstream>
#include <sstream>

namespace kserver {

Json instance_to_json(const Instance& instance) {
  Json j;
  j["n"] = instance.metric.size();
  j["k"] = instance.k;
  j["dist"] = instance.metric.matrix();
  j["initial"] = std::vector<Point>(instance.initial.begin(), instance.initial.end());
  j["requests"] = instance.requests;
  if (!instance.metric.labels().empty()) j["labels"] = instance.metric.labels();
  return j;
}

namespace {

const Json& field(const Json& j, const char* name) {
  if (!j.contains(name)) throw InputError(std::string("missing field \"") + name + "\"");
  return j.at(name);
}

template <typename T>
T field_as(const Json& j, const char* name) {
  try {
    return field(j, name).get<T>();
  } catch (const Json::exception& e) {
    throw InputError(std::string("field \"") + name + "\" has the wrong type: " + e.what());
  }
}

template <typename T>
Range<T> range_field(const Json& j, const char* name, Range<T> fallback) {
  if (!j.contains(name)) return fallback;
  const auto v = field_as<std::vector<T>>(j, name);
  if (v.size() != 2) throw InputError(std::string("field \"") + name + "\" must be [lo, hi]");
  return {v[0], v[1]};
}

Json move_to_json(const Move& m) { return {{"from", m.from}, {"to", m.to}, {"cost", m.cost}}; }

}  // namespace

Instance instance_from_json(const Json& j) {
  if (!j.is_object()) throw InputError("instance must be a JSON object");
  const int n = field_as<int>(j, "n");
  const int k = field_as<int>(j, "k");
  auto dist = field_as<std::vector<std::vector<Cost>>>(j, "dist");
  const auto initial = field_as<std::vector<Point>>(j, "initial");
  auto requests = field_as<std::vector<Point>>(j, "requests");
  std::vector<std::string> labels;
  if (j.contains("labels")) labels = field_as<std::vector<std::string>>(j, "labels");

  if (k > n) {
    throw InputError("k exceeds n (" + std::to_string(k) + " > " + std::to_string(n) + ")");
  }
  if (static_cast<int>(dist.size()) != n) {
    throw InputError("\"n\" is " + std::to_string(n) + " but \"dist\" has " +
                     std::to_string(dist.size()) + " rows");
  }
  if (static_cast<int>(initial.size()) != k) {
    throw InputError("\"initial\" has " + std::to_string(initial.size()) +
                     " points but \"k\" is " + std::to_string(k));
  }
  Instance instance{MetricSpace(std::move(dist), std::move(labels)), k, Configuration(initial),
                    std::move(requests)};
  instance.validate();
  return instance;
}

Json work_vector_to_json(const WorkVector& w) {
  Json out = Json::array();
  for (std::size_t r = 0; r < w.size(); ++r) {
    const Configuration c = w.space().at(r);
    out.push_back({{"configuration", std::vector<Point>(c.begin(), c.end())},
                   {"value", w.at_rank(r)}});
  }
  return out;
}

Json trace_to_json(const ExecutionTrace& trace) {
  Json rounds = Json::array();
  for (const Round& round : trace.rounds) {
    Json moves = Json::array();
    for (const Move& m : round.moves) moves.push_back(move_to_json(m));
    rounds.push_back({{"request", round.request},
                      {"moves", std::move(moves)},
                      {"configuration", std::vector<Point>(round.after.begin(), round.after.end())}});
  }
  return {{"initial", std::vector<Point>(trace.initial.begin(), trace.initial.end())},
          {"rounds", std::move(rounds)},
          {"total_cost", trace.total_cost}};
}

Json anchor_to_json(const AnchorSpec& anchor) {
  return {{"ell", anchor.ell},     {"m", anchor.m},     {"alpha", anchor.alpha},
          {"beta", anchor.beta},   {"opt", anchor.opt}, {"sigma_length", anchor.sigma.size()},
          {"sigma", anchor.sigma}};
}

Json property_report_to_json(const PropertyReport& report) {
  Json checks = Json::array();
  for (const auto& c : report.checks) {
    checks.push_back({{"id", c.id},
                      {"status", check_status_name(c.status)},
                      {"lhs", c.lhs},
                      {"rhs", c.rhs},
                      {"detail", c.detail}});
  }
  return {{"fingerprint", report.fingerprint},
          {"status", check_status_name(report.overall())},
          {"parameters",
           {{"alpha", report.alpha},
            {"beta_initial", report.beta_initial},
            {"beta_used", report.beta_used},
            {"beta_escalations", report.beta_escalations},
            {"q", report.q},
            {"m", report.m},
            {"ell", report.ell}}},
          {"costs",
           {{"opt_rho", report.opt_rho},
            {"alg_rho", report.alg_rho},
            {"opt_rho_sigma", report.opt_rho_sigma},
            {"alg_rho_sigma", report.alg_rho_sigma},
            {"opt_chi", report.opt_chi},
            {"alg_chi", report.alg_chi}}},
          {"c1b_configurations", report.c1b_configurations},
          {"checks", std::move(checks)}};
}

Json ratio_row_to_json(const RatioRow& row) {
  return {{"n", row.n},     {"k", row.k},         {"rho_len", row.rho_len},
          {"opt", row.opt}, {"alg", row.alg},     {"bound", row.bound},
          {"pass", row.pass}, {"ratio", row.ratio()}};
}

Json experiment_report_to_json(const ExperimentReport& report) {
  Json rows = Json::array();
  for (const auto& row : report.rows) {
    rows.push_back({{"instance_id", row.instance_id},
                    {"seed", row.seed},
                    {"status", check_status_name(row.status())},
                    {"properties", property_report_to_json(row.properties)},
                    {"ratio", ratio_row_to_json(row.ratio)}});
  }
  return {{"status", check_status_name(report.status())}, {"rows", std::move(rows)}};
}

CampaignConfig campaign_config_from_json(const Json& j) {
  if (!j.is_object()) throw InputError("campaign config must be a JSON object");
  CampaignConfig c;
  c.seeds = range_field(j, "seeds", c.seeds);
  c.n = range_field(j, "n", c.n);
  c.k = range_field(j, "k", c.k);
  c.rho_len = range_field(j, "rho_len", c.rho_len);
  if (j.contains("request_model")) {
    const auto name = field_as<std::string>(j, "request_model");
    const auto model = parse_request_model(name);
    if (!model) throw InputError("unknown request_model \"" + name + "\"");
    c.model = *model;
  }
  if (j.contains("alpha")) {
    const Json& a = j.at("alpha");
    if (a.is_string()) {
      if (a.get<std::string>() != "2k-1") {
        throw InputError("alpha must be an integer or \"2k-1\"");
      }
      c.alpha.reset();
    } else {
      c.alpha = field_as<Cost>(j, "alpha");
    }
  }
  if (j.contains("beta")) c.beta = field_as<Cost>(j, "beta");
  if (j.contains("q")) c.q = field_as<int>(j, "q");
  if (j.contains("weight_range")) {
    const auto w = range_field<Cost>(j, "weight_range", {});
    c.weight_range = {w.lo, w.hi};
  }
  c.validate();
  return c;
}

Json campaign_config_to_json(const CampaignConfig& c) {
  Json j{{"seeds", {c.seeds.lo, c.seeds.hi}},
         {"n", {c.n.lo, c.n.hi}},
         {"k", {c.k.lo, c.k.hi}},
         {"rho_len", {c.rho_len.lo, c.rho_len.hi}},
         {"request_model", request_model_name(c.model)},
         {"beta", c.beta},
         {"q", c.q},
         {"weight_range", {c.weight_range.first, c.weight_range.second}}};
  if (c.alpha) {
    j["alpha"] = *c.alpha;
  } else {
    j["alpha"] = "2k-1";
  }
  return j;
}

Json read_json_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open " + path.string());
  std::stringstream buffer;
  buffer << in.rdbuf();
  try {
    return Json::parse(buffer.str());
  } catch (const Json::parse_error& e) {
    throw InputError("cannot parse " + path.string() + ": " + e.what());
  }
}

void write_text_file(const std::filesystem::path& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw IoError("cannot open " + path.string() + " for writing");
  out << text;
  if (!out.flush()) throw IoError("failed writing " + path.string());
}

}  // namespace kserver
