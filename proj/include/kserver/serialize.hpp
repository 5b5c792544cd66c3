#pragma once

#include <filesystem>
#include <string>

#include "json.hpp"

#include "kserver/anchor.hpp"
#include "kserver/campaign.hpp"
#include "kserver/harness.hpp"
#include "kserver/trace.hpp"
#include "kserver/workfunction.hpp"

namespace kserver {

using Json = nlohmann::json;

// Instance file: {"n", "k", "dist", "initial", "requests", "labels"?}.
Json instance_to_json(const Instance& instance);
// Throws InputError naming the offending field or violated invariant.
Instance instance_from_json(const Json& j);

// [{"configuration": [...], "value": v}, ...] in rank order.
Json work_vector_to_json(const WorkVector& w);
Json trace_to_json(const ExecutionTrace& trace);
Json anchor_to_json(const AnchorSpec& anchor);
Json property_report_to_json(const PropertyReport& report);
Json ratio_row_to_json(const RatioRow& row);
Json experiment_report_to_json(const ExperimentReport& report);

// {"seeds": [lo, hi], "n": [lo, hi], "k": [lo, hi], "rho_len": [lo, hi],
//  "request_model": ..., "alpha": "2k-1" | int, "beta": int, "q": int,
//  "weight_range": [lo, hi] (optional)}. Missing keys take the defaults.
CampaignConfig campaign_config_from_json(const Json& j);
Json campaign_config_to_json(const CampaignConfig& config);

// File helpers. Parse failures raise InputError; I/O failures IoError.
class IoError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

Json read_json_file(const std::filesystem::path& path);
void write_text_file(const std::filesystem::path& path, const std::string& text);

}  // namespace kserver
