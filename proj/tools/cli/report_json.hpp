#ifndef BGROVER_CLI_REPORT_JSON_HPP
#define BGROVER_CLI_REPORT_JSON_HPP

#include <string>

#include "json.hpp"

#include "bgrover/grover_math.hpp"
#include "bgrover/search.hpp"

namespace bgrover {

// JSON mappings for the report schema (docs/report.schema.json). Found by
// ADL, so `nlohmann::json j = plan;` and `j.get<GroverPlan>()` both work.

void to_json(nlohmann::json& j, const GroverPlan& plan);
void from_json(const nlohmann::json& j, GroverPlan& plan);

void to_json(nlohmann::json& j, const PartitionProfile& profile);
void from_json(const nlohmann::json& j, PartitionProfile& profile);

void to_json(nlohmann::json& j, const RunReport& report);
void from_json(const nlohmann::json& j, RunReport& report);

void to_json(nlohmann::json& j, const AdaptiveOutcome& outcome);
void from_json(const nlohmann::json& j, AdaptiveOutcome& outcome);

}  // namespace bgrover

namespace bgrover::cli {

inline constexpr int kSchemaVersion = 1;

/// Top-level document every JSON-emitting command prints.
struct ReportEnvelope {
  int schema_version = kSchemaVersion;
  std::string command;
  nlohmann::json params = nlohmann::json::object();
  std::string result_kind;  // plan | profile | rows | run | adaptive
  nlohmann::json result;

  bool operator==(const ReportEnvelope&) const = default;
};

void to_json(nlohmann::json& j, const ReportEnvelope& env);
void from_json(const nlohmann::json& j, ReportEnvelope& env);

}  // namespace bgrover::cli

#endif  // BGROVER_CLI_REPORT_JSON_HPP
