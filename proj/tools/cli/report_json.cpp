#include "report_json.hpp"

#include "bgrover/errors.hpp"

using nlohmann::json;

namespace bgrover {

namespace {

template <class T>
json optional_to_json(const std::optional<T>& value) {
  return value ? json(*value) : json(nullptr);
}

template <class T>
std::optional<T> optional_from_json(const json& j, const char* key) {
  if (!j.contains(key) || j.at(key).is_null()) return std::nullopt;
  return j.at(key).get<T>();
}

const char* convention_name(IterationConvention c) {
  return c == IterationConvention::kCeil ? "ceil" : "round";
}

IterationConvention convention_from(const std::string& s) {
  if (s == "ceil") return IterationConvention::kCeil;
  if (s == "round") return IterationConvention::kRound;
  throw ParseError("unknown iteration convention '" + s + "'");
}

const char* mode_name(SearchMode m) { return m == SearchMode::kUniform ? "uniform" : "binomial"; }

SearchMode mode_from(const std::string& s) {
  if (s == "uniform") return SearchMode::kUniform;
  if (s == "binomial") return SearchMode::kBinomial;
  throw ParseError("unknown search mode '" + s + "'");
}

}  // namespace

void to_json(json& j, const GroverPlan& p) {
  j = json{{"n", p.n},
           {"k", p.k},
           {"omega_max", p.omega_max},
           {"theta_max", p.theta_max},
           {"j_ideal", p.j_ideal},
           {"theta_ideal", p.theta_ideal},
           {"omega_ideal", optional_to_json(p.omega_ideal)},
           {"convention", convention_name(p.convention)},
           {"predicted_success", p.predicted_success}};
}

void from_json(const json& j, GroverPlan& p) {
  j.at("n").get_to(p.n);
  j.at("k").get_to(p.k);
  j.at("omega_max").get_to(p.omega_max);
  j.at("theta_max").get_to(p.theta_max);
  j.at("j_ideal").get_to(p.j_ideal);
  j.at("theta_ideal").get_to(p.theta_ideal);
  p.omega_ideal = optional_from_json<double>(j, "omega_ideal");
  p.convention = convention_from(j.at("convention").get<std::string>());
  j.at("predicted_success").get_to(p.predicted_success);
}

void to_json(json& j, const PartitionProfile& p) {
  j = json{{"n", p.n},
           {"omega", p.omega},
           {"per_k_amplitude", p.per_k_amplitude},
           {"per_k_probability", p.per_k_probability}};
}

void from_json(const json& j, PartitionProfile& p) {
  j.at("n").get_to(p.n);
  j.at("omega").get_to(p.omega);
  j.at("per_k_amplitude").get_to(p.per_k_amplitude);
  j.at("per_k_probability").get_to(p.per_k_probability);
}

void to_json(json& j, const RunReport& r) {
  j = json{{"mode", mode_name(r.mode)},
           {"omega", optional_to_json(r.omega)},
           {"iterations", r.iterations},
           {"target_probability", r.target_probability},
           {"histogram", r.histogram},
           {"shots", r.shots},
           {"seed", r.seed},
           {"plan", optional_to_json(r.plan)},
           {"gate_count", r.gate_count},
           {"feasible", r.feasible},
           {"decoded_value", optional_to_json(r.decoded_value)},
           {"satisfying_indices", r.satisfying_indices}};
}

void from_json(const json& j, RunReport& r) {
  r.mode = mode_from(j.at("mode").get<std::string>());
  r.omega = optional_from_json<double>(j, "omega");
  j.at("iterations").get_to(r.iterations);
  j.at("target_probability").get_to(r.target_probability);
  j.at("histogram").get_to(r.histogram);
  j.at("shots").get_to(r.shots);
  j.at("seed").get_to(r.seed);
  r.plan = optional_from_json<GroverPlan>(j, "plan");
  j.at("gate_count").get_to(r.gate_count);
  j.at("feasible").get_to(r.feasible);
  r.decoded_value = optional_from_json<std::int64_t>(j, "decoded_value");
  j.at("satisfying_indices").get_to(r.satisfying_indices);
}

void to_json(json& j, const AdaptiveOutcome& o) {
  j = json{{"rounds", o.rounds},
           {"succeeded", o.succeeded},
           {"found_index", optional_to_json(o.found_index)},
           {"found_value", optional_to_json(o.found_value)}};
}

void from_json(const json& j, AdaptiveOutcome& o) {
  j.at("rounds").get_to(o.rounds);
  j.at("succeeded").get_to(o.succeeded);
  o.found_index = optional_from_json<BasisIndex>(j, "found_index");
  o.found_value = optional_from_json<std::int64_t>(j, "found_value");
}

}  // namespace bgrover

namespace bgrover::cli {

void to_json(json& j, const ReportEnvelope& env) {
  j = json{{"schema_version", env.schema_version},
           {"command", env.command},
           {"params", env.params},
           {"result_kind", env.result_kind},
           {"result", env.result}};
}

void from_json(const json& j, ReportEnvelope& env) {
  j.at("schema_version").get_to(env.schema_version);
  j.at("command").get_to(env.command);
  env.params = j.at("params");
  j.at("result_kind").get_to(env.result_kind);
  env.result = j.at("result");
}

}  // namespace bgrover::cli
