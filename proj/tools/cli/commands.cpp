#include "commands.hpp"

#include <cmath>
#include <cstdio>
#include <numbers>
#include <optional>
#include <sstream>
#include <variant>

#include "CLI11.hpp"
#include "angle.hpp"
#include "bgrover/circuit.hpp"
#include "bgrover/errors.hpp"
#include "bgrover/grover_circuits.hpp"
#include "bgrover/grover_math.hpp"
#include "bgrover/search.hpp"
#include "report_json.hpp"

using nlohmann::json;

namespace bgrover::cli {

namespace {

/// Inconsistent flags that CLI11 cannot catch on its own.
class UsageError : public Error {
 public:
  using Error::Error;
};

/// Result printed, but the request could not be satisfied.
struct Infeasible {};

using Cell = std::variant<long long, double, std::string>;

struct Table {
  std::vector<std::string> columns;
  std::vector<std::vector<Cell>> rows;
};

std::string format_number(double value, bool full_precision) {
  char buf[40];
  std::snprintf(buf, sizeof buf, full_precision ? "%.17g" : "%.6g", value);
  return buf;
}

void write_csv(std::ostream& out, const Table& table, bool full_precision) {
  for (std::size_t c = 0; c < table.columns.size(); ++c) {
    out << (c ? "," : "") << table.columns[c];
  }
  out << '\n';
  for (const auto& row : table.rows) {
    for (std::size_t c = 0; c < row.size(); ++c) {
      if (c) out << ',';
      std::visit(
          [&](const auto& v) {
            using T = std::decay_t<decltype(v)>;
            if constexpr (std::is_same_v<T, double>) {
              out << format_number(v, full_precision);
            } else {
              out << v;
            }
          },
          row[c]);
    }
    out << '\n';
  }
}

json rows_json(const Table& table) {
  json rows = json::array();
  for (const auto& row : table.rows) {
    json r = json::array();
    for (const auto& cell : row) std::visit([&](const auto& v) { r.push_back(v); }, cell);
    rows.push_back(std::move(r));
  }
  return json{{"columns", table.columns}, {"rows", rows}};
}

void write_envelope(std::ostream& out, const ReportEnvelope& env) {
  out << json(env).dump(2) << '\n';
}

std::vector<std::int64_t> parse_array(const std::string& text) {
  std::vector<std::int64_t> values;
  std::stringstream ss(text);
  for (std::string item; std::getline(ss, item, ',');) {
    std::size_t used = 0;
    long long v = 0;
    try {
      v = std::stoll(item, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (item.empty() || used != item.size()) {
      throw UsageError("malformed array element '" + item + "' in '" + text + "'");
    }
    values.push_back(v);
  }
  if (values.empty()) throw UsageError("array must have at least one element");
  return values;
}

ValuePredicate parse_predicate(const std::string& text) {
  if (text == "negative") return ValuePredicate::negative();
  for (const std::string prefix : {"equals:", "equals=", "equals("}) {
    if (text.rfind(prefix, 0) == 0) {
      std::string body = text.substr(prefix.size());
      if (prefix == "equals(") {
        if (body.empty() || body.back() != ')') break;
        body.pop_back();
      }
      std::size_t used = 0;
      long long v = 0;
      try {
        v = std::stoll(body, &used);
      } catch (const std::exception&) {
        used = 0;
      }
      if (!body.empty() && used == body.size()) return ValuePredicate::equals(v);
      break;
    }
  }
  throw UsageError("predicate must be 'negative' or 'equals:<int>', got '" + text + "'");
}

double parse_ratio(const std::string& text) {
  const auto slash = text.find('/');
  try {
    if (slash == std::string::npos) return std::stod(text);
    return std::stod(text.substr(0, slash)) / std::stod(text.substr(slash + 1));
  } catch (const std::exception&) {
    throw UsageError("malformed number '" + text + "'");
  }
}

SearchMode parse_mode(const std::string& text) {
  if (text == "uniform") return SearchMode::kUniform;
  if (text == "binomial") return SearchMode::kBinomial;
  throw UsageError("mode must be uniform or binomial");
}

IterationConvention parse_convention(const std::string& text) {
  if (text == "ceil") return IterationConvention::kCeil;
  if (text == "round") return IterationConvention::kRound;
  throw UsageError("convention must be ceil or round");
}

// ---------------------------------------------------------------- plan

struct PlanArgs {
  int n = 0;
  int k = 0;
  std::string convention = "ceil";
};

void cmd_plan(const PlanArgs& a, std::ostream& out) {
  const GroverPlan p = plan(a.n, a.k, parse_convention(a.convention));
  ReportEnvelope env;
  env.command = "plan";
  env.params = {{"n", a.n}, {"k", a.k}, {"convention", a.convention}};
  env.result_kind = "plan";
  env.result = p;
  write_envelope(out, env);
}

// ---------------------------------------------------------------- table

struct TableArgs {
  std::string name;
  int n = 8;
  std::string omega = "1/2pi";
  bool favored = false;
  std::string out = "csv";
  bool full_precision = false;
};

void cmd_table(const TableArgs& a, std::ostream& out) {
  Table table;
  ReportEnvelope env;
  env.command = "table " + a.name;
  if (a.name == "table1") {
    env.params = {{"n", a.n}};
    table.columns = {"k", "j_uniform", "j_ideal_round", "j_ideal_ceil"};
    const int ju = j_uniform(a.n);
    for (int k = 0; k <= a.n; ++k) {
      table.rows.push_back({static_cast<long long>(k), static_cast<long long>(ju),
                            static_cast<long long>(plan(a.n, k, IterationConvention::kRound).j_ideal),
                            static_cast<long long>(plan(a.n, k, IterationConvention::kCeil).j_ideal)});
    }
  } else if (a.name == "amplitudes") {
    const double omega = parse_angle(a.omega);
    env.params = {{"n", a.n}, {"omega", omega}, {"favored", a.favored}};
    const PartitionProfile profile = partition_profile(a.n, omega);
    if (a.out == "json") {
      env.result_kind = "profile";
      env.result = profile;
      write_envelope(out, env);
      return;
    }
    const double uniform = std::pow(2.0, -0.5 * a.n);
    table.columns = {"k", "binomial", "uniform"};
    for (int k = 0; k <= a.n; ++k) {
      const double b = profile.per_k_amplitude[static_cast<std::size_t>(k)];
      if (a.favored && !(b > uniform)) continue;
      table.rows.push_back({static_cast<long long>(k), b, uniform});
    }
  } else {
    throw UsageError("unknown table '" + a.name + "' (expected table1 or amplitudes)");
  }

  if (a.out == "json") {
    env.result_kind = "rows";
    env.result = rows_json(table);
    write_envelope(out, env);
  } else {
    write_csv(out, table, a.full_precision);
  }
}

// ---------------------------------------------------------------- sweep

struct SweepArgs {
  std::string kind;
  int n = -1;  // compare: target width; otherwise 8
  int n_min = 2;
  int n_max = 16;
  int j_max = -1;
  int j = 6;
  std::string target;
  std::string omega;
  std::string out = "csv";
  bool full_precision = false;
};

void cmd_sweep(const SweepArgs& a, std::ostream& out) {
  Table table;
  ReportEnvelope env;
  env.command = "sweep " + a.kind;
  if (a.kind == "qubits-vs-iterations") {
    if (a.n_min < 1 || a.n_max < a.n_min) throw UsageError("need 1 <= n-min <= n-max");
    env.params = {{"n_min", a.n_min}, {"n_max", a.n_max}};
    table.columns = {"n", "k", "j_uniform", "j_ideal_round", "j_ideal_ceil"};
    for (int n = a.n_min; n <= a.n_max; ++n) {
      const int ju = j_uniform(n);
      for (int k = 0; k <= n; ++k) {
        table.rows.push_back({static_cast<long long>(n), static_cast<long long>(k),
                              static_cast<long long>(ju),
                              static_cast<long long>(plan(n, k, IterationConvention::kRound).j_ideal),
                              static_cast<long long>(plan(n, k, IterationConvention::kCeil).j_ideal)});
      }
    }
  } else if (a.kind == "iterations-vs-probability") {
    const int n = a.n < 0 ? 8 : a.n;
    const int j_max = a.j_max >= 0 ? a.j_max : j_uniform(n);
    env.params = {{"n", n}, {"j_max", j_max}};
    table.columns = {"k", "j", "p_uniform", "p_binomial_max", "p_binomial_ideal"};
    for (int k = 0; k <= n; ++k) {
      const double w_max = omega_max(n, k);
      const double w_ideal = plan(n, k, IterationConvention::kCeil).omega();
      for (int j = 0; j <= j_max; ++j) {
        table.rows.push_back({static_cast<long long>(k), static_cast<long long>(j),
                              predicted_probability(n, k, std::numbers::pi / 2, j),
                              predicted_probability(n, k, w_max, j),
                              predicted_probability(n, k, w_ideal, j)});
      }
    }
  } else if (a.kind == "compare") {
    if (a.target.empty()) throw UsageError("compare needs --target");
    const BasisPattern target = BasisPattern::parse(a.target);
    const int n = target.n_bits();
    if (a.n >= 0 && a.n != n) throw UsageError("--n does not match the target width");
    const double omega = a.omega.empty() ? omega_max(n, target.hamming_weight()) : parse_angle(a.omega);
    env.params = {{"n", n}, {"target", a.target}, {"j", a.j}, {"omega", omega}};
    table.columns = {"series", "omega", "iterations", "target_probability", "nontarget_probability"};
    const OracleSpec oracle = OracleSpec::exact_target(n, target);
    const std::pair<const char*, Pipeline> series[] = {
        {"uniform", Pipeline::uniform()}, {"binomial", Pipeline::b_gj_a(omega)}};
    for (const auto& [name, pipeline] : series) {
      const StateVector state = run_amplification(pipeline, oracle, a.j);
      const double p = std::norm(state[target.value()]);
      const double w = pipeline.kind == Pipeline::Kind::kUniform ? std::numbers::pi / 2 : omega;
      table.rows.push_back({std::string(name), w, static_cast<long long>(a.j), p, 1.0 - p});
    }
  } else {
    throw UsageError("unknown sweep '" + a.kind +
                     "' (expected qubits-vs-iterations, iterations-vs-probability or compare)");
  }

  if (a.out == "json") {
    env.result_kind = "rows";
    env.result = rows_json(table);
    write_envelope(out, env);
  } else {
    write_csv(out, table, a.full_precision);
  }
}

// ---------------------------------------------------------------- search / export

struct SearchArgs {
  std::string kind;  // set | retrieve | value
  int n = -1;
  std::string target;
  std::string array;
  int value_bits = 2;
  std::string index;
  std::string predicate = "negative";
  std::string mode = "uniform";
  std::string omega;
  int j = 1;
  std::string plan_convention;
  std::uint64_t shots = 1024;
  std::uint64_t seed = 0;
  std::string out = "json";
  bool full_precision = false;
  bool adaptive = false;
  std::string growth = "8/7";
  int max_rounds = 64;
  std::string omegas;
};

/// Resolved driver inputs shared by `search` and `export`.
struct ResolvedSearch {
  SearchOptions options;
  std::optional<GroverPlan> plan;
  int n = 0;
  BasisPattern target;
  DictionarySpec dict;
  ValuePredicate predicate;
  json params;
};

ResolvedSearch resolve(const SearchArgs& a) {
  ResolvedSearch r;
  r.options.mode = parse_mode(a.mode);
  r.options.iterations = a.j;
  r.options.shots = a.shots;
  r.options.seed = a.seed;
  r.params = {{"mode", a.mode}, {"shots", a.shots}, {"seed", a.seed}};
  if (a.j < 0) throw UsageError("--j must be non-negative");
  if (a.shots == 0) throw UsageError("--shots must be positive");

  // Target width and Hamming weight drive the default rotation and plan.
  int width = 0;
  int weight = 0;
  if (a.kind == "set") {
    if (a.target.empty()) throw UsageError("search set needs --target");
    r.target = BasisPattern::parse(a.target);
    r.n = a.n < 0 ? r.target.n_bits() : a.n;
    if (r.n != r.target.n_bits()) {
      throw UsageError("--n " + std::to_string(r.n) + " does not match target width " +
                       std::to_string(r.target.n_bits()));
    }
    width = r.n;
    weight = r.target.hamming_weight();
    r.params["n"] = r.n;
    r.params["target"] = a.target;
  } else {
    if (a.array.empty()) throw UsageError("search " + a.kind + " needs --array");
    r.dict.values = parse_array(a.array);
    r.dict.m_value = a.value_bits;
    r.dict.validate();
    width = r.dict.n_index();
    r.params["array"] = r.dict.values;
    r.params["value_bits"] = a.value_bits;
    if (a.kind == "retrieve") {
      if (a.index.empty()) throw UsageError("search retrieve needs --index");
      r.target = BasisPattern::parse(a.index);
      if (r.target.n_bits() != width) {
        throw UsageError("--index must have " + std::to_string(width) + " bits");
      }
      weight = r.target.hamming_weight();
      r.params["index"] = a.index;
    } else {
      r.predicate = parse_predicate(a.predicate);
      r.params["predicate"] = a.predicate;
    }
  }

  if (!a.plan_convention.empty()) {
    if (a.kind == "value") throw UsageError("--plan needs a single target (set or retrieve)");
    r.plan = plan(width, weight, parse_convention(a.plan_convention));
    r.options.iterations = r.plan->j_ideal;
    if (r.options.mode == SearchMode::kBinomial) r.options.omega = r.plan->omega();
    r.params["plan"] = a.plan_convention;
  } else if (r.options.mode == SearchMode::kBinomial) {
    if (!a.omega.empty()) {
      r.options.omega = parse_angle(a.omega);
    } else if (a.kind == "value") {
      throw UsageError("binomial value search needs --omega");
    } else {
      r.options.omega = omega_max(width, weight);
    }
  }
  r.params["j"] = r.options.iterations;
  if (r.options.omega) r.params["omega"] = *r.options.omega;
  return r;
}

void write_run_csv(std::ostream& out, const RunReport& report) {
  Table table;
  table.columns = {"label", "count"};
  for (const auto& [label, count] : report.histogram) {
    table.rows.push_back({label, static_cast<long long>(count)});
  }
  write_csv(out, table, false);
}

bool cmd_search(const SearchArgs& a, std::ostream& out) {
  ResolvedSearch r = resolve(a);
  ReportEnvelope env;
  env.command = "search " + a.kind;

  if (a.kind == "value" && a.adaptive) {
    AdaptiveSchedule schedule;
    schedule.growth_factor = parse_ratio(a.growth);
    schedule.max_rounds = a.max_rounds;
    schedule.seed = a.seed;
    if (!a.omegas.empty()) {
      std::stringstream ss(a.omegas);
      for (std::string item; std::getline(ss, item, ',');) {
        schedule.omega_candidates.push_back(parse_angle(item));
      }
    }
    r.params.erase("mode");
    r.params.erase("j");
    r.params.erase("shots");
    r.params["adaptive"] = true;
    r.params["growth_factor"] = schedule.growth_factor;
    r.params["max_rounds"] = schedule.max_rounds;
    const AdaptiveOutcome outcome = adaptive_search(r.dict, r.predicate, schedule);
    const bool feasible = outcome.rounds.empty() || outcome.rounds.front().feasible;
    if (a.out == "csv") {
      Table table;
      table.columns = {"round", "iterations", "omega", "outcome", "verified"};
      const int n_total = r.dict.n_qubits();
      for (std::size_t i = 0; i < outcome.rounds.size(); ++i) {
        const RunReport& round = outcome.rounds[i];
        const std::string label =
            round.histogram.empty() ? std::string(static_cast<std::size_t>(n_total), '-')
                                    : round.histogram.begin()->first;
        const bool verified = outcome.succeeded && i + 1 == outcome.rounds.size();
        table.rows.push_back({static_cast<long long>(i + 1),
                              static_cast<long long>(round.iterations),
                              round.omega.value_or(std::numbers::pi / 2), label,
                              static_cast<long long>(verified)});
      }
      write_csv(out, table, a.full_precision);
    } else {
      env.params = r.params;
      env.result_kind = "adaptive";
      env.result = outcome;
      write_envelope(out, env);
    }
    return feasible;
  }

  RunReport report;
  if (a.kind == "set") {
    report = set_search(r.n, r.target, r.options);
  } else if (a.kind == "retrieve") {
    report = array_retrieve(r.dict, r.target, r.options);
  } else {
    report = array_value_search(r.dict, r.predicate, r.options);
  }
  report.plan = r.plan;

  if (a.out == "csv") {
    write_run_csv(out, report);
  } else {
    env.params = r.params;
    env.result_kind = "run";
    env.result = report;
    write_envelope(out, env);
  }
  return report.feasible;
}

void cmd_export(const SearchArgs& a, std::ostream& out) {
  const ResolvedSearch r = resolve(a);
  CircuitProgram program(1);
  if (a.kind == "set") {
    program = build_set_search_program(r.n, r.target, r.options);
  } else if (a.kind == "retrieve") {
    program = build_array_retrieve_program(r.dict, r.target, r.options);
  } else {
    if (!r.predicate.satisfiable_in_window(r.dict.m_value)) throw Infeasible{};
    program = build_array_value_search_program(r.dict, r.predicate, r.options);
  }
  out << export_gate_list(program);
}

void add_search_options(CLI::App* sub, SearchArgs& a, bool with_output) {
  sub->add_option("--n", a.n, "Register width (set search; defaults to the target width)");
  sub->add_option("--target", a.target, "Target label, most-significant bit first (set)");
  sub->add_option("--array", a.array, "Comma-separated integers, e.g. --array=1,-1,1");
  sub->add_option("--value-bits", a.value_bits, "Value register width m")->capture_default_str();
  sub->add_option("--index", a.index, "Target index label (retrieve)");
  sub->add_option("--predicate", a.predicate, "negative | equals:<v> (value)")->capture_default_str();
  sub->add_option("--mode", a.mode, "uniform | binomial")->capture_default_str();
  sub->add_option("--omega", a.omega, "Rotation, e.g. 15/32pi or radians");
  auto* j = sub->add_option("--j", a.j, "Grover iterations")->capture_default_str();
  sub->add_option("--plan", a.plan_convention, "Take j and omega from the ceil|round plan")
      ->excludes(j);
  sub->add_option("--shots", a.shots, "Measurement shots")->capture_default_str();
  sub->add_option("--seed", a.seed, "Sampling seed")->capture_default_str();
  if (with_output) {
    sub->add_option("--out", a.out, "json | csv")->check(CLI::IsMember({"json", "csv"}))->capture_default_str();
    sub->add_flag("--full-precision", a.full_precision, "Print 17 significant digits in CSV");
    sub->add_flag("--adaptive", a.adaptive, "Randomised adaptive schedule (value search)");
    sub->add_option("--growth", a.growth, "Adaptive growth factor")->capture_default_str();
    sub->add_option("--max-rounds", a.max_rounds, "Adaptive round limit")->capture_default_str();
    sub->add_option("--omegas", a.omegas, "Adaptive omega candidates, comma-separated");
  }
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Uniform and binomial Grover amplitude amplification", "bgrover"};
  app.require_subcommand(1);

  PlanArgs plan_args;
  auto* plan_cmd = app.add_subcommand("plan", "Iteration plan for a weight-k target");
  plan_cmd->add_option("--n", plan_args.n, "Qubit count")->required();
  plan_cmd->add_option("--k", plan_args.k, "Target Hamming weight")->required();
  plan_cmd->add_option("--convention", plan_args.convention, "ceil | round")
      ->check(CLI::IsMember({"ceil", "round"}))
      ->capture_default_str();

  TableArgs table_args;
  auto* table_cmd = app.add_subcommand("table", "Iteration and amplitude tables as CSV");
  table_cmd->add_option("name", table_args.name, "table1 | amplitudes")->required();
  table_cmd->add_option("--n", table_args.n, "Qubit count")->capture_default_str();
  table_cmd->add_option("--omega", table_args.omega, "Rotation for amplitudes")->capture_default_str();
  table_cmd->add_flag("--favored", table_args.favored, "Only rows where binomial exceeds uniform");
  table_cmd->add_option("--out", table_args.out, "csv | json")
      ->check(CLI::IsMember({"csv", "json"}))
      ->capture_default_str();
  table_cmd->add_flag("--full-precision", table_args.full_precision, "17 significant digits");

  SweepArgs sweep_args;
  auto* sweep_cmd = app.add_subcommand("sweep", "Plot series as CSV rows");
  sweep_cmd->add_option("kind", sweep_args.kind,
                        "qubits-vs-iterations | iterations-vs-probability | compare")
      ->required();
  sweep_cmd->add_option("--n", sweep_args.n, "Qubit count (default 8; compare: target width)");
  sweep_cmd->add_option("--n-min", sweep_args.n_min, "Smallest n")->capture_default_str();
  sweep_cmd->add_option("--n-max", sweep_args.n_max, "Largest n")->capture_default_str();
  sweep_cmd->add_option("--j-max", sweep_args.j_max, "Largest j (default j_uniform(n))");
  sweep_cmd->add_option("--j", sweep_args.j, "Iterations for compare")->capture_default_str();
  sweep_cmd->add_option("--target", sweep_args.target, "Target label for compare");
  sweep_cmd->add_option("--omega", sweep_args.omega, "Rotation for compare (default omega_max)");
  sweep_cmd->add_option("--out", sweep_args.out, "csv | json")
      ->check(CLI::IsMember({"csv", "json"}))
      ->capture_default_str();
  sweep_cmd->add_flag("--full-precision", sweep_args.full_precision, "17 significant digits");

  SearchArgs search_args;
  auto* search_cmd = app.add_subcommand("search", "Run a search scenario on the simulator");
  search_cmd->require_subcommand(1);
  SearchArgs export_args;
  auto* export_cmd = app.add_subcommand("export", "Print the gate list of a search circuit");
  export_cmd->require_subcommand(1);
  for (const char* kind : {"set", "retrieve", "value"}) {
    auto* s = search_cmd->add_subcommand(kind, std::string(kind) + " search");
    add_search_options(s, search_args, true);
    s->callback([&search_args, kind] { search_args.kind = kind; });
    auto* e = export_cmd->add_subcommand(kind, std::string(kind) + " search circuit");
    add_search_options(e, export_args, false);
    e->callback([&export_args, kind] { export_args.kind = kind; });
  }

  std::vector<std::string> argv_storage;
  argv_storage.reserve(args.size() + 1);
  argv_storage.emplace_back("bgrover");
  argv_storage.insert(argv_storage.end(), args.begin(), args.end());
  std::vector<const char*> argv;
  for (const auto& s : argv_storage) argv.push_back(s.c_str());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (*plan_cmd) {
      cmd_plan(plan_args, out);
    } else if (*table_cmd) {
      cmd_table(table_args, out);
    } else if (*sweep_cmd) {
      cmd_sweep(sweep_args, out);
    } else if (*search_cmd) {
      if (!cmd_search(search_args, out)) {
        err << "error: predicate cannot be satisfied in the value register's range\n";
        return kExitInfeasible;
      }
    } else if (*export_cmd) {
      cmd_export(export_args, out);
    }
  } catch (const Infeasible&) {
    err << "error: predicate cannot be satisfied in the value register's range\n";
    return kExitInfeasible;
  } catch (const NoSolutionError& e) {
    err << "error: " << e.what() << '\n';
    return kExitInfeasible;
  } catch (const InfeasibleAngleError& e) {
    err << "error: " << e.what() << '\n';
    return kExitInfeasible;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }
  return kExitOk;
}

}  // namespace bgrover::cli
