#include "bgrover/search.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "bgrover/errors.hpp"
#include "bgrover/rng.hpp"

namespace bgrover {

namespace {

double required_omega(const SearchOptions& options) {
  if (!options.omega) throw RangeError("binomial mode requires a rotation omega");
  const double omega = *options.omega;
  if (!(omega >= 0.0 && omega <= std::numbers::pi)) {
    throw RangeError("rotation omega must lie in [0, pi]");
  }
  return omega;
}

void check_iterations(const SearchOptions& options) {
  if (options.iterations < 0) throw RangeError("iteration count must be non-negative");
}

std::map<std::string, std::uint64_t> labelled(const Histogram& hist, int n_bits) {
  std::map<std::string, std::uint64_t> out;
  for (const auto& [index, count] : hist) out.emplace(to_label(index, n_bits), count);
  return out;
}

// Summed squared magnitudes can overshoot 1 by a few ulps.
double as_probability(double p) { return std::clamp(p, 0.0, 1.0); }

RunReport base_report(const SearchOptions& options) {
  RunReport report;
  report.mode = options.mode;
  if (options.mode == SearchMode::kBinomial) report.omega = options.omega;
  report.iterations = options.iterations;
  report.shots = options.shots;
  report.seed = options.seed;
  return report;
}

DictionarySpec with_index_prep(DictionarySpec dict, const SearchOptions& options) {
  dict.index_prep = options.mode == SearchMode::kUniform
                        ? IndexPrep::uniform()
                        : IndexPrep::binomial(required_omega(options));
  dict.validate();
  return dict;
}

OracleSpec retrieve_oracle(const DictionarySpec& dict, const BasisPattern& target_index) {
  if (target_index.n_bits() != dict.n_index()) {
    throw RangeError("target index '" + target_index.bits() + "' must have " +
                     std::to_string(dict.n_index()) + " bits");
  }
  return OracleSpec::exact_target(dict.n_qubits(), target_index, dict.index_register());
}

}  // namespace

CircuitProgram build_set_search_program(int n, const BasisPattern& target,
                                        const SearchOptions& options) {
  check_iterations(options);
  if (target.n_bits() != n) {
    throw RangeError("target '" + target.bits() + "' must have " + std::to_string(n) + " bits");
  }
  const OracleSpec oracle = OracleSpec::exact_target(n, target);
  const Pipeline pipeline = options.mode == SearchMode::kUniform
                                ? Pipeline::uniform()
                                : Pipeline::b_gj_a(required_omega(options));
  return build_amplification(pipeline, oracle, options.iterations);
}

RunReport set_search(int n, const BasisPattern& target, const SearchOptions& options) {
  const CircuitProgram program = build_set_search_program(n, target, options);
  const StateVector state = program.run_from_zero();
  RunReport report = base_report(options);
  report.target_probability = as_probability(std::norm(state[target.value()]));
  report.histogram = labelled(state.sample(options.shots, options.seed), n);
  report.gate_count = program.gate_count();
  return report;
}

CircuitProgram build_array_retrieve_program(const DictionarySpec& dict,
                                            const BasisPattern& target_index,
                                            const SearchOptions& options) {
  check_iterations(options);
  const DictionarySpec spec = with_index_prep(dict, options);
  CircuitProgram program =
      build_amplification(build_dictionary_prep(spec), retrieve_oracle(spec, target_index),
                          options.iterations);
  program.set_name("array_retrieve");
  return program;
}

RunReport array_retrieve(const DictionarySpec& dict, const BasisPattern& target_index,
                         const SearchOptions& options) {
  const DictionarySpec spec = with_index_prep(dict, options);
  const CircuitProgram program = build_array_retrieve_program(spec, target_index, options);
  const StateVector state = program.run_from_zero();

  RunReport report = base_report(options);
  report.target_probability =
      as_probability(state.marginal(spec.index_register())[target_index.value()]);
  report.histogram = labelled(state.sample(options.shots, options.seed), spec.n_qubits());
  report.gate_count = program.gate_count();
  if (report.target_probability > 0.0) {
    const auto dist = conditional_value_distribution(state, spec, target_index.value());
    const auto best = std::max_element(dist.begin(), dist.end()) - dist.begin();
    report.decoded_value = decode_twos_complement(static_cast<BasisIndex>(best), spec.m_value);
  }
  return report;
}

std::vector<BasisIndex> satisfying_indices(const std::vector<std::int64_t>& values, int m,
                                           const ValuePredicate& predicate) {
  std::vector<BasisIndex> out;
  const BasisIndex count = BasisIndex{1} << values.size();
  for (BasisIndex i = 0; i < count; ++i) {
    if (predicate.holds(expected_subset_sum(values, i, m))) out.push_back(i);
  }
  return out;
}

CircuitProgram build_array_value_search_program(const DictionarySpec& dict,
                                                const ValuePredicate& predicate,
                                                const SearchOptions& options) {
  check_iterations(options);
  const DictionarySpec spec = with_index_prep(dict, options);
  const OracleSpec oracle =
      OracleSpec::register_predicate(spec.n_qubits(), spec.value_register(), predicate);
  CircuitProgram program =
      build_amplification(build_dictionary_prep(spec), oracle, options.iterations);
  program.set_name("array_value_search");
  return program;
}

RunReport array_value_search(const DictionarySpec& dict, const ValuePredicate& predicate,
                             const SearchOptions& options) {
  const DictionarySpec spec = with_index_prep(dict, options);
  RunReport report = base_report(options);
  if (!predicate.satisfiable_in_window(spec.m_value)) {
    report.feasible = false;
    report.shots = 0;
    return report;
  }
  report.satisfying_indices = satisfying_indices(spec.values, spec.m_value, predicate);

  const CircuitProgram program = build_array_value_search_program(spec, predicate, options);
  const StateVector state = program.run_from_zero();
  const OracleSpec oracle =
      OracleSpec::register_predicate(spec.n_qubits(), spec.value_register(), predicate);
  report.target_probability = as_probability(marked_probability(state, oracle));
  report.histogram = labelled(state.sample(options.shots, options.seed), spec.n_qubits());
  report.gate_count = program.gate_count();
  return report;
}

std::vector<double> AdaptiveSchedule::default_omegas() {
  constexpr double pi = std::numbers::pi;
  return {15 * pi / 32, pi / 2, 17 * pi / 32};
}

void AdaptiveSchedule::validate() const {
  if (!(growth_factor > 1.0)) throw RangeError("growth factor must exceed 1");
  if (max_rounds < 1) throw RangeError("max_rounds must be positive");
  for (double omega : omega_candidates) {
    if (!(omega >= 0.0 && omega <= std::numbers::pi)) {
      throw RangeError("omega candidates must lie in [0, pi]");
    }
  }
}

AdaptiveOutcome adaptive_search(const DictionarySpec& dict, const ValuePredicate& predicate,
                                const AdaptiveSchedule& schedule) {
  schedule.validate();
  dict.validate();
  const std::vector<double> omegas =
      schedule.omega_candidates.empty() ? AdaptiveSchedule::default_omegas()
                                        : schedule.omega_candidates;
  const int d = dict.n_index();
  const auto j_cap = static_cast<std::uint64_t>(std::ceil(std::sqrt(std::ldexp(1.0, d))));

  AdaptiveOutcome outcome;
  CounterRng rng(schedule.seed);
  for (int round = 1; round <= schedule.max_rounds; ++round) {
    const auto j_bound = std::min(
        j_cap, static_cast<std::uint64_t>(std::ceil(std::pow(schedule.growth_factor, round))));
    SearchOptions options;
    options.mode = SearchMode::kBinomial;
    options.iterations = static_cast<int>(rng.uniform_int(j_bound));
    options.omega = omegas[rng.uniform_int(omegas.size() - 1)];
    options.shots = 1;
    options.seed = rng.next();

    RunReport report = array_value_search(dict, predicate, options);
    outcome.rounds.push_back(report);
    if (!report.feasible) break;

    const BasisIndex measured = parse_label(report.histogram.begin()->first);
    const BasisIndex index = dict.index_register().extract(measured);
    const std::int64_t value = expected_subset_sum(dict.values, index, dict.m_value);
    if (predicate.holds(value)) {
      outcome.succeeded = true;
      outcome.found_index = index;
      outcome.found_value = value;
      break;
    }
  }
  return outcome;
}

}  // namespace bgrover
