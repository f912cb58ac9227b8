#ifndef BGROVER_SEARCH_HPP
#define BGROVER_SEARCH_HPP

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "bgrover/bits.hpp"
#include "bgrover/circuit.hpp"
#include "bgrover/dictionary.hpp"
#include "bgrover/grover_circuits.hpp"
#include "bgrover/grover_math.hpp"

namespace bgrover {

enum class SearchMode { kUniform, kBinomial };

struct SearchOptions {
  SearchMode mode = SearchMode::kUniform;
  std::optional<double> omega;  // required for kBinomial
  int iterations = 1;
  std::uint64_t shots = 1024;
  std::uint64_t seed = 0;
};

struct RunReport {
  SearchMode mode = SearchMode::kUniform;
  std::optional<double> omega;
  int iterations = 0;
  /// Exact probability of the marked outcome(s), read from the statevector.
  double target_probability = 0.0;
  /// Sampled outcome counts keyed by the most-significant-first label.
  std::map<std::string, std::uint64_t> histogram;
  std::uint64_t shots = 0;
  std::uint64_t seed = 0;
  std::optional<GroverPlan> plan;
  std::uint64_t gate_count = 0;

  /// False when the request cannot be satisfied in the encoded range; the
  /// run is skipped and target_probability is 0.
  bool feasible = true;
  /// Array retrieval: decoded value read for the target index.
  std::optional<std::int64_t> decoded_value;
  /// Array value search: brute-force list of satisfying indices.
  std::vector<BasisIndex> satisfying_indices;

  bool operator==(const RunReport&) const = default;
};

/// Set element search over n qubits. Uniform mode runs G^j H^n; binomial
/// mode runs B(omega) G(omega)^j H^n.
RunReport set_search(int n, const BasisPattern& target, const SearchOptions& options);

CircuitProgram build_set_search_program(int n, const BasisPattern& target,
                                        const SearchOptions& options);

/// Amplifies the index register toward `target_index` on top of the
/// dictionary state. The index prep in `dict` is overridden by `options`.
RunReport array_retrieve(const DictionarySpec& dict, const BasisPattern& target_index,
                         const SearchOptions& options);

CircuitProgram build_array_retrieve_program(const DictionarySpec& dict,
                                            const BasisPattern& target_index,
                                            const SearchOptions& options);

/// Amplifies every joint state whose value register satisfies `predicate`.
RunReport array_value_search(const DictionarySpec& dict, const ValuePredicate& predicate,
                             const SearchOptions& options);

CircuitProgram build_array_value_search_program(const DictionarySpec& dict,
                                                const ValuePredicate& predicate,
                                                const SearchOptions& options);

/// Indices whose classical subset sum satisfies the predicate.
std::vector<BasisIndex> satisfying_indices(const std::vector<std::int64_t>& values, int m,
                                           const ValuePredicate& predicate);

struct AdaptiveSchedule {
  double growth_factor = 8.0 / 7.0;
  int max_rounds = 64;
  std::vector<double> omega_candidates;  // empty means the default triple
  std::uint64_t seed = 0;

  /// {15 pi/32, pi/2, 17 pi/32}.
  static std::vector<double> default_omegas();

  void validate() const;
};

struct AdaptiveOutcome {
  std::vector<RunReport> rounds;
  bool succeeded = false;
  std::optional<BasisIndex> found_index;
  std::optional<std::int64_t> found_value;

  bool operator==(const AdaptiveOutcome&) const = default;
};

/// Randomised search. Round r draws j uniformly from
/// [0, min(ceil(growth^r), ceil(sqrt(2^d)))] and omega uniformly from the
/// candidates, runs the value search with a single shot, and verifies the
/// measured index classically. Stops on the first verified hit or after
/// max_rounds. All draws come from a CounterRng keyed by the schedule seed.
AdaptiveOutcome adaptive_search(const DictionarySpec& dict, const ValuePredicate& predicate,
                                const AdaptiveSchedule& schedule);

}  // namespace bgrover

#endif  // BGROVER_SEARCH_HPP
