// Acceptance gate: one PASS/FAIL line per criterion. Exit status is nonzero
// if any gated criterion fails.
#include <array>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <numbers>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "bgrover/dictionary.hpp"
#include "bgrover/grover_circuits.hpp"
#include "bgrover/grover_math.hpp"
#include "bgrover/search.hpp"
#include "commands.hpp"

namespace {

using namespace bgrover;
using Clock = std::chrono::steady_clock;

constexpr double kPi = std::numbers::pi;

// Tolerances and time budgets.
constexpr double kTableTol = 5e-5;
constexpr double kExactTol = 1e-9;
constexpr double kIdentityTol = 1e-12;
constexpr double kGateIdentityTol = 1e-15;
constexpr double kClosedFormTol = 1e-12;
constexpr double kBinomialSetTol = 1e-6;
// Decimal quoted for the binomial set-search case; the closed form it is
// derived from evaluates to 0.7010221..., so only the closed form is gated.
constexpr double kQuotedBinomialSet = 0.701025;
constexpr double kAc1Seconds = 1.0;
constexpr double kAc3Seconds = 1.0;
constexpr double kAc4Seconds = 30.0;
constexpr double kAc5Seconds = 60.0;
constexpr double kAc8Seconds = 30.0;
constexpr int kAdaptiveSeeds = 100;
constexpr int kAdaptiveRequired = 99;

struct Outcome {
  bool pass = true;
  std::string detail;

  void require(bool ok, const std::string& why) {
    if (!ok && pass) detail = why;
    pass = pass && ok;
  }
};

int g_failures = 0;

void report(int id, const std::string& title, const std::function<Outcome()>& body, double budget = 0.0) {
  const auto start = Clock::now();
  Outcome out = body();
  const double seconds = std::chrono::duration<double>(Clock::now() - start).count();
  if (budget > 0.0 && seconds >= budget) {
    out.require(false, "runtime " + std::to_string(seconds) + " s over budget");
  }
  std::printf("AC%-2d %s  %s  [%.3f s]%s%s\n", id, out.pass ? "PASS" : "FAIL", title.c_str(), seconds,
              out.detail.empty() ? "" : "  ", out.detail.c_str());
  if (!out.pass) ++g_failures;
}

std::string run_cli(const std::vector<std::string>& args, int* code = nullptr) {
  std::ostringstream out, err;
  const int rc = cli::run(args, out, err);
  if (code) *code = rc;
  return out.str();
}

std::vector<std::vector<std::string>> parse_csv(const std::string& text) {
  std::vector<std::vector<std::string>> rows;
  std::istringstream lines(text);
  std::string line;
  while (std::getline(lines, line)) {
    std::vector<std::string> cells;
    std::istringstream fields(line);
    std::string cell;
    while (std::getline(fields, cell, ',')) cells.push_back(cell);
    rows.push_back(std::move(cells));
  }
  return rows;
}

BasisPattern weight_pattern(int n, int k) { return BasisPattern::from_integer((BasisIndex{1} << k) - 1, n); }

Outcome ac1_table1() {
  Outcome o;
  int rc = -1;
  const auto rows = parse_csv(run_cli({"table", "table1", "--n", "8"}, &rc));
  const std::array<int, 9> round = {1, 3, 7, 11, 12, 11, 7, 3, 1};
  o.require(rc == 0, "exit code " + std::to_string(rc));
  o.require(rows.size() == 10, "expected header + 9 rows");
  if (!o.pass) return o;
  o.require(rows[0] == std::vector<std::string>{"k", "j_uniform", "j_ideal_round", "j_ideal_ceil"}, "header");
  for (int k = 0; k <= 8; ++k) {
    const auto& r = rows[k + 1];
    o.require(r[0] == std::to_string(k), "k column");
    o.require(r[1] == "12", "j_uniform at k=" + std::to_string(k) + " is " + r[1]);
    o.require(r[2] == std::to_string(round[k]), "j_ideal(round) at k=" + std::to_string(k) + " is " + r[2]);
  }
  return o;
}

Outcome ac2_convention() {
  Outcome o;
  const std::array<int, 9> round = {1, 3, 7, 11, 12, 11, 7, 3, 1};
  std::vector<int> differing;
  std::vector<int> values;
  for (int k = 0; k <= 8; ++k) {
    const int j = plan(8, k, IterationConvention::kCeil).j_ideal;
    if (j != round[k]) {
      differing.push_back(k);
      values.push_back(j);
    }
  }
  o.require(differing == std::vector<int>{1, 4, 7}, "ceil differs at an unexpected set of rows");
  o.require(values == std::vector<int>{4, 13, 4}, "ceil values at k=1,4,7 are not 4,13,4");
  return o;
}

Outcome ac3_tables() {
  Outcome o;
  const std::array<double, 6> printed = {0.03696, 0.03349, 0.03036, 0.02751, 0.02494, 0.0226};
  const auto check = [&](const std::string& omega, int first_k, bool reversed) {
    int rc = -1;
    const auto rows = parse_csv(run_cli({"table", "amplitudes", "--n", "11", "--omega", omega, "--favored",
                                         "--full-precision"},
                                        &rc));
    o.require(rc == 0 && rows.size() == 7, "amplitudes " + omega + " produced no table");
    if (rows.size() != 7) return;
    for (int i = 0; i < 6; ++i) {
      const auto& r = rows[i + 1];
      const double want = printed[reversed ? 5 - i : i];
      o.require(std::stoi(r[0]) == first_k + i, "row order at " + omega);
      o.require(std::abs(std::stod(r[1]) - want) <= kTableTol, "k=" + r[0] + " binomial " + r[1]);
      o.require(std::abs(std::stod(r[2]) - std::pow(2.0, -5.5)) <= kTableTol, "uniform column " + r[2]);
      o.require(std::abs(std::stod(r[2]) - 0.022097) <= kTableTol, "uniform column " + r[2]);
    }
  };
  check("15/32pi", 0, false);
  check("17/32pi", 6, true);
  return o;
}

Outcome ac4_ceil_exact() {
  Outcome o;
  for (int n = 2; n <= 12; ++n) {
    for (int k = 0; k <= n; ++k) {
      const GroverPlan p = plan(n, k, IterationConvention::kCeil);
      const OracleSpec target = OracleSpec::exact_target(n, weight_pattern(n, k));
      const double prob = marked_probability(run_amplification(Pipeline::b_gj_a(p.omega()), target, p.j_ideal), target);
      o.require(p.omega_ideal.has_value() && std::abs(prob - 1.0) <= kExactTol,
                "n=" + std::to_string(n) + " k=" + std::to_string(k) + " p=" + std::to_string(prob));
    }
  }
  return o;
}

Outcome ac5_sim_vs_formula() {
  Outcome o;
  for (int n = 2; n <= 10; ++n) {
    for (int k = 0; k <= n; ++k) {
      const OracleSpec target = OracleSpec::exact_target(n, weight_pattern(n, k));
      for (double w : {omega_max(n, k), kPi / 2, 15 * kPi / 32}) {
        for (int j = 0; j <= 3; ++j) {
          const double sim = marked_probability(run_amplification(Pipeline::b_gj_a(w), target, j), target);
          const double formula = predicted_probability(n, k, w, j);
          o.require(std::abs(sim - formula) <= kExactTol,
                    "n=" + std::to_string(n) + " k=" + std::to_string(k) + " j=" + std::to_string(j));
        }
      }
    }
  }
  return o;
}

double unitary_diff(const CircuitProgram& a, const CircuitProgram& b) {
  const std::size_t dim = std::size_t{1} << a.n_qubits();
  double worst = 0.0;
  for (std::size_t col = 0; col < dim; ++col) {
    std::vector<Amplitude> amps(dim, 0.0);
    amps[col] = 1.0;
    StateVector sa = StateVector::from_amplitudes(amps);
    StateVector sb = StateVector::from_amplitudes(std::move(amps));
    a.run(sa);
    b.run(sb);
    worst = std::max(worst, max_abs_difference(sa, sb));
  }
  return worst;
}

Outcome ac6_identities() {
  Outcome o;
  CircuitProgram h(1), rz(1);
  h.gate(SingleQubitGate::H(), 0);
  rz.gate(SingleQubitGate::Z(), 0).gate(SingleQubitGate::RY(kPi / 2), 0);
  o.require(unitary_diff(h, rz) <= kGateIdentityTol, "H != RY(pi/2) Z");

  std::mt19937_64 rng(6);
  std::uniform_real_distribution<double> angle(0.0, kPi);
  for (int seed = 0; seed < 50; ++seed) {
    const int n = 1 + static_cast<int>(rng() % 6);
    const int j = static_cast<int>(rng() % 4);
    const double w = angle(rng);
    const auto t = BasisPattern::from_integer(rng() % (BasisIndex{1} << n), n);
    o.require(unitary_diff(build_binomial_prep(n, w, BinomialForm::kRyAfterH),
                           build_binomial_prep(n, w, BinomialForm::kRyZ)) <= kIdentityTol,
              "B forms differ");
    const OracleSpec target = OracleSpec::exact_target(n, t);
    o.require(max_abs_difference(run_amplification(Pipeline::b_gj_a(w), target, j),
                                 run_amplification(Pipeline::gj_a_native(w), target, j)) <= kIdentityTol,
              "pipelines differ at seed " + std::to_string(seed));
  }
  return o;
}

Outcome ac7_set_search() {
  Outcome o;
  const BasisPattern target = BasisPattern::parse("1101");
  SearchOptions uniform;
  uniform.iterations = 1;
  SearchOptions binomial = uniform;
  binomial.mode = SearchMode::kBinomial;
  binomial.omega = 2 * kPi / 3;
  const double pu = set_search(4, target, uniform).target_probability;
  const double pb = set_search(4, target, binomial).target_probability;
  const double a = 3 * std::sqrt(3.0) / 16;
  o.require(std::abs(pu - 121.0 / 256) <= kClosedFormTol, "uniform " + std::to_string(pu));
  const double closed = std::pow(3 * a - 4 * a * a * a, 2);
  o.require(std::abs(pb - closed) <= kBinomialSetTol, "binomial " + std::to_string(pb));
  o.require(pb > pu, "binomial does not beat uniform");
  if (o.pass) {
    char note[160];
    std::snprintf(note, sizeof note, "uniform %.6f, binomial %.7f (closed form %.7f; quoted 0.701025 is off by %.1e)",
                  pu, pb, closed, std::abs(closed - kQuotedBinomialSet));
    o.detail = note;
  }
  return o;
}

bool dictionary_exact(const DictionarySpec& spec) {
  const StateVector s = build_dictionary_state(spec);
  for (BasisIndex i = 0; i < (BasisIndex{1} << spec.n_index()); ++i) {
    const auto dist = conditional_value_distribution(s, spec, i);
    const BasisIndex want = encode_twos_complement(expected_subset_sum(spec.values, i, spec.m_value), spec.m_value);
    if (dist[want] < 1.0 - kExactTol) return false;
  }
  return true;
}

Outcome ac8_dictionary() {
  Outcome o;
  o.require(dictionary_exact({{1, -1, 1}, 2, IndexPrep::uniform()}), "[1,-1,1] encoding");
  std::mt19937_64 rng(808);
  std::uniform_int_distribution<int> element(-12, 12);
  for (int c = 0; c < 100; ++c) {
    DictionarySpec spec;
    spec.m_value = 1 + static_cast<int>(rng() % 4);
    const int d = 1 + static_cast<int>(rng() % 5);
    for (int j = 0; j < d; ++j) spec.values.push_back(element(rng));
    o.require(dictionary_exact(spec), "random case " + std::to_string(c));
  }
  return o;
}

Outcome ac9_value_search() {
  Outcome o;
  const DictionarySpec dict{{1, -1, 1}, 2, IndexPrep::uniform()};
  const ValuePredicate negative = ValuePredicate::negative();
  const auto sat = satisfying_indices(dict.values, 2, negative);
  std::vector<int> weights;
  for (BasisIndex i : sat) weights.push_back(hamming_weight(i));
  for (int j = 0; j <= 1; ++j) {
    SearchOptions opts;
    opts.iterations = j;
    const double sim = array_value_search(dict, negative, opts).target_probability;
    const double formula = std::pow(std::sin((2 * j + 1) * multi_target_theta(3, weights, kPi / 2)), 2);
    o.require(std::abs(sim - formula) <= kExactTol, "j=" + std::to_string(j));
  }
  int successes = 0;
  for (int seed = 0; seed < kAdaptiveSeeds; ++seed) {
    AdaptiveSchedule s;
    s.seed = static_cast<std::uint64_t>(seed);
    const AdaptiveOutcome out = adaptive_search(dict, negative, s);
    if (!out.succeeded) continue;
    const bool verified = out.found_index && negative.holds(expected_subset_sum(dict.values, *out.found_index, 2));
    o.require(verified, "unverified success at seed " + std::to_string(seed));
    if (verified) ++successes;
  }
  o.require(successes >= kAdaptiveRequired, std::to_string(successes) + "/100 adaptive successes");
  if (o.pass) o.detail = std::to_string(successes) + "/" + std::to_string(kAdaptiveSeeds) + " adaptive successes";
  return o;
}

}  // namespace

int main() {
  report(1, "table1 reproduction", ac1_table1, kAc1Seconds);
  report(2, "ceil/round convention regression", ac2_convention);
  report(3, "amplitude tables reproduction", ac3_tables, kAc3Seconds);
  report(4, "ceil-plan exactness n=2..12", ac4_ceil_exact, kAc4Seconds);
  report(5, "simulator vs closed form", ac5_sim_vs_formula, kAc5Seconds);
  report(6, "operator identities", ac6_identities);
  report(7, "set-search scenario", ac7_set_search);
  report(8, "dictionary correctness", ac8_dictionary, kAc8Seconds);
  report(9, "value search and adaptive schedule", ac9_value_search);
  std::printf("AC10 INFO  hardware panels not reproducible at desk scale; covered by AC7-AC9\n");
  std::printf("%s: %d failing criteria\n", g_failures ? "FAILED" : "OK", g_failures);
  return g_failures ? 1 : 0;
}
