#ifndef BGROVER_GROVER_MATH_HPP
#define BGROVER_GROVER_MATH_HPP

#include <optional>
#include <span>
#include <vector>

namespace bgrover {

// Closed-form analytics of uniform and binomial amplitude amplification.
//
// For an n-qubit product state RY(omega)^n |0>, every basis state with
// Hamming weight k has amplitude
//
//     a_k(omega) = sin^k(omega / 2) * cos^(n - k)(omega / 2),
//
// and after j Grover iterates a weight-k target has amplitude
// sin((2j + 1) theta) with theta = arcsin(a_k(omega)). omega = pi/2 is the
// uniform superposition.

/// a_k(omega). Requires 0 <= k <= n and omega in [0, pi], else RangeError.
double amplitude_a(int n, int k, double omega);

/// d a_k / d omega.
double amplitude_derivative(int n, int k, double omega);

/// arcsin(a_k(omega)), in [0, pi/2].
double theta_of_omega(int n, int k, double omega);

/// arcsin(2^(-n/2)).
double theta_uniform(int n);

/// Rotation that maximises the weight-k amplitude. For 0 < k < n this is
/// the critical point 2 atan(sqrt(k / (n - k))). For k = 0 and k = n it is
/// the angle at which a_k equals exactly 1/2, so one iterate reaches
/// probability 1.
double omega_max(int n, int k);

/// Nearest integer to pi / (4 theta_uniform) - 1/2.
int j_uniform(int n);

/// Iteration count under ceiling rounding, ceil(pi / (4 theta) - 1/2).
int j_ceil(double theta);

/// Iteration count under nearest-integer rounding.
int j_round(double theta);

enum class IterationConvention {
  kCeil,   // smallest j with (2j + 1) theta_max >= pi/2; always exact
  kRound,  // nearest integer; matches the published 8-qubit table
};

struct GroverPlan {
  int n = 0;
  int k = 0;
  double omega_max = 0.0;
  double theta_max = 0.0;
  int j_ideal = 0;
  double theta_ideal = 0.0;
  std::optional<double> omega_ideal;
  IterationConvention convention = IterationConvention::kCeil;
  double predicted_success = 0.0;

  /// Rotation to run with: omega_ideal when present, else omega_max.
  double omega() const { return omega_ideal.value_or(omega_max); }

  bool operator==(const GroverPlan&) const = default;
};

/// Iteration count and rotation for a weight-k target on n qubits.
///
/// Under kCeil the plan always has omega_ideal and predicted_success 1.
/// Under kRound the rounded j can demand theta_ideal > theta_max; then no
/// rotation reaches pi/2 exactly, so omega_ideal is left empty, omega_max is
/// used and predicted_success is sin^2((2j + 1) theta_max).
GroverPlan plan(int n, int k, IterationConvention convention = IterationConvention::kCeil);

/// Solves a_k(omega) = sin(theta_ideal) by bisection on the monotone branch:
/// [0, omega_max] for k >= 1 (a_k increasing), [omega_max, pi] for k = 0
/// (a_0 decreasing). Residual <= 1e-13, at most 200 halvings.
/// Throws NoSolutionError when sin(theta_ideal) exceeds a_k(omega_max).
double solve_omega_ideal(int n, int k, double theta_ideal);

/// sin^2((2j + 1) theta(omega)).
double predicted_probability(int n, int k, double omega, int j);

enum class MultiTargetFormula {
  kRootSumSquare,  // arcsin(sqrt(sum a_k^2)), the normalised target weight
  kLinearSum,      // arcsin(sum a_k), amplitudes summed linearly
};

/// Initial angle for a set of targets given by their Hamming weights.
/// Throws InfeasibleAngleError if the arcsin argument exceeds 1.
double multi_target_theta(int n, std::span<const int> weights, double omega,
                          MultiTargetFormula formula = MultiTargetFormula::kRootSumSquare);

struct PartitionProfile {
  int n = 0;
  double omega = 0.0;
  std::vector<double> per_k_amplitude;    // a_k(omega), k = 0..n
  std::vector<double> per_k_probability;  // C(n, k) a_k(omega)^2

  bool operator==(const PartitionProfile&) const = default;
};

PartitionProfile partition_profile(int n, double omega);

/// C(n, k) as a double (exact for the sizes used here).
double binomial_coefficient(int n, int k);

}  // namespace bgrover

#endif  // BGROVER_GROVER_MATH_HPP
