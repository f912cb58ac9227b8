#include "bgrover/grover_math.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

#include "bgrover/errors.hpp"

namespace bgrover {

namespace {

constexpr double kPi = std::numbers::pi;

// Slack when comparing an iteration count that is mathematically an exact
// integer (theta = pi/6 gives exactly 1) against its floating evaluation.
constexpr double kIntegerSlack = 1e-9;

// Largest amount sin(theta_ideal) may exceed a_k(omega_max) and still be
// treated as the equality endpoint.
constexpr double kEndpointSlack = 1e-14;

constexpr double kRootResidual = 1e-13;
constexpr int kMaxBisections = 200;

void check_n(int n) {
  if (n < 1) throw RangeError("qubit count must be >= 1, got " + std::to_string(n));
}

void check_nk(int n, int k) {
  check_n(n);
  if (k < 0 || k > n) {
    throw RangeError("Hamming weight " + std::to_string(k) + " outside [0, " +
                     std::to_string(n) + "]");
  }
}

void check_omega(double omega) {
  if (!(omega >= 0.0 && omega <= kPi)) {
    throw RangeError("rotation omega must lie in [0, pi], got " + std::to_string(omega));
  }
}

}  // namespace

double amplitude_a(int n, int k, double omega) {
  check_nk(n, k);
  check_omega(omega);
  return std::pow(std::sin(omega / 2), k) * std::pow(std::cos(omega / 2), n - k);
}

double amplitude_derivative(int n, int k, double omega) {
  check_nk(n, k);
  check_omega(omega);
  const double s = std::sin(omega / 2);
  const double c = std::cos(omega / 2);
  // (1/2) s^(k-1) c^(n-k-1) (k c^2 - (n-k) s^2), written so that k = 0 and
  // k = n do not raise 0 to a negative power.
  double value = 0.0;
  if (k > 0) value += 0.5 * k * std::pow(s, k - 1) * std::pow(c, n - k + 1);
  if (k < n) value -= 0.5 * (n - k) * std::pow(s, k + 1) * std::pow(c, n - k - 1);
  return value;
}

double theta_of_omega(int n, int k, double omega) {
  return std::asin(amplitude_a(n, k, omega));
}

double theta_uniform(int n) {
  check_n(n);
  return std::asin(std::pow(2.0, -0.5 * n));
}

double omega_max(int n, int k) {
  check_nk(n, k);
  const double root = std::pow(2.0, -1.0 / n);
  if (k == 0) return 2 * std::acos(root);
  if (k == n) return 2 * std::asin(root);
  return 2 * std::atan(std::sqrt(static_cast<double>(k) / (n - k)));
}

int j_ceil(double theta) {
  if (!(theta > 0.0 && theta <= kPi / 2)) throw RangeError("theta must lie in (0, pi/2]");
  const double x = kPi / (4 * theta) - 0.5;
  return std::max(0, static_cast<int>(std::ceil(x - kIntegerSlack)));
}

int j_round(double theta) {
  if (!(theta > 0.0 && theta <= kPi / 2)) throw RangeError("theta must lie in (0, pi/2]");
  const double x = kPi / (4 * theta) - 0.5;
  return std::max(0, static_cast<int>(std::floor(x + 0.5)));
}

int j_uniform(int n) { return j_round(theta_uniform(n)); }

GroverPlan plan(int n, int k, IterationConvention convention) {
  check_nk(n, k);
  GroverPlan p;
  p.n = n;
  p.k = k;
  p.convention = convention;
  p.omega_max = omega_max(n, k);
  p.theta_max = theta_of_omega(n, k, p.omega_max);
  p.j_ideal = convention == IterationConvention::kCeil ? j_ceil(p.theta_max)
                                                        : j_round(p.theta_max);
  p.theta_ideal = kPi / (2 * (2 * p.j_ideal + 1));

  if (std::sin(p.theta_ideal) <= std::sin(p.theta_max) + kEndpointSlack) {
    p.omega_ideal = solve_omega_ideal(n, k, p.theta_ideal);
    const double s = std::sin((2 * p.j_ideal + 1) * p.theta_ideal);
    p.predicted_success = s * s;
  } else {
    const double s = std::sin((2 * p.j_ideal + 1) * p.theta_max);
    p.predicted_success = s * s;
  }
  return p;
}

double solve_omega_ideal(int n, int k, double theta_ideal) {
  check_nk(n, k);
  if (!(theta_ideal >= 0.0 && theta_ideal <= kPi / 2)) {
    throw RangeError("theta_ideal must lie in [0, pi/2]");
  }
  const double target = std::sin(theta_ideal);
  const double peak_omega = omega_max(n, k);
  const double peak = amplitude_a(n, k, peak_omega);
  if (target > peak + kEndpointSlack) {
    throw NoSolutionError("sin(theta_ideal) = " + std::to_string(target) +
                          " exceeds the largest reachable amplitude " + std::to_string(peak));
  }
  if (target >= peak) return peak_omega;

  // Orient the bracket so that residual(lo) < 0 < residual(hi).
  const bool increasing = k >= 1;
  double lo = increasing ? 0.0 : kPi;
  double hi = peak_omega;
  auto residual = [&](double omega) { return amplitude_a(n, k, omega) - target; };

  double best = hi;
  double best_residual = std::abs(residual(hi));
  for (int iter = 0; iter < kMaxBisections; ++iter) {
    const double mid = lo + (hi - lo) / 2;
    if (mid == lo || mid == hi) break;
    const double r = residual(mid);
    if (std::abs(r) < best_residual) {
      best = mid;
      best_residual = std::abs(r);
    }
    if (r == 0.0) break;
    (r < 0 ? lo : hi) = mid;
  }
  if (best_residual > kRootResidual) {
    throw NoSolutionError("bisection for omega_ideal stalled at residual " +
                          std::to_string(best_residual));
  }
  return best;
}

double predicted_probability(int n, int k, double omega, int j) {
  if (j < 0) throw RangeError("iteration count must be non-negative");
  const double s = std::sin((2 * j + 1) * theta_of_omega(n, k, omega));
  return s * s;
}

double multi_target_theta(int n, std::span<const int> weights, double omega,
                          MultiTargetFormula formula) {
  if (weights.empty()) throw RangeError("target set must be non-empty");
  double linear = 0.0;
  double squares = 0.0;
  for (int k : weights) {
    const double a = amplitude_a(n, k, omega);
    linear += a;
    squares += a * a;
  }
  const double arg =
      formula == MultiTargetFormula::kRootSumSquare ? std::sqrt(squares) : linear;
  if (arg > 1.0 + 1e-12) {
    throw InfeasibleAngleError("multi-target arcsin argument " + std::to_string(arg) +
                               " exceeds 1");
  }
  return std::asin(std::min(arg, 1.0));
}

double binomial_coefficient(int n, int k) {
  if (k < 0 || k > n) return 0.0;
  k = std::min(k, n - k);
  double c = 1.0;
  for (int i = 1; i <= k; ++i) c = c * (n - k + i) / i;
  return std::round(c);
}

PartitionProfile partition_profile(int n, double omega) {
  check_n(n);
  check_omega(omega);
  PartitionProfile profile;
  profile.n = n;
  profile.omega = omega;
  profile.per_k_amplitude.reserve(static_cast<std::size_t>(n) + 1);
  profile.per_k_probability.reserve(static_cast<std::size_t>(n) + 1);
  for (int k = 0; k <= n; ++k) {
    const double a = amplitude_a(n, k, omega);
    profile.per_k_amplitude.push_back(a);
    profile.per_k_probability.push_back(binomial_coefficient(n, k) * a * a);
  }
  return profile;
}

}  // namespace bgrover
