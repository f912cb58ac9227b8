#include "bgrover/statevector.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <numbers>

#include "bgrover/errors.hpp"
#include "bgrover/rng.hpp"

namespace bgrover {

namespace {

struct Matrix2 {
  Amplitude m00, m01, m10, m11;
};

Matrix2 matrix_of(const SingleQubitGate& gate) {
  switch (gate.kind) {
    case GateKind::kH: {
      const double r = std::sqrt(0.5);
      return {r, r, r, -r};
    }
    case GateKind::kX:
      return {0.0, 1.0, 1.0, 0.0};
    case GateKind::kZ:
      return {1.0, 0.0, 0.0, -1.0};
    case GateKind::kRY: {
      const double c = std::cos(gate.angle / 2);
      const double s = std::sin(gate.angle / 2);
      return {c, -s, s, c};
    }
  }
  return {1.0, 0.0, 0.0, 1.0};
}

}  // namespace

StateVector StateVector::zero(int n_qubits) {
  if (n_qubits < 1 || n_qubits > kMaxQubits) {
    throw SizeError("qubit count must be in [1, " + std::to_string(kMaxQubits) +
                    "], got " + std::to_string(n_qubits));
  }
  std::vector<Amplitude> amps(std::size_t{1} << n_qubits);
  amps[0] = 1.0;
  return StateVector(n_qubits, std::move(amps));
}

StateVector StateVector::from_amplitudes(std::vector<Amplitude> amps) {
  const std::size_t len = amps.size();
  if (len < 2 || !std::has_single_bit(len) || std::countr_zero(len) > kMaxQubits) {
    throw SizeError("amplitude table length must be 2^n with 1 <= n <= 24");
  }
  double norm = 0.0;
  for (const auto& a : amps) {
    if (!std::isfinite(a.real()) || !std::isfinite(a.imag())) {
      throw RangeError("amplitudes must be finite");
    }
    norm += std::norm(a);
  }
  if (std::abs(norm - 1.0) > 1e-10) throw RangeError("amplitude table is not normalized");
  return StateVector(std::countr_zero(len), std::move(amps));
}

void StateVector::check_qubit(int qubit) const {
  if (qubit < 0 || qubit >= n_qubits_) {
    throw RangeError("qubit " + std::to_string(qubit) + " out of range for " +
                     std::to_string(n_qubits_) + "-qubit state");
  }
}

StateVector& StateVector::apply_gate(const SingleQubitGate& gate, int qubit) {
  check_qubit(qubit);
  if (gate.kind == GateKind::kRY && !std::isfinite(gate.angle)) {
    throw RangeError("rotation angle must be finite");
  }
  const Matrix2 m = matrix_of(gate);
  const std::size_t stride = std::size_t{1} << qubit;
  const std::size_t len = amps_.size();
  for (std::size_t block = 0; block < len; block += 2 * stride) {
    for (std::size_t i0 = block; i0 < block + stride; ++i0) {
      const std::size_t i1 = i0 + stride;
      const Amplitude a0 = amps_[i0];
      const Amplitude a1 = amps_[i1];
      amps_[i0] = m.m00 * a0 + m.m01 * a1;
      amps_[i1] = m.m10 * a0 + m.m11 * a1;
    }
  }
  return *this;
}

StateVector& StateVector::apply_controlled_phase(int control, int target, double angle) {
  check_qubit(control);
  check_qubit(target);
  if (control == target) throw RangeError("controlled phase needs distinct qubits");
  if (!std::isfinite(angle)) throw RangeError("phase angle must be finite");
  const Amplitude phase = std::polar(1.0, angle);
  const BasisIndex mask = (BasisIndex{1} << control) | (BasisIndex{1} << target);
  for (BasisIndex i = 0; i < amps_.size(); ++i) {
    if ((i & mask) == mask) amps_[i] *= phase;
  }
  return *this;
}

StateVector& StateVector::apply_swap(int qubit_a, int qubit_b) {
  check_qubit(qubit_a);
  check_qubit(qubit_b);
  if (qubit_a == qubit_b) return *this;
  const BasisIndex bit_a = BasisIndex{1} << qubit_a;
  const BasisIndex bit_b = BasisIndex{1} << qubit_b;
  for (BasisIndex i = 0; i < amps_.size(); ++i) {
    // visit each (a=1, b=0) index once and swap with its (a=0, b=1) partner
    if ((i & bit_a) && !(i & bit_b)) std::swap(amps_[i], amps_[i ^ bit_a ^ bit_b]);
  }
  return *this;
}

StateVector& StateVector::apply_phase_flip(std::span<const BasisIndex> targets) {
  for (BasisIndex t : targets) {
    if (t >= amps_.size()) {
      throw RangeError("phase-flip index " + std::to_string(t) + " out of range");
    }
  }
  if (std::is_sorted(targets.begin(), targets.end()) &&
      std::adjacent_find(targets.begin(), targets.end()) == targets.end()) {
    for (BasisIndex t : targets) amps_[t] = -amps_[t];
    return *this;
  }
  std::vector<BasisIndex> unique(targets.begin(), targets.end());
  std::sort(unique.begin(), unique.end());
  unique.erase(std::unique(unique.begin(), unique.end()), unique.end());
  for (BasisIndex t : unique) amps_[t] = -amps_[t];
  return *this;
}

StateVector& StateVector::negate() {
  for (auto& a : amps_) a = -a;
  return *this;
}

double StateVector::norm_squared() const {
  double total = 0.0;
  for (const auto& a : amps_) total += std::norm(a);
  return total;
}

std::vector<double> StateVector::probabilities() const {
  std::vector<double> p(amps_.size());
  std::transform(amps_.begin(), amps_.end(), p.begin(),
                 [](const Amplitude& a) { return std::norm(a); });
  return p;
}

std::vector<double> StateVector::marginal(QubitRange reg) const {
  if (reg.count < 1 || reg.first < 0 || reg.end() > n_qubits_) {
    throw RangeError("register [" + std::to_string(reg.first) + ", " +
                     std::to_string(reg.end()) + ") is empty or outside the state");
  }
  std::vector<double> out(std::size_t{1} << reg.count, 0.0);
  for (BasisIndex i = 0; i < amps_.size(); ++i) out[reg.extract(i)] += std::norm(amps_[i]);
  return out;
}

Histogram StateVector::sample(std::uint64_t shots, std::uint64_t seed) const {
  if (shots == 0) throw RangeError("shots must be positive");
  std::vector<double> cdf(amps_.size());
  double running = 0.0;
  for (std::size_t i = 0; i < amps_.size(); ++i) {
    running += std::norm(amps_[i]);
    cdf[i] = running;
  }
  CounterRng rng(seed);
  Histogram hist;
  for (std::uint64_t s = 0; s < shots; ++s) {
    const double u = rng.uniform01() * running;
    // first entry with cdf > u; zero-probability entries can never win
    const auto it = std::upper_bound(cdf.begin(), cdf.end(), u);
    ++hist[static_cast<BasisIndex>(it - cdf.begin())];
  }
  return hist;
}

std::string StateVector::dump() const {
  std::string out;
  char buf[64];
  for (BasisIndex i = 0; i < amps_.size(); ++i) {
    out += to_label(i, n_qubits_);
    std::snprintf(buf, sizeof buf, " %.17g %.17g\n", amps_[i].real(), amps_[i].imag());
    out += buf;
  }
  return out;
}

Amplitude inner_product(const StateVector& a, const StateVector& b) {
  if (a.size() != b.size()) throw SizeError("inner product of states with different widths");
  Amplitude total = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) total += std::conj(a[i]) * b[i];
  return total;
}

double max_abs_difference(const StateVector& a, const StateVector& b) {
  if (a.size() != b.size()) throw SizeError("comparing states with different widths");
  double worst = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) worst = std::max(worst, std::abs(a[i] - b[i]));
  return worst;
}

}  // namespace bgrover
