#ifndef BGROVER_STATEVECTOR_HPP
#define BGROVER_STATEVECTOR_HPP

#include <complex>
#include <cstdint>
#include <map>
#include <span>
#include <string>
#include <vector>

#include "bgrover/bits.hpp"

namespace bgrover {

using Amplitude = std::complex<double>;

inline constexpr int kMaxQubits = 24;

enum class GateKind { kH, kX, kZ, kRY };

/// One of the single-qubit gates the simulator understands.
struct SingleQubitGate {
  GateKind kind = GateKind::kH;
  double angle = 0.0;  // only used by RY

  static constexpr SingleQubitGate H() { return {GateKind::kH, 0.0}; }
  static constexpr SingleQubitGate X() { return {GateKind::kX, 0.0}; }
  static constexpr SingleQubitGate Z() { return {GateKind::kZ, 0.0}; }
  static constexpr SingleQubitGate RY(double angle) { return {GateKind::kRY, angle}; }

  bool operator==(const SingleQubitGate&) const = default;
};

/// Outcome counts keyed by basis index.
using Histogram = std::map<BasisIndex, std::uint64_t>;

/// Dense amplitude table over n qubits, qubit 0 being the least-significant
/// bit of the basis index. Mutating operations update in place and return
/// *this so they chain.
class StateVector {
 public:
  /// |0...0> on n qubits; 1 <= n <= kMaxQubits, else SizeError.
  static StateVector zero(int n_qubits);

  /// Wraps an explicit amplitude table. The length must be a power of two
  /// and the vector must be normalized within 1e-10.
  static StateVector from_amplitudes(std::vector<Amplitude> amps);

  int num_qubits() const { return n_qubits_; }
  std::size_t size() const { return amps_.size(); }
  std::span<const Amplitude> amplitudes() const { return amps_; }
  const Amplitude& operator[](BasisIndex index) const { return amps_[index]; }

  StateVector& apply_gate(const SingleQubitGate& gate, int qubit);

  /// diag(1, 1, 1, e^{i angle}) on (control, target).
  StateVector& apply_controlled_phase(int control, int target, double angle);

  StateVector& apply_swap(int qubit_a, int qubit_b);

  /// Negates the amplitude of every listed basis index. Duplicate indices
  /// count once.
  StateVector& apply_phase_flip(std::span<const BasisIndex> targets);

  /// Multiplies every amplitude by -1.
  StateVector& negate();

  double norm_squared() const;

  std::vector<double> probabilities() const;

  /// Marginal distribution of a contiguous register; entry r is the
  /// probability of reading r on qubits [first, first + count).
  std::vector<double> marginal(QubitRange reg) const;

  /// Draws `shots` outcomes by inverse-CDF lookup on a CounterRng stream
  /// seeded with `seed`. Deterministic for fixed arguments.
  Histogram sample(std::uint64_t shots, std::uint64_t seed) const;

  /// Text dump, one line per basis state: `label re im`.
  std::string dump() const;

  bool operator==(const StateVector&) const = default;

 private:
  StateVector(int n_qubits, std::vector<Amplitude> amps)
      : n_qubits_(n_qubits), amps_(std::move(amps)) {}

  void check_qubit(int qubit) const;

  int n_qubits_ = 0;
  std::vector<Amplitude> amps_;
};

/// Inner product <a|b>.
Amplitude inner_product(const StateVector& a, const StateVector& b);

/// Largest entrywise |a_i - b_i|; SizeError on width mismatch.
double max_abs_difference(const StateVector& a, const StateVector& b);

}  // namespace bgrover

#endif  // BGROVER_STATEVECTOR_HPP
