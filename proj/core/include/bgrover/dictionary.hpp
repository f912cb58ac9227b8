#ifndef BGROVER_DICTIONARY_HPP
#define BGROVER_DICTIONARY_HPP

#include <cstdint>
#include <vector>

#include "bgrover/bits.hpp"
#include "bgrover/circuit.hpp"
#include "bgrover/statevector.hpp"

namespace bgrover {

// Minimal quantum dictionary: an index register of width d = values.size()
// in superposition, entangled with an m-bit value register holding the sum
// of the array elements selected by the index bits (bit j selects
// values[j]), modulo 2^m.
//
// Layout: index on qubits [0, d), value on qubits [d, d + m).

struct IndexPrep {
  enum class Kind { kUniform, kBinomial };
  Kind kind = Kind::kUniform;
  double omega = 0.0;  // kBinomial only

  static IndexPrep uniform() { return {Kind::kUniform, 0.0}; }
  static IndexPrep binomial(double omega) { return {Kind::kBinomial, omega}; }
  bool operator==(const IndexPrep&) const = default;
};

struct DictionarySpec {
  std::vector<std::int64_t> values;
  int m_value = 1;
  IndexPrep index_prep;

  int n_index() const { return static_cast<int>(values.size()); }
  int n_qubits() const { return n_index() + m_value; }
  QubitRange index_register() const { return {0, n_index()}; }
  QubitRange value_register() const { return {n_index(), m_value}; }

  /// Throws SizeError unless d >= 1, m >= 1 and d + m <= 24.
  void validate() const;

  bool operator==(const DictionarySpec&) const = default;
};

/// Sum of values[j] over set bits j of `index`, wrapped into the m-bit
/// two's complement window.
std::int64_t expected_subset_sum(const std::vector<std::int64_t>& values, BasisIndex index, int m);

/// Quantum Fourier transform on `reg` (little-endian), as H / controlled
/// phase / swap gates: |x> -> 2^(-m/2) sum_y exp(2 pi i x y / 2^m) |y>.
CircuitProgram build_fourier_transform(int n_qubits, QubitRange reg, bool inverse);

StateVector& fourier_transform(StateVector& state, QubitRange reg, bool inverse);

/// Value-encoding block: Hadamards on the value register, controlled phase
/// rotations 2 pi a_j 2^t / 2^m from index qubit j onto value qubit t, then
/// the inverse Fourier transform. Maps |i>|0> to |i>|S(i) mod 2^m>.
CircuitProgram build_value_encoder(const DictionarySpec& spec);

/// Index superposition followed by the value encoder.
CircuitProgram build_dictionary_prep(const DictionarySpec& spec);

StateVector build_dictionary_state(const DictionarySpec& spec);

/// Distribution of the value register given index register == index,
/// normalised. All zeros if the index has zero amplitude.
std::vector<double> conditional_value_distribution(const StateVector& state,
                                                   const DictionarySpec& spec, BasisIndex index);

}  // namespace bgrover

#endif  // BGROVER_DICTIONARY_HPP
