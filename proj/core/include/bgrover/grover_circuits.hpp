#ifndef BGROVER_GROVER_CIRCUITS_HPP
#define BGROVER_GROVER_CIRCUITS_HPP

#include <cstdint>
#include <vector>

#include "bgrover/bits.hpp"
#include "bgrover/circuit.hpp"
#include "bgrover/statevector.hpp"

namespace bgrover {

/// Predicate on the signed (two's complement) reading of a register.
struct ValuePredicate {
  enum class Kind { kNegative, kEquals };

  Kind kind = Kind::kNegative;
  std::int64_t value = 0;  // kEquals only

  static ValuePredicate negative() { return {Kind::kNegative, 0}; }
  static ValuePredicate equals(std::int64_t v) { return {Kind::kEquals, v}; }

  bool holds(std::int64_t decoded) const {
    return kind == Kind::kNegative ? decoded < 0 : decoded == value;
  }

  /// Whether any m-bit two's complement value satisfies the predicate.
  bool satisfiable_in_window(int m) const;

  bool operator==(const ValuePredicate&) const = default;
};

/// Which basis states the oracle negates.
class OracleSpec {
 public:
  enum class Kind { kExactTarget, kRegisterPredicate };

  /// States whose bits on `reg` equal `target`. With reg spanning all
  /// qubits this marks the single basis state `target`.
  static OracleSpec exact_target(int n_qubits, const BasisPattern& target, QubitRange reg);
  static OracleSpec exact_target(int n_qubits, const BasisPattern& target) {
    return exact_target(n_qubits, target, {0, n_qubits});
  }

  /// States whose signed reading of `reg` satisfies `predicate`.
  static OracleSpec register_predicate(int n_qubits, QubitRange reg, ValuePredicate predicate);

  Kind kind() const { return kind_; }
  int n_qubits() const { return n_qubits_; }
  QubitRange reg() const { return reg_; }
  const BasisPattern& target() const { return target_; }
  const ValuePredicate& predicate() const { return predicate_; }

  /// Sorted basis indices the oracle negates.
  const std::vector<BasisIndex>& flip_set() const { return flip_set_; }

 private:
  OracleSpec() = default;
  void build_flip_set();

  Kind kind_ = Kind::kExactTarget;
  int n_qubits_ = 0;
  QubitRange reg_;
  BasisPattern target_;
  ValuePredicate predicate_;
  std::vector<BasisIndex> flip_set_;
};

/// H on every qubit.
CircuitProgram build_uniform_prep(int n);

/// RY(omega) on every qubit: the binomial state directly from |0...0>.
CircuitProgram build_rotation_prep(int n, double omega);

enum class BinomialForm {
  kRyAfterH,  // B = RY(omega)^n H^n
  kRyZ,       // B = RY(pi/2 + omega)^n Z^n
};

/// Operator B(omega) that turns the uniform superposition into the binomial
/// one. Both forms are the same unitary since H = RY(pi/2) Z.
CircuitProgram build_binomial_prep(int n, double omega, BinomialForm form = BinomialForm::kRyAfterH);

/// Single semantic phase flip over spec.flip_set(). RangeError if empty.
CircuitProgram build_oracle(const OracleSpec& spec);

/// Negates the |0...0> amplitude only.
CircuitProgram build_diffusion(int n);

/// B^dagger O_B B: conjugates a simple oracle by a property-encoding operator.
CircuitProgram build_canonical_oracle(const CircuitProgram& encoder, const CircuitProgram& simple_oracle);

struct IterateVariant {
  enum class Kind {
    kUniform,               // -A D A^dagger O
    kBinomialConjugated,    // -A D A^dagger B^dagger(omega) O B(omega)
    kBinomialNative,        // -A D A^dagger O with A = RY(omega)^n
  };
  Kind kind = Kind::kUniform;
  double omega = 0.0;

  static IterateVariant uniform() { return {Kind::kUniform, 0.0}; }
  static IterateVariant conjugated(double omega) { return {Kind::kBinomialConjugated, omega}; }
  static IterateVariant native(double omega) { return {Kind::kBinomialNative, omega}; }
};

/// One Grover iterate built from a state preparation A and an oracle O.
/// For kBinomialNative the prep is replaced by RY(omega)^n. The global -1
/// is emitted as a NegateOp unless `global_phase` is false.
CircuitProgram grover_iterate(const CircuitProgram& prep, const CircuitProgram& oracle,
                              const IterateVariant& variant, bool global_phase = true);

struct Pipeline {
  enum class Kind {
    kUniform,       // G^j H^n
    kBGjA,          // B(omega) G(omega)^j H^n, G conjugated by B
    kGjANative,     // G(omega)^j RY(omega)^n
  };
  Kind kind = Kind::kUniform;
  double omega = 0.0;

  static Pipeline uniform() { return {Kind::kUniform, 0.0}; }
  static Pipeline b_gj_a(double omega) { return {Kind::kBGjA, omega}; }
  static Pipeline gj_a_native(double omega) { return {Kind::kGjANative, omega}; }
};

/// Full amplification program run from |0...0>.
CircuitProgram build_amplification(const Pipeline& pipeline, const OracleSpec& oracle, int j,
                                   bool global_phase = true);

/// prep followed by j plain iterates -prep D prep^dagger O.
CircuitProgram build_amplification(const CircuitProgram& prep, const OracleSpec& oracle, int j,
                                   bool global_phase = true);

StateVector run_amplification(const Pipeline& pipeline, const OracleSpec& oracle, int j);

/// Probability mass on the oracle's flip set.
double marked_probability(const StateVector& state, const OracleSpec& oracle);

}  // namespace bgrover

#endif  // BGROVER_GROVER_CIRCUITS_HPP
