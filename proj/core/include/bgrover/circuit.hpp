#ifndef BGROVER_CIRCUIT_HPP
#define BGROVER_CIRCUIT_HPP

#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "bgrover/bits.hpp"
#include "bgrover/statevector.hpp"

namespace bgrover {

struct GateOp {
  SingleQubitGate gate;
  int qubit = 0;
  bool operator==(const GateOp&) const = default;
};

struct ControlledPhaseOp {
  int control = 0;
  int target = 0;
  double angle = 0.0;
  bool operator==(const ControlledPhaseOp&) const = default;
};

struct SwapOp {
  int qubit_a = 0;
  int qubit_b = 0;
  bool operator==(const SwapOp&) const = default;
};

/// Multi-controlled phase flip executed semantically: negates the listed
/// basis indices (sorted, unique) and counts as a single gate.
struct PhaseFlipOp {
  std::vector<BasisIndex> flip_set;
  bool operator==(const PhaseFlipOp&) const = default;
};

/// Global factor -1.
struct NegateOp {
  bool operator==(const NegateOp&) const = default;
};

using Operation = std::variant<GateOp, ControlledPhaseOp, SwapOp, PhaseFlipOp, NegateOp>;

/// Ordered gate list over a fixed number of qubits. Every qubit and basis
/// index an operation references is checked against n_qubits on insertion.
class CircuitProgram {
 public:
  explicit CircuitProgram(int n_qubits, std::string name = {});

  int n_qubits() const { return n_qubits_; }
  const std::string& name() const { return name_; }
  void set_name(std::string name) { name_ = std::move(name); }
  int iterations() const { return iterations_; }
  void set_iterations(int iterations) { iterations_ = iterations; }

  const std::vector<Operation>& operations() const { return ops_; }
  std::size_t gate_count() const { return ops_.size(); }
  bool empty() const { return ops_.empty(); }

  CircuitProgram& add(Operation op);
  CircuitProgram& gate(const SingleQubitGate& g, int qubit) { return add(GateOp{g, qubit}); }
  CircuitProgram& append(const CircuitProgram& other);

  /// Adjoint: operations reversed, each replaced by its inverse.
  CircuitProgram inverse() const;

  void run(StateVector& state) const;

  /// Executes on a fresh |0...0>.
  StateVector run_from_zero() const;

  bool operator==(const CircuitProgram&) const = default;

 private:
  void validate(const Operation& op) const;

  int n_qubits_;
  std::string name_;
  int iterations_ = 0;
  std::vector<Operation> ops_;
};

/// Gate-list text, one operation per line:
///
///     # qubits <n>
///     # name <name>            (only when non-empty)
///     # iterations <j>
///     H <q> | X <q> | Z <q> | RY <angle> <q>
///     CP <angle> <control> <target>
///     SWAP <a> <b>
///     FLIP <index> <index> ...
///     NEG
///
/// Angles use 17 significant digits so parse_gate_list(export_gate_list(p))
/// reproduces p exactly.
std::string export_gate_list(const CircuitProgram& program);

CircuitProgram parse_gate_list(std::string_view text);

/// Shortest round-tripping decimal for `value` (printf %.17g).
std::string format_angle(double value);

}  // namespace bgrover

#endif  // BGROVER_CIRCUIT_HPP
