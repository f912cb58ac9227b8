#include "bgrover/grover_circuits.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "bgrover/errors.hpp"

namespace bgrover {

namespace {

void check_width(int n) {
  if (n < 1 || n > kMaxQubits) throw SizeError("register width must be in [1, 24]");
}

void check_omega(double omega) {
  if (!(omega >= 0.0 && omega <= std::numbers::pi)) {
    throw RangeError("rotation omega must lie in [0, pi]");
  }
}

}  // namespace

bool ValuePredicate::satisfiable_in_window(int m) const {
  if (m < 1 || m > 62) throw RangeError("register width must be in [1, 62]");
  const std::int64_t lo = -(std::int64_t{1} << (m - 1));
  const std::int64_t hi = (std::int64_t{1} << (m - 1)) - 1;
  if (kind == Kind::kNegative) return true;
  return value >= lo && value <= hi;
}

OracleSpec OracleSpec::exact_target(int n_qubits, const BasisPattern& target, QubitRange reg) {
  check_width(n_qubits);
  if (reg.count < 1 || reg.first < 0 || reg.end() > n_qubits) {
    throw RangeError("oracle register lies outside the state");
  }
  if (target.n_bits() != reg.count) {
    throw RangeError("target '" + target.bits() + "' has " + std::to_string(target.n_bits()) +
                     " bits but the register has " + std::to_string(reg.count));
  }
  OracleSpec spec;
  spec.kind_ = Kind::kExactTarget;
  spec.n_qubits_ = n_qubits;
  spec.reg_ = reg;
  spec.target_ = target;
  spec.build_flip_set();
  return spec;
}

OracleSpec OracleSpec::register_predicate(int n_qubits, QubitRange reg, ValuePredicate predicate) {
  check_width(n_qubits);
  if (reg.count < 1 || reg.first < 0 || reg.end() > n_qubits) {
    throw RangeError("oracle register lies outside the state");
  }
  OracleSpec spec;
  spec.kind_ = Kind::kRegisterPredicate;
  spec.n_qubits_ = n_qubits;
  spec.reg_ = reg;
  spec.predicate_ = predicate;
  spec.build_flip_set();
  return spec;
}

void OracleSpec::build_flip_set() {
  flip_set_.clear();
  const BasisIndex size = BasisIndex{1} << n_qubits_;
  for (BasisIndex i = 0; i < size; ++i) {
    const BasisIndex r = reg_.extract(i);
    const bool marked = kind_ == Kind::kExactTarget
                            ? r == target_.value()
                            : predicate_.holds(decode_twos_complement(r, reg_.count));
    if (marked) flip_set_.push_back(i);
  }
}

CircuitProgram build_uniform_prep(int n) {
  CircuitProgram p(n, "uniform_prep");
  for (int q = 0; q < n; ++q) p.gate(SingleQubitGate::H(), q);
  return p;
}

CircuitProgram build_rotation_prep(int n, double omega) {
  check_omega(omega);
  CircuitProgram p(n, "rotation_prep");
  for (int q = 0; q < n; ++q) p.gate(SingleQubitGate::RY(omega), q);
  return p;
}

CircuitProgram build_binomial_prep(int n, double omega, BinomialForm form) {
  check_omega(omega);
  CircuitProgram p(n, "binomial_prep");
  for (int q = 0; q < n; ++q) {
    if (form == BinomialForm::kRyAfterH) {
      p.gate(SingleQubitGate::H(), q).gate(SingleQubitGate::RY(omega), q);
    } else {
      p.gate(SingleQubitGate::Z(), q).gate(SingleQubitGate::RY(std::numbers::pi / 2 + omega), q);
    }
  }
  return p;
}

CircuitProgram build_oracle(const OracleSpec& spec) {
  if (spec.flip_set().empty()) throw RangeError("oracle marks no basis state");
  CircuitProgram p(spec.n_qubits(), "oracle");
  p.add(PhaseFlipOp{spec.flip_set()});
  return p;
}

CircuitProgram build_diffusion(int n) {
  CircuitProgram p(n, "diffusion");
  p.add(PhaseFlipOp{{0}});
  return p;
}

CircuitProgram build_canonical_oracle(const CircuitProgram& encoder,
                                      const CircuitProgram& simple_oracle) {
  CircuitProgram p(encoder.n_qubits(), "canonical_oracle");
  p.append(encoder).append(simple_oracle).append(encoder.inverse());
  return p;
}

CircuitProgram grover_iterate(const CircuitProgram& prep, const CircuitProgram& oracle,
                              const IterateVariant& variant, bool global_phase) {
  const int n = prep.n_qubits();
  if (oracle.n_qubits() != n) {
    throw SizeError("oracle width " + std::to_string(oracle.n_qubits()) +
                    " does not match preparation width " + std::to_string(n));
  }
  const CircuitProgram a =
      variant.kind == IterateVariant::Kind::kBinomialNative ? build_rotation_prep(n, variant.omega)
                                                             : prep;
  CircuitProgram g(n, "grover_iterate");
  if (variant.kind == IterateVariant::Kind::kBinomialConjugated) {
    const CircuitProgram b = build_binomial_prep(n, variant.omega);
    g.append(b).append(oracle).append(b.inverse());
  } else {
    g.append(oracle);
  }
  g.append(a.inverse()).append(build_diffusion(n)).append(a);
  if (global_phase) g.add(NegateOp{});
  return g;
}

CircuitProgram build_amplification(const Pipeline& pipeline, const OracleSpec& oracle, int j,
                                   bool global_phase) {
  if (j < 0) throw RangeError("iteration count must be non-negative");
  const int n = oracle.n_qubits();
  const CircuitProgram o = build_oracle(oracle);

  CircuitProgram prep = pipeline.kind == Pipeline::Kind::kGjANative
                            ? build_rotation_prep(n, pipeline.omega)
                            : build_uniform_prep(n);
  IterateVariant variant = IterateVariant::uniform();
  if (pipeline.kind == Pipeline::Kind::kBGjA) variant = IterateVariant::conjugated(pipeline.omega);
  if (pipeline.kind == Pipeline::Kind::kGjANative) variant = IterateVariant::native(pipeline.omega);
  const CircuitProgram g = grover_iterate(prep, o, variant, global_phase);

  CircuitProgram program(n);
  program.append(prep);
  for (int it = 0; it < j; ++it) program.append(g);
  if (pipeline.kind == Pipeline::Kind::kBGjA) program.append(build_binomial_prep(n, pipeline.omega));

  switch (pipeline.kind) {
    case Pipeline::Kind::kUniform: program.set_name("uniform"); break;
    case Pipeline::Kind::kBGjA: program.set_name("binomial_b_gj_a"); break;
    case Pipeline::Kind::kGjANative: program.set_name("binomial_native"); break;
  }
  program.set_iterations(j);
  return program;
}

CircuitProgram build_amplification(const CircuitProgram& prep, const OracleSpec& oracle, int j,
                                   bool global_phase) {
  if (j < 0) throw RangeError("iteration count must be non-negative");
  const CircuitProgram g =
      grover_iterate(prep, build_oracle(oracle), IterateVariant::uniform(), global_phase);
  CircuitProgram program(prep.n_qubits(), prep.name().empty() ? "amplification" : prep.name());
  program.append(prep);
  for (int it = 0; it < j; ++it) program.append(g);
  program.set_iterations(j);
  return program;
}

StateVector run_amplification(const Pipeline& pipeline, const OracleSpec& oracle, int j) {
  return build_amplification(pipeline, oracle, j).run_from_zero();
}

double marked_probability(const StateVector& state, const OracleSpec& oracle) {
  if (state.num_qubits() != oracle.n_qubits()) throw SizeError("oracle/state width mismatch");
  double total = 0.0;
  for (BasisIndex i : oracle.flip_set()) total += std::norm(state[i]);
  return total;
}

}  // namespace bgrover
