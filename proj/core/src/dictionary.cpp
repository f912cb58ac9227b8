#include "bgrover/dictionary.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "bgrover/errors.hpp"
#include "bgrover/grover_circuits.hpp"

namespace bgrover {

void DictionarySpec::validate() const {
  if (values.empty()) throw SizeError("dictionary needs at least one array element");
  if (m_value < 1) throw SizeError("value register needs at least one qubit");
  if (n_qubits() > kMaxQubits) {
    throw SizeError("index + value width " + std::to_string(n_qubits()) + " exceeds " +
                    std::to_string(kMaxQubits) + " qubits");
  }
  if (index_prep.kind == IndexPrep::Kind::kBinomial &&
      !(index_prep.omega >= 0.0 && index_prep.omega <= std::numbers::pi)) {
    throw RangeError("index rotation omega must lie in [0, pi]");
  }
}

std::int64_t expected_subset_sum(const std::vector<std::int64_t>& values, BasisIndex index, int m) {
  if (values.size() < 64 && (index >> values.size()) != 0) {
    throw RangeError("index has bits beyond the array length");
  }
  std::int64_t sum = 0;
  for (std::size_t j = 0; j < values.size(); ++j) {
    if ((index >> j) & 1U) sum += values[j];
  }
  return wrap_twos_complement(sum, m);
}

CircuitProgram build_fourier_transform(int n_qubits, QubitRange reg, bool inverse) {
  if (reg.count < 1 || reg.first < 0 || reg.end() > n_qubits) {
    throw RangeError("Fourier register lies outside the circuit");
  }
  CircuitProgram qft(n_qubits, "qft");
  const int m = reg.count;
  for (int i = m - 1; i >= 0; --i) {
    qft.gate(SingleQubitGate::H(), reg.first + i);
    for (int l = i - 1; l >= 0; --l) {
      qft.add(ControlledPhaseOp{reg.first + l, reg.first + i,
                                std::numbers::pi / static_cast<double>(1 << (i - l))});
    }
  }
  for (int i = 0; i < m / 2; ++i) qft.add(SwapOp{reg.first + i, reg.first + m - 1 - i});
  if (!inverse) return qft;
  CircuitProgram iqft = qft.inverse();
  iqft.set_name("iqft");
  return iqft;
}

StateVector& fourier_transform(StateVector& state, QubitRange reg, bool inverse) {
  build_fourier_transform(state.num_qubits(), reg, inverse).run(state);
  return state;
}

CircuitProgram build_value_encoder(const DictionarySpec& spec) {
  spec.validate();
  const int d = spec.n_index();
  const int m = spec.m_value;
  const double modulus = std::ldexp(1.0, m);
  CircuitProgram enc(spec.n_qubits(), "value_encoder");
  for (int t = 0; t < m; ++t) enc.gate(SingleQubitGate::H(), d + t);
  for (int j = 0; j < d; ++j) {
    // reduce a_j mod 2^m first so the phase stays small and exact
    const auto a = static_cast<double>(encode_twos_complement(spec.values[static_cast<std::size_t>(j)], m));
    if (a == 0.0) continue;
    for (int t = 0; t < m; ++t) {
      const double angle = 2 * std::numbers::pi * std::fmod(a * std::ldexp(1.0, t), modulus) / modulus;
      if (angle != 0.0) enc.add(ControlledPhaseOp{j, d + t, angle});
    }
  }
  enc.append(build_fourier_transform(spec.n_qubits(), spec.value_register(), true));
  return enc;
}

CircuitProgram build_dictionary_prep(const DictionarySpec& spec) {
  spec.validate();
  const int d = spec.n_index();
  CircuitProgram prep(spec.n_qubits(), "dictionary_prep");
  for (int q = 0; q < d; ++q) {
    if (spec.index_prep.kind == IndexPrep::Kind::kUniform) {
      prep.gate(SingleQubitGate::H(), q);
    } else {
      prep.gate(SingleQubitGate::RY(spec.index_prep.omega), q);
    }
  }
  prep.append(build_value_encoder(spec));
  return prep;
}

StateVector build_dictionary_state(const DictionarySpec& spec) {
  return build_dictionary_prep(spec).run_from_zero();
}

std::vector<double> conditional_value_distribution(const StateVector& state,
                                                   const DictionarySpec& spec, BasisIndex index) {
  spec.validate();
  if (state.num_qubits() != spec.n_qubits()) throw SizeError("state does not match dictionary layout");
  if (index >> spec.n_index()) throw RangeError("index outside the index register");
  const QubitRange value_reg = spec.value_register();
  std::vector<double> dist(std::size_t{1} << spec.m_value, 0.0);
  double total = 0.0;
  for (BasisIndex v = 0; v < dist.size(); ++v) {
    const BasisIndex basis = index | (v << value_reg.first);
    dist[v] = std::norm(state[basis]);
    total += dist[v];
  }
  if (total > 0.0) {
    for (auto& p : dist) p /= total;
  }
  return dist;
}

}  // namespace bgrover
