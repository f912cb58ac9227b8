#include "bgrover/circuit.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <sstream>

#include "bgrover/errors.hpp"

namespace bgrover {

namespace {

template <class... Ts>
struct Overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
Overloaded(Ts...) -> Overloaded<Ts...>;

const char* gate_mnemonic(GateKind kind) {
  switch (kind) {
    case GateKind::kH: return "H";
    case GateKind::kX: return "X";
    case GateKind::kZ: return "Z";
    case GateKind::kRY: return "RY";
  }
  return "?";
}

int parse_int(const std::string& token, int line_no) {
  std::size_t used = 0;
  int value = 0;
  try {
    value = std::stoi(token, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used != token.size() || token.empty()) {
    throw ParseError("line " + std::to_string(line_no) + ": expected integer, got '" +
                     token + "'");
  }
  return value;
}

double parse_double(const std::string& token, int line_no) {
  std::size_t used = 0;
  double value = 0.0;
  try {
    value = std::stod(token, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used != token.size() || token.empty()) {
    throw ParseError("line " + std::to_string(line_no) + ": expected number, got '" +
                     token + "'");
  }
  return value;
}

BasisIndex parse_index(const std::string& token, int line_no) {
  std::size_t used = 0;
  unsigned long long value = 0;
  try {
    value = std::stoull(token, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used != token.size() || token.empty() || token[0] == '-') {
    throw ParseError("line " + std::to_string(line_no) + ": expected basis index, got '" +
                     token + "'");
  }
  return value;
}

}  // namespace

CircuitProgram::CircuitProgram(int n_qubits, std::string name)
    : n_qubits_(n_qubits), name_(std::move(name)) {
  if (n_qubits < 1 || n_qubits > kMaxQubits) {
    throw SizeError("circuit width must be in [1, 24], got " + std::to_string(n_qubits));
  }
}

void CircuitProgram::validate(const Operation& op) const {
  auto check = [this](int q) {
    if (q < 0 || q >= n_qubits_) {
      throw RangeError("qubit " + std::to_string(q) + " out of range for " +
                       std::to_string(n_qubits_) + "-qubit circuit");
    }
  };
  std::visit(Overloaded{
                 [&](const GateOp& g) {
                   check(g.qubit);
                   if (!std::isfinite(g.gate.angle)) throw RangeError("non-finite angle");
                 },
                 [&](const ControlledPhaseOp& cp) {
                   check(cp.control);
                   check(cp.target);
                   if (cp.control == cp.target) {
                     throw RangeError("controlled phase needs distinct qubits");
                   }
                   if (!std::isfinite(cp.angle)) throw RangeError("non-finite angle");
                 },
                 [&](const SwapOp& s) {
                   check(s.qubit_a);
                   check(s.qubit_b);
                 },
                 [&](const PhaseFlipOp& f) {
                   const BasisIndex limit = BasisIndex{1} << n_qubits_;
                   for (BasisIndex i : f.flip_set) {
                     if (i >= limit) {
                       throw RangeError("flip index " + std::to_string(i) + " out of range");
                     }
                   }
                   if (!std::is_sorted(f.flip_set.begin(), f.flip_set.end()) ||
                       std::adjacent_find(f.flip_set.begin(), f.flip_set.end()) !=
                           f.flip_set.end()) {
                     throw RangeError("flip set must be sorted and duplicate-free");
                   }
                 },
                 [](const NegateOp&) {},
             },
             op);
}

CircuitProgram& CircuitProgram::add(Operation op) {
  validate(op);
  ops_.push_back(std::move(op));
  return *this;
}

CircuitProgram& CircuitProgram::append(const CircuitProgram& other) {
  if (other.n_qubits_ != n_qubits_) {
    throw SizeError("cannot append a " + std::to_string(other.n_qubits_) +
                    "-qubit program to a " + std::to_string(n_qubits_) + "-qubit program");
  }
  ops_.insert(ops_.end(), other.ops_.begin(), other.ops_.end());
  return *this;
}

CircuitProgram CircuitProgram::inverse() const {
  CircuitProgram inv(n_qubits_, name_.empty() ? name_ : name_ + "_dg");
  inv.iterations_ = iterations_;
  inv.ops_.reserve(ops_.size());
  for (auto it = ops_.rbegin(); it != ops_.rend(); ++it) {
    Operation op = *it;
    if (auto* g = std::get_if<GateOp>(&op); g && g->gate.kind == GateKind::kRY) {
      g->gate.angle = -g->gate.angle;
    } else if (auto* cp = std::get_if<ControlledPhaseOp>(&op)) {
      cp->angle = -cp->angle;
    }
    inv.ops_.push_back(std::move(op));
  }
  return inv;
}

void CircuitProgram::run(StateVector& state) const {
  if (state.num_qubits() != n_qubits_) {
    throw SizeError("program width " + std::to_string(n_qubits_) +
                    " does not match state width " + std::to_string(state.num_qubits()));
  }
  for (const auto& op : ops_) {
    std::visit(Overloaded{
                   [&](const GateOp& g) { state.apply_gate(g.gate, g.qubit); },
                   [&](const ControlledPhaseOp& cp) {
                     state.apply_controlled_phase(cp.control, cp.target, cp.angle);
                   },
                   [&](const SwapOp& s) { state.apply_swap(s.qubit_a, s.qubit_b); },
                   [&](const PhaseFlipOp& f) { state.apply_phase_flip(f.flip_set); },
                   [&](const NegateOp&) { state.negate(); },
               },
               op);
  }
}

StateVector CircuitProgram::run_from_zero() const {
  StateVector state = StateVector::zero(n_qubits_);
  run(state);
  return state;
}

std::string format_angle(double value) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", value);
  return buf;
}

std::string export_gate_list(const CircuitProgram& program) {
  std::ostringstream out;
  out << "# qubits " << program.n_qubits() << '\n';
  if (!program.name().empty()) out << "# name " << program.name() << '\n';
  out << "# iterations " << program.iterations() << '\n';
  for (const auto& op : program.operations()) {
    std::visit(Overloaded{
                   [&](const GateOp& g) {
                     out << gate_mnemonic(g.gate.kind);
                     if (g.gate.kind == GateKind::kRY) out << ' ' << format_angle(g.gate.angle);
                     out << ' ' << g.qubit;
                   },
                   [&](const ControlledPhaseOp& cp) {
                     out << "CP " << format_angle(cp.angle) << ' ' << cp.control << ' '
                         << cp.target;
                   },
                   [&](const SwapOp& s) { out << "SWAP " << s.qubit_a << ' ' << s.qubit_b; },
                   [&](const PhaseFlipOp& f) {
                     out << "FLIP";
                     for (BasisIndex i : f.flip_set) out << ' ' << i;
                   },
                   [&](const NegateOp&) { out << "NEG"; },
               },
               op);
    out << '\n';
  }
  return out.str();
}

CircuitProgram parse_gate_list(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::string line;
  int line_no = 0;
  int n_qubits = -1;
  std::string name;
  int iterations = 0;
  std::vector<Operation> ops;

  while (std::getline(in, line)) {
    ++line_no;
    std::istringstream fields(line);
    std::vector<std::string> tok;
    for (std::string t; fields >> t;) tok.push_back(t);
    if (tok.empty()) continue;

    if (tok[0] == "#") {
      if (tok.size() >= 3 && tok[1] == "qubits") {
        n_qubits = parse_int(tok[2], line_no);
      } else if (tok.size() >= 2 && tok[1] == "name") {
        const auto pos = line.find("name") + 5;
        name = pos <= line.size() ? line.substr(pos) : std::string{};
      } else if (tok.size() >= 3 && tok[1] == "iterations") {
        iterations = parse_int(tok[2], line_no);
      }
      continue;
    }

    auto expect = [&](std::size_t n) {
      if (tok.size() != n) {
        throw ParseError("line " + std::to_string(line_no) + ": '" + tok[0] + "' takes " +
                         std::to_string(n - 1) + " operand(s)");
      }
    };
    const std::string& op = tok[0];
    if (op == "H" || op == "X" || op == "Z") {
      expect(2);
      const GateKind kind = op == "H" ? GateKind::kH : op == "X" ? GateKind::kX : GateKind::kZ;
      ops.emplace_back(GateOp{{kind, 0.0}, parse_int(tok[1], line_no)});
    } else if (op == "RY") {
      expect(3);
      ops.emplace_back(GateOp{SingleQubitGate::RY(parse_double(tok[1], line_no)),
                              parse_int(tok[2], line_no)});
    } else if (op == "CP") {
      expect(4);
      ops.emplace_back(ControlledPhaseOp{parse_int(tok[2], line_no), parse_int(tok[3], line_no),
                                         parse_double(tok[1], line_no)});
    } else if (op == "SWAP") {
      expect(3);
      ops.emplace_back(SwapOp{parse_int(tok[1], line_no), parse_int(tok[2], line_no)});
    } else if (op == "FLIP") {
      PhaseFlipOp flip;
      for (std::size_t i = 1; i < tok.size(); ++i) flip.flip_set.push_back(parse_index(tok[i], line_no));
      ops.emplace_back(std::move(flip));
    } else if (op == "NEG") {
      expect(1);
      ops.emplace_back(NegateOp{});
    } else {
      throw ParseError("line " + std::to_string(line_no) + ": unknown operation '" + op + "'");
    }
  }
  if (n_qubits < 0) throw ParseError("gate list is missing the '# qubits <n>' header");

  CircuitProgram program(n_qubits, name);
  program.set_iterations(iterations);
  for (auto& op : ops) program.add(std::move(op));
  return program;
}

}  // namespace bgrover
