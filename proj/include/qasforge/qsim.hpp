#pragma once

#include <Eigen/Dense>

#include <complex>
#include <string>
#include <utility>
#include <vector>

namespace qasforge::qsim {

using Complex = std::complex<double>;

// Basis-index convention used throughout: qubit 0 is the most significant bit
// of the basis index, so |q0 q1 ... q_{n-1}> sits at index
// sum_k q_k * 2^(n-1-k). State dumps and circuit files share this ordering.
struct QuantumState {
  int n_qubits = 0;
  Eigen::VectorXcd amplitudes;

  static QuantumState zero(int n_qubits);
  static QuantumState from_amplitudes(int n_qubits, Eigen::VectorXcd amps);
  Eigen::Index dim() const { return amplitudes.size(); }
  bool is_normalized(double tol = 1e-10) const;
};

enum class GateKind { RX, RY, RZ, CNOT };

bool is_rotation(GateKind kind);
std::string to_string(GateKind kind);
GateKind gate_kind_from_string(const std::string& name);

// One gate: a single-qubit rotation (kind, qubit, angle) or a CNOT
// (control, target). Rotation conventions: R_P(theta) = exp(-i theta P / 2).
struct GateAction {
  GateKind kind = GateKind::RX;
  int qubit = 0;
  int control = 0;
  int target = 0;
  double angle = 0.0;

  static GateAction rotation(GateKind kind, int qubit, double angle);
  static GateAction cnot(int control, int target);
  bool is_rotation() const { return qsim::is_rotation(kind); }
  // Same gate ignoring the angle: kind plus the wires it touches.
  bool same_template(const GateAction& other) const;
};

struct Circuit {
  int n_qubits = 0;
  std::vector<GateAction> gates;

  int rotation_count() const;
  Eigen::VectorXd rotation_angles() const;
  void set_rotation_angles(const Eigen::VectorXd& theta);
};

Eigen::Matrix2cd rotation_matrix(GateKind kind, double angle);

void apply_gate_in_place(Eigen::VectorXcd& amps, int n_qubits, const GateAction& gate);
QuantumState apply_gate(const QuantumState& state, const GateAction& gate);

// Runs the circuit on |0...0>.
QuantumState run_circuit(const Circuit& circuit);

// |<a|b>|^2. Symmetric, invariant under global phase of either argument.
double fidelity(const QuantumState& a, const QuantumState& b);

struct TargetSpec {
  enum class Kind { BellPhiPlus, BellPhiMinus, BellPsiPlus, BellPsiMinus, Ghz };
  Kind kind = Kind::BellPhiPlus;
  int n_qubits = 2;  // width; always 2 for Bell variants

  static TargetSpec parse(const std::string& name);
  std::string name() const;
};

QuantumState make_target_state(const TargetSpec& spec);

// Tensors `state` with |0...0> on the right so it lives in a wider register.
QuantumState embed_in_register(const QuantumState& state, int n_qubits);

struct UnitaryMatrix {
  Eigen::MatrixXcd matrix;
  Eigen::Index dim() const { return matrix.rows(); }
  bool is_unitary(double tol = 1e-12) const;
};

// Full matrix of the circuit; column j is the circuit applied to |j>.
// Capped at 6 qubits.
UnitaryMatrix circuit_unitary(const Circuit& circuit);

// Hilbert-Schmidt test distance 1 - |Tr(V^dag U)|^2 / d^2, in [0, 1].
double hst_cost(const UnitaryMatrix& u, const UnitaryMatrix& v);

// 1 - mean_j |<target_j | U |input_j>|^2 over the (input, target) pairs.
double empirical_hst_loss(const Circuit& circuit,
                          const std::vector<std::pair<QuantumState, QuantumState>>& dataset);

}  // namespace qasforge::qsim
