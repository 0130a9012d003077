// Copyright 2026 The rphase Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace rphase {

struct QubitId {
  std::uint32_t index = 0;
  auto operator<=>(const QubitId&) const = default;
};

struct Control {
  QubitId qubit;
  bool positive = true;
  bool operator==(const Control&) const = default;
};

enum class GateKind {
  X, Y, Z, P, Pdg, T, Tdg, H, RY, CNOT, CZ, TOF,
  // Markers: fixed-arity relative-phase Toffoli blocks.
  RTOF3L,  // 9-gate relative-phase Toffoli
  RTOF3S,  // its 5-gate prefix
  SRTOF3,  // controlled-controlled-iX
  SRTS3,   // 9-gate prefix of the exact Toffoli
  RTOF4L,  // 18-gate relative-phase Toffoli-4
  RT4S,    // its 10-gate prefix
};

bool is_marker(GateKind k);
// Number of qubits a marker acts on; 0 for non-markers.
int marker_arity(GateKind k);
// Lower-case mnemonic used in QASM metadata, JSON and messages.
const char* gate_name(GateKind k);
std::optional<GateKind> gate_kind_from_name(const std::string& name);

/**
 * One gate. Controls are listed in `controls`, the acted-on qubit(s) in
 * `targets`. For markers the last qubit is the target and the order of
 * the controls is significant.
 */
struct Gate {
  GateKind kind = GateKind::X;
  std::vector<Control> controls;
  std::vector<QubitId> targets;
  int angle = 0;        // RY only, in units of pi/4
  bool dagger = false;  // markers only

  bool operator==(const Gate&) const = default;

  static Gate single(GateKind k, std::uint32_t q);
  static Gate x(std::uint32_t q) { return single(GateKind::X, q); }
  static Gate y(std::uint32_t q) { return single(GateKind::Y, q); }
  static Gate z(std::uint32_t q) { return single(GateKind::Z, q); }
  static Gate p(std::uint32_t q) { return single(GateKind::P, q); }
  static Gate pdg(std::uint32_t q) { return single(GateKind::Pdg, q); }
  static Gate t(std::uint32_t q) { return single(GateKind::T, q); }
  static Gate tdg(std::uint32_t q) { return single(GateKind::Tdg, q); }
  static Gate h(std::uint32_t q) { return single(GateKind::H, q); }
  static Gate ry(std::uint32_t q, int pi_quarters);
  static Gate cx(std::uint32_t c, std::uint32_t t, bool positive = true);
  static Gate cz(std::uint32_t c, std::uint32_t t, bool positive = true);
  static Gate tof(const std::vector<std::uint32_t>& controls, std::uint32_t t);
  static Gate tof(const std::vector<Control>& controls, std::uint32_t t);
  // Qubits in marker order: controls then target.
  static Gate marker(GateKind k, const std::vector<std::uint32_t>& qubits,
                     bool dagger = false);

  // All qubits touched, controls first.
  std::vector<QubitId> qubits() const;
  bool touches(QubitId q) const;
  bool has_negative_control() const;
  Gate inverse() const;
  std::string to_string() const;
};

enum class Role { primary, clean_ancilla, dirty_ancilla };
const char* role_name(Role r);
std::optional<Role> role_from_name(const std::string& s);

class Circuit {
 public:
  Circuit() = default;
  explicit Circuit(std::uint32_t width);
  Circuit(std::uint32_t width, std::vector<Role> roles);

  std::uint32_t width() const { return width_; }
  const std::vector<Gate>& gates() const { return gates_; }
  const std::vector<Role>& roles() const { return roles_; }
  std::size_t size() const { return gates_.size(); }
  bool empty() const { return gates_.empty(); }
  const Gate& operator[](std::size_t i) const { return gates_[i]; }

  // Validates qubit bounds, distinctness and marker arity.
  Circuit& add(Gate g);
  Circuit& add(const Circuit& other);  // same width, gates appended
  void set_role(QubitId q, Role r);
  void set_gates(std::vector<Gate> gates);
  std::vector<QubitId> qubits_with_role(Role r) const;
  bool has_markers() const;

  bool operator==(const Circuit&) const = default;

 private:
  std::uint32_t width_ = 0;
  std::vector<Gate> gates_;
  std::vector<Role> roles_;
};

void validate_gate(const Gate& g, std::uint32_t width);
Circuit inverse(const Circuit& c);

enum class TargetKind { tof, rtof, srtof };
enum class TargetOp { x, z, s, identity };
enum class Equivalence { exact, global_phase, relative_phase, special_form };

const char* equivalence_name(Equivalence e);
std::optional<Equivalence> equivalence_from_name(const std::string& s);

/// What a circuit claims to implement.
struct TargetSpec {
  TargetKind kind = TargetKind::tof;
  TargetOp op = TargetOp::x;
  std::vector<Control> controls;
  std::optional<QubitId> target;
  Equivalence equivalence = Equivalence::exact;
  std::vector<QubitId> xprime;

  void validate() const;
  static TargetSpec tof(const std::vector<std::uint32_t>& controls,
                        std::uint32_t target,
                        Equivalence eq = Equivalence::exact);
  static TargetSpec identity();
};

enum class MultiControl { none, clean, dirty, automatic };

struct LowerPolicy {
  MultiControl multi_control = MultiControl::automatic;
  // Leave TOF gates in place (the simulator handles them natively).
  bool keep_toffoli = false;
};

/**
 * Expands markers, negative controls and TOF gates into
 * {X,Y,Z,P,Pdg,T,Tdg,H,RY,CNOT,CZ}. Multi-control TOFs use ancillae
 * declared in the circuit's roles that no original gate touches (clean),
 * or any idle qubit (dirty).
 */
Circuit lower(const Circuit& c, const LowerPolicy& policy = {});

}  // namespace rphase
