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

#include "rphase/circuit.hpp"

#include <algorithm>
#include <set>
#include <sstream>

#include "rphase/error.hpp"

namespace rphase {

namespace {

struct KindInfo {
  GateKind kind;
  const char* name;
  int arity;
};

constexpr KindInfo kKinds[] = {
    {GateKind::X, "x", 0},         {GateKind::Y, "y", 0},
    {GateKind::Z, "z", 0},         {GateKind::P, "s", 0},
    {GateKind::Pdg, "sdg", 0},     {GateKind::T, "t", 0},
    {GateKind::Tdg, "tdg", 0},     {GateKind::H, "h", 0},
    {GateKind::RY, "ry", 0},       {GateKind::CNOT, "cx", 0},
    {GateKind::CZ, "cz", 0},       {GateKind::TOF, "tof", 0},
    {GateKind::RTOF3L, "rtof3l", 3}, {GateKind::RTOF3S, "rtof3s", 3},
    {GateKind::SRTOF3, "srtof3", 3}, {GateKind::SRTS3, "srts3", 3},
    {GateKind::RTOF4L, "rtof4l", 4}, {GateKind::RT4S, "rt4s", 4},
};

const KindInfo& info(GateKind k) {
  for (const auto& i : kKinds)
    if (i.kind == k) return i;
  throw Error(Errc::internal, "unknown gate kind");
}

}  // namespace

bool is_marker(GateKind k) { return info(k).arity > 0; }
int marker_arity(GateKind k) { return info(k).arity; }
const char* gate_name(GateKind k) { return info(k).name; }

std::optional<GateKind> gate_kind_from_name(const std::string& name) {
  for (const auto& i : kKinds)
    if (name == i.name) return i.kind;
  return std::nullopt;
}

Gate Gate::single(GateKind k, std::uint32_t q) {
  Gate g;
  g.kind = k;
  g.targets = {QubitId{q}};
  return g;
}

Gate Gate::ry(std::uint32_t q, int pi_quarters) {
  Gate g = single(GateKind::RY, q);
  g.angle = pi_quarters;
  return g;
}

Gate Gate::cx(std::uint32_t c, std::uint32_t t, bool positive) {
  Gate g = single(GateKind::CNOT, t);
  g.controls = {Control{QubitId{c}, positive}};
  return g;
}

Gate Gate::cz(std::uint32_t c, std::uint32_t t, bool positive) {
  Gate g = single(GateKind::CZ, t);
  g.controls = {Control{QubitId{c}, positive}};
  return g;
}

Gate Gate::tof(const std::vector<std::uint32_t>& controls, std::uint32_t t) {
  std::vector<Control> cs;
  for (auto c : controls) cs.push_back(Control{QubitId{c}, true});
  return tof(cs, t);
}

Gate Gate::tof(const std::vector<Control>& controls, std::uint32_t t) {
  Gate g = single(GateKind::TOF, t);
  g.controls = controls;
  return g;
}

Gate Gate::marker(GateKind k, const std::vector<std::uint32_t>& qubits,
                  bool dagger) {
  if (!is_marker(k)) throw Error(Errc::invalid_argument, "not a marker kind");
  if (static_cast<int>(qubits.size()) != marker_arity(k))
    throw Error(Errc::arity_mismatch,
                std::string("arity mismatch for ") + gate_name(k));
  Gate g = single(k, qubits.back());
  for (std::size_t i = 0; i + 1 < qubits.size(); ++i)
    g.controls.push_back(Control{QubitId{qubits[i]}, true});
  g.dagger = dagger;
  return g;
}

std::vector<QubitId> Gate::qubits() const {
  std::vector<QubitId> qs;
  for (const auto& c : controls) qs.push_back(c.qubit);
  qs.insert(qs.end(), targets.begin(), targets.end());
  return qs;
}

bool Gate::touches(QubitId q) const {
  for (const auto& c : controls)
    if (c.qubit == q) return true;
  return std::find(targets.begin(), targets.end(), q) != targets.end();
}

bool Gate::has_negative_control() const {
  return std::any_of(controls.begin(), controls.end(),
                     [](const Control& c) { return !c.positive; });
}

Gate Gate::inverse() const {
  Gate g = *this;
  switch (kind) {
    case GateKind::P: g.kind = GateKind::Pdg; break;
    case GateKind::Pdg: g.kind = GateKind::P; break;
    case GateKind::T: g.kind = GateKind::Tdg; break;
    case GateKind::Tdg: g.kind = GateKind::T; break;
    case GateKind::RY: g.angle = -angle; break;
    case GateKind::Y:  // Y is self-inverse
    default: break;
  }
  if (is_marker(kind)) g.dagger = !dagger;
  return g;
}

std::string Gate::to_string() const {
  std::ostringstream os;
  os << gate_name(kind);
  if (dagger) os << "^-1";
  if (kind == GateKind::RY) os << "(" << angle << "*pi/4)";
  os << "(";
  bool first = true;
  for (const auto& c : controls) {
    os << (first ? "" : ",") << (c.positive ? "" : "~") << c.qubit.index;
    first = false;
  }
  if (!controls.empty()) os << ";";
  first = true;
  for (const auto& t : targets) {
    os << (first ? "" : ",") << t.index;
    first = false;
  }
  os << ")";
  return os.str();
}

const char* role_name(Role r) {
  switch (r) {
    case Role::primary: return "primary";
    case Role::clean_ancilla: return "clean";
    case Role::dirty_ancilla: return "dirty";
  }
  return "primary";
}

std::optional<Role> role_from_name(const std::string& s) {
  if (s == "primary") return Role::primary;
  if (s == "clean") return Role::clean_ancilla;
  if (s == "dirty") return Role::dirty_ancilla;
  return std::nullopt;
}

void validate_gate(const Gate& g, std::uint32_t width) {
  if (g.targets.size() != 1)
    throw Error(Errc::invalid_argument, "gate must have exactly one target");
  int arity = marker_arity(g.kind);
  std::size_t n_controls = g.controls.size();
  switch (g.kind) {
    case GateKind::CNOT:
    case GateKind::CZ:
      if (n_controls != 1)
        throw Error(Errc::invalid_argument, "two-qubit gate needs one control");
      break;
    case GateKind::TOF: break;
    default:
      if (arity > 0) {
        if (static_cast<int>(n_controls) + 1 != arity)
          throw Error(Errc::arity_mismatch,
                      std::string("arity mismatch for ") + gate_name(g.kind));
        if (g.has_negative_control())
          throw Error(Errc::invalid_argument,
                      "marker gates take positive controls only");
      } else if (n_controls != 0) {
        throw Error(Errc::invalid_argument,
                    std::string(gate_name(g.kind)) + " takes no controls");
      }
  }
  if (g.kind != GateKind::RY && g.angle != 0)
    throw Error(Errc::invalid_argument, "angle on a non-rotation gate");
  if (arity == 0 && g.dagger)
    throw Error(Errc::invalid_argument, "dagger flag on a non-marker gate");
  std::set<QubitId> seen;
  for (auto q : g.qubits()) {
    if (q.index >= width)
      throw Error(Errc::invalid_argument,
                  "qubit " + std::to_string(q.index) + " out of range in " +
                      g.to_string());
    if (!seen.insert(q).second)
      throw Error(Errc::invalid_argument,
                  "repeated qubit in " + g.to_string());
  }
}

Circuit::Circuit(std::uint32_t width)
    : width_(width), roles_(width, Role::primary) {}

Circuit::Circuit(std::uint32_t width, std::vector<Role> roles)
    : width_(width), roles_(std::move(roles)) {
  if (roles_.size() != width_)
    throw Error(Errc::invalid_argument, "role list does not match width");
}

Circuit& Circuit::add(Gate g) {
  validate_gate(g, width_);
  gates_.push_back(std::move(g));
  return *this;
}

Circuit& Circuit::add(const Circuit& other) {
  if (other.width_ > width_)
    throw Error(Errc::invalid_argument, "appended circuit is wider");
  for (const auto& g : other.gates_) add(g);
  return *this;
}

void Circuit::set_role(QubitId q, Role r) {
  if (q.index >= width_) throw Error(Errc::invalid_argument, "role out of range");
  roles_[q.index] = r;
}

void Circuit::set_gates(std::vector<Gate> gates) {
  for (const auto& g : gates) validate_gate(g, width_);
  gates_ = std::move(gates);
}

std::vector<QubitId> Circuit::qubits_with_role(Role r) const {
  std::vector<QubitId> out;
  for (std::uint32_t q = 0; q < width_; ++q)
    if (roles_[q] == r) out.push_back(QubitId{q});
  return out;
}

bool Circuit::has_markers() const {
  return std::any_of(gates_.begin(), gates_.end(),
                     [](const Gate& g) { return is_marker(g.kind); });
}

Circuit inverse(const Circuit& c) {
  std::vector<Gate> gates;
  gates.reserve(c.size());
  for (auto it = c.gates().rbegin(); it != c.gates().rend(); ++it)
    gates.push_back(it->inverse());
  Circuit out(c.width(), c.roles());
  out.set_gates(std::move(gates));
  return out;
}

const char* equivalence_name(Equivalence e) {
  switch (e) {
    case Equivalence::exact: return "exact";
    case Equivalence::global_phase: return "global";
    case Equivalence::relative_phase: return "relative";
    case Equivalence::special_form: return "special";
  }
  return "exact";
}

std::optional<Equivalence> equivalence_from_name(const std::string& s) {
  if (s == "exact") return Equivalence::exact;
  if (s == "global" || s == "global_phase") return Equivalence::global_phase;
  if (s == "relative" || s == "relative_phase") return Equivalence::relative_phase;
  if (s == "special" || s == "special_form") return Equivalence::special_form;
  return std::nullopt;
}

void TargetSpec::validate() const {
  std::set<QubitId> seen;
  for (const auto& c : controls)
    if (!seen.insert(c.qubit).second)
      throw Error(Errc::invalid_argument, "repeated control in target spec");
  if (op != TargetOp::identity && !target)
    throw Error(Errc::invalid_argument, "target spec needs a target qubit");
  if (target && !seen.insert(*target).second)
    throw Error(Errc::invalid_argument, "target is also a control");
  for (auto q : xprime)
    if (!seen.count(q))
      throw Error(Errc::invalid_argument,
                  "special-form qubit outside controls and target");
}

TargetSpec TargetSpec::tof(const std::vector<std::uint32_t>& controls,
                           std::uint32_t target, Equivalence eq) {
  TargetSpec s;
  for (auto c : controls) s.controls.push_back(Control{QubitId{c}, true});
  s.target = QubitId{target};
  s.equivalence = eq;
  if (eq == Equivalence::relative_phase) s.kind = TargetKind::rtof;
  if (eq == Equivalence::special_form) s.kind = TargetKind::srtof;
  return s;
}

TargetSpec TargetSpec::identity() {
  TargetSpec s;
  s.op = TargetOp::identity;
  return s;
}

}  // namespace rphase
