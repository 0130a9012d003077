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

#include "rphase/resources.hpp"

#include <algorithm>
#include <json.hpp>

#include "rphase/error.hpp"

namespace rphase {

std::string ResourceReport::to_json() const {
  nlohmann::ordered_json j;
  j["t"] = t;
  j["cnot"] = cnot;
  j["h"] = h;
  j["pz"] = pz;
  j["other"] = other;
  j["t_depth"] = t_depth;
  j["ancilla"] = {{"count", ancilla_count}, {"type", ancilla_type}};
  return j.dump();
}

namespace {

bool needs_lowering(const Gate& g) {
  return is_marker(g.kind) || g.has_negative_control() ||
         g.kind == GateKind::TOF;
}

}  // namespace

ResourceReport count_resources(const Circuit& c) {
  ResourceReport r;
  for (auto role : c.roles()) {
    if (role == Role::primary) continue;
    ++r.ancilla_count;
    if (role == Role::dirty_ancilla) r.ancilla_type = "dirty";
    else if (r.ancilla_type == "none") r.ancilla_type = "clean";
  }

  Circuit flat = c;
  if (std::any_of(c.gates().begin(), c.gates().end(), needs_lowering)) {
    try {
      flat = lower(c);
    } catch (const Error& e) {
      if (e.code() != Errc::ancilla_budget) throw;
      // No room in the circuit: borrow scratch clean qubits; only counts are kept.
      std::size_t scratch = 0;
      for (const auto& g : c.gates())
        if (g.kind == GateKind::TOF && g.controls.size() >= 3)
          scratch = std::max(scratch, (g.controls.size() - 1) / 2);
      std::vector<Role> roles = c.roles();
      roles.resize(c.width() + scratch, Role::clean_ancilla);
      Circuit wide(c.width() + static_cast<std::uint32_t>(scratch), roles);
      wide.set_gates(c.gates());
      flat = lower(wide, LowerPolicy{MultiControl::clean, false});
    }
  }

  std::vector<int> level(flat.width(), 0);
  for (const auto& g : flat.gates()) {
    switch (g.kind) {
      case GateKind::T:
      case GateKind::Tdg: ++r.t; break;
      case GateKind::CNOT: ++r.cnot; break;
      case GateKind::H: ++r.h; break;
      case GateKind::P:
      case GateKind::Pdg:
      case GateKind::Z: ++r.pz; break;
      default: ++r.other;
    }
    auto qs = g.qubits();
    if (g.kind == GateKind::T || g.kind == GateKind::Tdg) {
      int& l = level[qs[0].index];
      ++l;
      r.t_depth = std::max(r.t_depth, l);
    } else if (qs.size() > 1) {
      int m = 0;
      for (auto q : qs) m = std::max(m, level[q.index]);
      for (auto q : qs) level[q.index] = m;
    }
  }
  return r;
}

}  // namespace rphase
