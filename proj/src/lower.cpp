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

#include <map>
#include <mutex>
#include <set>

#include "rphase/circuit.hpp"
#include "rphase/constructions.hpp"
#include "rphase/error.hpp"

namespace rphase {

namespace {

// Gates of a TOF^n construction in its own qubit numbering, cached.
const Construction& multi_control_template(int n, bool dirty) {
  static std::mutex mu;
  static std::map<std::pair<int, bool>, Construction> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto key = std::make_pair(n, dirty);
  auto it = cache.find(key);
  if (it == cache.end()) {
    Construction c = !dirty ? tofn_clean(n) : (n == 4 ? tof4_dirty() : tofn_dirty(n));
    it = cache.emplace(key, std::move(c)).first;
  }
  return it->second;
}

int ancillas_needed(int n) { return (n - 3 + 1) / 2; }

class Lowerer {
 public:
  Lowerer(const Circuit& c, const LowerPolicy& p) : src_(c), policy_(p) {
    for (const auto& g : c.gates())
      for (auto q : g.qubits()) touched_.insert(q);
  }

  std::vector<Gate> run() {
    for (const auto& g : src_.gates()) lower_gate(g);
    return std::move(out_);
  }

 private:
  void emit(const Gate& g) { out_.push_back(g); }

  void lower_gate(const Gate& g) {
    std::vector<std::uint32_t> flips;
    for (const auto& c : g.controls)
      if (!c.positive) flips.push_back(c.qubit.index);
    for (auto q : flips) emit(Gate::x(q));
    Gate pos = g;
    for (auto& c : pos.controls) c.positive = true;
    lower_positive(pos);
    for (auto q : flips) emit(Gate::x(q));
  }

  void lower_positive(const Gate& g) {
    if (is_marker(g.kind)) {
      for (auto& e : marker_expansion(g)) emit(e);
      return;
    }
    if (g.kind != GateKind::TOF) {
      emit(g);
      return;
    }
    const std::uint32_t t = g.targets[0].index;
    const std::size_t nc = g.controls.size();
    if (nc == 0) return emit(Gate::x(t));
    if (nc == 1) return emit(Gate::cx(g.controls[0].qubit.index, t));
    if (policy_.keep_toffoli) return emit(g);
    if (nc == 2) {
      for (auto& e : toffoli3_gates(g.controls[0].qubit.index,
                                    g.controls[1].qubit.index, t))
        emit(e);
      return;
    }
    lower_multi(g);
  }

  void lower_multi(const Gate& g) {
    const int n = static_cast<int>(g.controls.size()) + 1;
    const int need = ancillas_needed(n);
    std::vector<std::uint32_t> clean, idle;
    for (std::uint32_t q = 0; q < src_.width(); ++q) {
      if (g.touches(QubitId{q})) continue;
      idle.push_back(q);
      if (src_.roles()[q] == Role::clean_ancilla && !touched_.count(QubitId{q}))
        clean.push_back(q);
    }
    bool dirty;
    switch (policy_.multi_control) {
      case MultiControl::none:
        throw Error(Errc::no_construction,
                    "no construction for gate " + g.to_string());
      case MultiControl::clean: dirty = false; break;
      case MultiControl::dirty: dirty = true; break;
      default: dirty = static_cast<int>(clean.size()) < need;
    }
    const auto& pool = dirty ? idle : clean;
    if (static_cast<int>(pool.size()) < need)
      throw Error(Errc::ancilla_budget,
                  "ancilla budget exceeded for " + g.to_string() + ": need " +
                      std::to_string(need) + (dirty ? " idle" : " clean") +
                      " qubits, have " + std::to_string(pool.size()));
    const Construction& tpl = multi_control_template(n, dirty);
    std::vector<std::uint32_t> map(tpl.circuit.width(), 0);
    for (std::size_t i = 0; i < tpl.target.controls.size(); ++i)
      map[tpl.target.controls[i].qubit.index] = g.controls[i].qubit.index;
    map[tpl.target.target->index] = g.targets[0].index;
    std::size_t next = 0;
    for (std::uint32_t q = 0; q < tpl.circuit.width(); ++q)
      if (tpl.circuit.roles()[q] != Role::primary) map[q] = pool[next++];
    for (Gate e : tpl.circuit.gates()) {
      for (auto& c : e.controls) c.qubit.index = map[c.qubit.index];
      for (auto& q : e.targets) q.index = map[q.index];
      emit(e);
    }
  }

  const Circuit& src_;
  LowerPolicy policy_;
  std::set<QubitId> touched_;
  std::vector<Gate> out_;
};

}  // namespace

Circuit lower(const Circuit& c, const LowerPolicy& policy) {
  Circuit out(c.width(), c.roles());
  out.set_gates(Lowerer(c, policy).run());
  return out;
}

}  // namespace rphase
