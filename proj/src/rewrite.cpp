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

#include "rphase/rewrite.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <numeric>
#include <set>
#include <sstream>

#include "rphase/constructions.hpp"
#include "rphase/error.hpp"
#include "rphase/resources.hpp"
#include "rphase/verify.hpp"

namespace rphase {

const char* proposition_name(Proposition p) {
  switch (p) {
    case Proposition::prop1: return "prop1";
    case Proposition::prop2: return "prop2";
    case Proposition::prop3: return "prop3";
    case Proposition::none: return "none";
  }
  return "none";
}

namespace {

bool same_toffoli(const Gate& g, const Gate& h) {
  if (g.kind != GateKind::TOF || h.kind != GateKind::TOF) return false;
  if (g.targets != h.targets || g.controls.size() != h.controls.size()) return false;
  auto key = [](const Control& c) { return std::make_pair(c.qubit, c.positive); };
  std::vector<std::pair<QubitId, bool>> a, b;
  for (const auto& c : g.controls) a.push_back(key(c));
  for (const auto& c : h.controls) b.push_back(key(c));
  std::sort(a.begin(), a.end());
  std::sort(b.begin(), b.end());
  return a == b;
}

bool is_phase_gate(GateKind k) {
  return k == GateKind::Z || k == GateKind::P || k == GateKind::Pdg || k == GateKind::T ||
         k == GateKind::Tdg || k == GateKind::CZ;
}

// The gate commutes with any diagonal on q: q is one of its controls, or
// the gate itself is diagonal.
bool uses_diagonally(const Gate& g, QubitId q) {
  for (const auto& c : g.controls)
    if (c.qubit == q) return true;
  return is_phase_gate(g.kind);
}

}  // namespace

std::vector<ConjugationMatch> find_conjugations(const Circuit& c) {
  std::vector<ConjugationMatch> out;
  const auto& gs = c.gates();
  for (std::size_t i = 0; i < gs.size(); ++i) {
    if (gs[i].kind != GateKind::TOF) continue;
    for (std::size_t j = i + 1; j < gs.size(); ++j) {
      if (!same_toffoli(gs[i], gs[j])) continue;
      ConjugationMatch m;
      m.left_index = i;
      m.right_index = j;
      m.middle.assign(gs.begin() + static_cast<std::ptrdiff_t>(i + 1),
                      gs.begin() + static_cast<std::ptrdiff_t>(j));
      m.a = gs[i].targets[0];
      for (const auto& ctl : gs[i].controls) m.x.push_back(ctl.qubit);
      bool a_touched = false, a_diagonal = true;
      std::set<QubitId> touched;
      for (const auto& g : m.middle) {
        for (auto q : g.qubits()) touched.insert(q);
        if (g.touches(m.a)) {
          a_touched = true;
          if (!uses_diagonally(g, m.a)) a_diagonal = false;
        }
      }
      for (auto q : m.x) (touched.count(q) ? m.y : m.z).push_back(q);
      if (m.y.empty() && a_diagonal) {
        m.classification = Proposition::prop1;
        m.z.clear();
      } else if (!a_touched && !m.y.empty()) {
        m.classification = Proposition::prop2;
      } else if (a_touched && !m.z.empty()) {
        m.classification = Proposition::prop3;
        m.w.swap(m.z);
        m.z = m.y;
        m.y.clear();
      }
      out.push_back(std::move(m));
    }
  }
  return out;
}

const std::vector<ImplementationInfo>& implementations() {
  static const std::vector<ImplementationInfo> v = {
      {Implementation::toffoli, "toffoli", GateKind::TOF, 0, {}},
      {Implementation::rtof3_long, "rtof3_long", GateKind::RTOF3L, 3, {}},
      {Implementation::srtof3_ccix, "srtof3_ccix", GateKind::SRTOF3, 3, {}},
      {Implementation::rtof4_long, "rtof4_long", GateKind::RTOF4L, 4, {}},
      {Implementation::srts3, "srts3", GateKind::SRTS3, 3, {0, 2}},
      {Implementation::rts3, "rts3", GateKind::RTOF3S, 3, {1, 2}},
      {Implementation::rt4s, "rt4s", GateKind::RT4S, 4, {1, 2, 3}},
  };
  return v;
}

const ImplementationInfo& implementation_info(Implementation id) {
  for (const auto& i : implementations())
    if (i.id == id) return i;
  throw Error(Errc::internal, "unknown implementation");
}

namespace {

// Unitary of the relative-phase part (the marker without its trailing V).
const PhasePermutation<RingElement>& rtof_part(Implementation id) {
  static std::mutex mu;
  static std::map<Implementation, PhasePermutation<RingElement>> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto it = cache.find(id);
  if (it != cache.end()) return it->second;
  Construction c;
  switch (id) {
    case Implementation::rtof3_long:
    case Implementation::rts3: c = rtof3_long(); break;
    case Implementation::srtof3_ccix: c = srtof3_ccix(); break;
    case Implementation::rtof4_long:
    case Implementation::rt4s: c = rtof4_long(); break;
    default: c = toffoli3();
  }
  auto u = std::get<PhasePermutation<RingElement>>(unitary_columns<RingElement>(c.circuit));
  return cache.emplace(id, std::move(u)).first->second;
}

enum class FitResult { ok, phase, v_support };

FitResult check_fit(const ConjugationMatch& m, const ImplementationInfo& info,
                    const std::vector<QubitId>& order) {
  const int arity = info.arity;
  auto slot_qubit = [&](int s) { return s == arity - 1 ? m.a : order[s]; };
  auto in = [](const std::vector<QubitId>& v, QubitId q) {
    return std::find(v.begin(), v.end(), q) != v.end();
  };
  for (int s : info.v_slots) {
    QubitId q = slot_qubit(s);
    bool ok = false;
    switch (m.classification) {
      case Proposition::prop1: ok = in(m.x, q); break;
      case Proposition::prop2: ok = in(m.z, q) || q == m.a; break;
      case Proposition::prop3: ok = in(m.w, q); break;
      default: ok = false;
    }
    if (!ok) return FitResult::v_support;
  }
  std::vector<QubitId> xprime;
  if (m.classification == Proposition::prop1) return FitResult::ok;
  for (int s = 0; s < arity; ++s) {
    QubitId q = slot_qubit(s);
    bool wanted = m.classification == Proposition::prop2
                      ? in(m.y, q)
                      : (in(m.z, q) || q == m.a);
    if (wanted) xprime.push_back(QubitId{static_cast<std::uint32_t>(s)});
  }
  std::vector<std::uint32_t> ctl(arity - 1);
  std::iota(ctl.begin(), ctl.end(), 0u);
  TargetSpec spec = TargetSpec::tof(ctl, static_cast<std::uint32_t>(arity - 1));
  return is_special_form(rtof_part(info.id), xprime, spec) ? FitResult::ok : FitResult::phase;
}

// First control order under which the implementation fits, if any.
std::optional<std::vector<QubitId>> find_order(const ConjugationMatch& m,
                                               const ImplementationInfo& info,
                                               FitResult* worst = nullptr) {
  std::vector<QubitId> order = m.x;
  std::sort(order.begin(), order.end());
  FitResult seen = FitResult::v_support;
  do {
    FitResult r = check_fit(m, info, order);
    if (r == FitResult::ok) return order;
    if (r == FitResult::phase) seen = FitResult::phase;
  } while (std::next_permutation(order.begin(), order.end()));
  if (worst) *worst = seen;
  return std::nullopt;
}

bool marker_usable(const Circuit& c, const ConjugationMatch& m, const ImplementationInfo& info) {
  if (info.id == Implementation::toffoli) return true;
  const Gate& g = c.gates()[m.left_index];
  return static_cast<int>(g.controls.size()) + 1 == info.arity && !g.has_negative_control();
}

}  // namespace

bool replacement_fits(const ConjugationMatch& m, Implementation impl) {
  const auto& info = implementation_info(impl);
  if (m.classification == Proposition::none) return false;
  if (impl == Implementation::toffoli) return true;
  if (static_cast<int>(m.x.size()) + 1 != info.arity) return false;
  return find_order(m, info).has_value();
}

Circuit apply_replacement(const Circuit& c, const ConjugationMatch& m, Implementation impl,
                          const ReplaceOptions& opt) {
  const auto& info = implementation_info(impl);
  if (m.right_index >= c.size() || !same_toffoli(c[m.left_index], c[m.right_index]))
    throw Error(Errc::invalid_argument, "match does not refer to a TOF pair of this circuit");
  if (!opt.force && m.classification == Proposition::none)
    throw Error(Errc::invalid_argument, "match admits no conjugation identity");
  if (impl == Implementation::toffoli) return c;
  const Gate& tof = c[m.left_index];
  if (static_cast<int>(tof.controls.size()) + 1 != info.arity)
    throw Error(Errc::arity_mismatch, std::string("arity mismatch: ") + info.name + " acts on " +
                                          std::to_string(info.arity) + " qubits, the Toffoli on " +
                                          std::to_string(tof.controls.size() + 1));
  if (tof.has_negative_control())
    throw Error(Errc::invalid_argument, "marker replacements need positive controls");
  std::vector<QubitId> order;
  if (opt.force) {
    for (const auto& ctl : tof.controls) order.push_back(ctl.qubit);
  } else {
    FitResult why = FitResult::v_support;
    auto o = find_order(m, info, &why);
    if (!o)
      throw Error(Errc::special_form_violated,
                  std::string("special-form type violated: ") + info.name +
                      (why == FitResult::phase
                           ? " has no control order with the required phase pattern"
                           : " would place its V on qubits the middle block uses"));
    order = *o;
  }
  std::vector<std::uint32_t> q;
  for (auto x : order) q.push_back(x.index);
  q.push_back(m.a.index);
  std::vector<Gate> gates = c.gates();
  gates[m.left_index] = Gate::marker(info.marker, q, false);
  gates[m.right_index] = Gate::marker(info.marker, q, true);
  Circuit out(c.width(), c.roles());
  out.set_gates(std::move(gates));
  return out;
}

CanonicDecomposition canonic_decompose(const PhasePermutation<RingElement>& g,
                                       const TargetSpec& tof) {
  if (!is_relative_phase_of(g, tof))
    throw Error(Errc::not_relative_phase, "not a relative-phase Toffoli");
  return CanonicDecomposition{tof, g.phase};
}

PhasePermutation<RingElement> compose(const CanonicDecomposition& d, std::uint32_t width) {
  auto u = target_permutation<RingElement>(d.tof, width);
  if (d.diagonal.size() != u.phase.size())
    throw Error(Errc::invalid_argument, "diagonal size does not match width");
  for (std::size_t j = 0; j < u.phase.size(); ++j) u.phase[j] = u.phase[j] * d.diagonal[j];
  return u;
}

Circuit cancel_adjacent_inverses(const Circuit& c) {
  std::vector<Gate> gs = c.gates();
  for (bool changed = true; changed;) {
    changed = false;
    std::vector<char> dead(gs.size(), 0);
    for (std::size_t i = 0; i < gs.size(); ++i) {
      if (dead[i]) continue;
      for (std::size_t j = i + 1; j < gs.size(); ++j) {
        if (dead[j]) continue;
        bool shares = false;
        for (auto q : gs[i].qubits()) shares = shares || gs[j].touches(q);
        if (!shares) continue;
        if (gs[j] == gs[i].inverse()) {
          dead[i] = dead[j] = 1;
          changed = true;
        }
        break;
      }
    }
    std::vector<Gate> keep;
    for (std::size_t i = 0; i < gs.size(); ++i)
      if (!dead[i]) keep.push_back(gs[i]);
    gs.swap(keep);
  }
  Circuit out(c.width(), c.roles());
  out.set_gates(std::move(gs));
  return out;
}

RewriteRules RewriteRules::parse(const std::string& list) {
  RewriteRules r{false, false, false, false};
  std::stringstream ss(list);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item == "prop1") r.prop1 = true;
    else if (item == "prop2") r.prop2 = true;
    else if (item == "prop3") r.prop3 = true;
    else if (item == "cancel") r.cancel = true;
    else if (!item.empty()) throw Error(Errc::invalid_argument, "unknown rule '" + item + "'");
  }
  return r;
}

namespace {

std::pair<int, int> cost(const ImplementationInfo& info) {
  Circuit one(static_cast<std::uint32_t>(info.arity));
  std::vector<std::uint32_t> q(info.arity);
  std::iota(q.begin(), q.end(), 0u);
  one.add(Gate::marker(info.marker, q));
  ResourceReport r = count_resources(one);
  return {r.cnot, r.t};
}

bool enabled(const RewriteRules& rules, Proposition p) {
  return (p == Proposition::prop1 && rules.prop1) || (p == Proposition::prop2 && rules.prop2) ||
         (p == Proposition::prop3 && rules.prop3);
}

}  // namespace

RewriteResult rewrite(const Circuit& c, const RewriteRules& rules) {
  RewriteResult res{c, 0, 0};
  for (;;) {
    auto matches = find_conjugations(res.circuit);
    std::stable_sort(matches.begin(), matches.end(), [](const auto& x, const auto& y) {
      if (x.left_index != y.left_index) return x.left_index < y.left_index;
      return x.right_index < y.right_index;
    });
    bool applied = false;
    for (const auto& m : matches) {
      if (!enabled(rules, m.classification)) continue;
      const ImplementationInfo* best = nullptr;
      std::pair<int, int> best_cost;
      for (const auto& info : implementations()) {
        if (info.id == Implementation::toffoli) continue;
        if (!marker_usable(res.circuit, m, info) || !replacement_fits(m, info.id)) continue;
        auto k = cost(info);
        if (!best || k < best_cost) {
          best = &info;
          best_cost = k;
        }
      }
      if (!best) continue;
      res.circuit = apply_replacement(res.circuit, m, best->id);
      ++res.replacements;
      applied = true;
      break;
    }
    if (!applied) break;
  }
  if (rules.cancel) {
    Circuit flat = lower(res.circuit);
    Circuit done = cancel_adjacent_inverses(flat);
    res.cancelled_gates = static_cast<int>(flat.size() - done.size());
    res.circuit = std::move(done);
  }
  return res;
}

}  // namespace rphase
