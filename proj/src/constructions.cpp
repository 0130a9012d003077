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

#include "rphase/constructions.hpp"

#include <algorithm>
#include <functional>
#include <map>

#include "rphase/error.hpp"
#include "rphase/resources.hpp"

namespace rphase {

using Q = std::uint32_t;

std::vector<Gate> toffoli3_gates(Q a, Q b, Q c) {
  return {Gate::h(c),      Gate::cx(c, b), Gate::tdg(b), Gate::cx(a, b),
          Gate::t(b),      Gate::cx(c, b), Gate::tdg(b), Gate::cx(a, b),
          Gate::t(b),      Gate::cx(a, c), Gate::tdg(c), Gate::cx(a, c),
          Gate::t(a),      Gate::t(c),     Gate::h(c)};
}

std::vector<Gate> srts3_gates(Q a, Q b, Q c) {
  auto g = toffoli3_gates(a, b, c);
  g.resize(9);
  return g;
}

std::vector<Gate> rtof3_long_gates(Q a, Q b, Q c) {
  return {Gate::h(c),   Gate::t(c),     Gate::cx(b, c),
          Gate::tdg(c), Gate::cx(a, c), Gate::t(c),
          Gate::cx(b, c), Gate::tdg(c), Gate::h(c)};
}

std::vector<Gate> rts3_gates(Q a, Q b, Q c) {
  auto g = rtof3_long_gates(a, b, c);
  g.resize(5);
  return g;
}

std::vector<Gate> srtof3_ccix_gates(Q a, Q b, Q c) {
  std::vector<Gate> g{Gate::cz(a, c)};
  auto r = rtof3_long_gates(a, b, c);
  g.insert(g.end(), r.begin(), r.end());
  return g;
}

std::vector<Gate> rtof4_long_gates(Q a, Q b, Q c, Q d) {
  return {Gate::h(d),     Gate::t(d),     Gate::cx(c, d), Gate::tdg(d),
          Gate::h(d),     Gate::cx(a, d), Gate::t(d),     Gate::cx(b, d),
          Gate::tdg(d),   Gate::cx(a, d), Gate::t(d),     Gate::cx(b, d),
          Gate::tdg(d),   Gate::h(d),     Gate::t(d),     Gate::cx(c, d),
          Gate::tdg(d),   Gate::h(d)};
}

std::vector<Gate> rt4s_gates(Q a, Q b, Q c, Q d) {
  auto g = rtof4_long_gates(a, b, c, d);
  g.resize(10);
  return g;
}

std::vector<Gate> marker_expansion(const Gate& m) {
  std::vector<Q> q;
  for (auto x : m.qubits()) q.push_back(x.index);
  std::vector<Gate> body;
  switch (m.kind) {
    case GateKind::RTOF3L: body = rtof3_long_gates(q[0], q[1], q[2]); break;
    case GateKind::RTOF3S: body = rts3_gates(q[0], q[1], q[2]); break;
    case GateKind::SRTOF3: body = srtof3_ccix_gates(q[0], q[1], q[2]); break;
    case GateKind::SRTS3: body = srts3_gates(q[0], q[1], q[2]); break;
    case GateKind::RTOF4L: body = rtof4_long_gates(q[0], q[1], q[2], q[3]); break;
    case GateKind::RT4S: body = rt4s_gates(q[0], q[1], q[2], q[3]); break;
    default:
      throw Error(Errc::no_construction, "no construction for gate " + m.to_string());
  }
  if (!m.dagger) return body;
  std::vector<Gate> inv;
  for (auto it = body.rbegin(); it != body.rend(); ++it) inv.push_back(it->inverse());
  return inv;
}

namespace {

Circuit make_circuit(Q width, const std::vector<Gate>& gates,
                     std::vector<Role> roles = {}) {
  if (roles.empty()) roles.assign(width, Role::primary);
  Circuit c(width, std::move(roles));
  c.set_gates(gates);
  return c;
}

void check_claims(const Construction& c) {
  ResourceReport r = count_resources(c.circuit);
  auto mismatch = [&](const char* what, std::optional<int> claim, int got) {
    if (claim && *claim != got)
      throw Error(Errc::internal, c.name + ": claimed " + what + " " +
                                      std::to_string(*claim) + ", counted " +
                                      std::to_string(got));
  };
  mismatch("T", c.claimed.t, r.t);
  mismatch("CNOT", c.claimed.cnot, r.cnot);
  mismatch("H", c.claimed.h, r.h);
  mismatch("P/Z", c.claimed.pz, r.pz);
  mismatch("ancillae", c.claimed.ancillas, r.ancilla_count);
}

Construction finish(Construction c) {
  check_claims(c);
  return c;
}

// Elementary construction: marker form equals the lowered form.
Construction elementary(std::string name, Q width, const std::vector<Gate>& gates,
                        TargetSpec target, ClaimedCounts claimed,
                        std::string description) {
  Construction c;
  c.name = std::move(name);
  c.circuit = make_circuit(width, gates);
  c.markers = c.circuit;
  c.target = std::move(target);
  c.claimed = claimed;
  c.description = std::move(description);
  return finish(std::move(c));
}

// Composite construction: lowered form derived from the marker form.
Construction composite(std::string name, Circuit markers, TargetSpec target,
                       ClaimedCounts claimed, std::string description,
                       bool keep_toffoli = false) {
  Construction c;
  c.name = std::move(name);
  c.markers = std::move(markers);
  c.circuit = lower(c.markers, LowerPolicy{MultiControl::none, keep_toffoli});
  c.target = std::move(target);
  c.claimed = claimed;
  c.description = std::move(description);
  return finish(std::move(c));
}

Gate mk(GateKind k, std::vector<Q> q, bool dagger = false) {
  return Gate::marker(k, q, dagger);
}

ClaimedCounts counts(int t, int cnot, int h, std::optional<int> anc = 0) {
  return ClaimedCounts{t, cnot, h, 0, anc};
}

}  // namespace

Construction toffoli3() {
  return elementary("toffoli3", 3, toffoli3_gates(0, 1, 2),
                    TargetSpec::tof({0, 1}, 2), counts(7, 6, 2),
                    "exact Toffoli, 7 T and 6 CNOT");
}

Construction srtof3_ccix(bool cz_at_end) {
  std::vector<Gate> g = rtof3_long_gates(0, 1, 2);
  if (cz_at_end) g.push_back(Gate::cz(0, 2));
  else g.insert(g.begin(), Gate::cz(0, 2));
  TargetSpec s = TargetSpec::tof({0, 1}, 2, Equivalence::special_form);
  s.xprime = {QubitId{2}};
  ClaimedCounts cl = counts(4, 3, 2);
  return elementary(cz_at_end ? "srtof3_ccix_cz_end" : "srtof3_ccix", 3, g, s, cl,
                    "controlled-controlled-iX, special form on the target");
}

Construction rtof3_long() {
  return elementary("rtof3_long", 3, rtof3_long_gates(0, 1, 2),
                    TargetSpec::tof({0, 1}, 2, Equivalence::relative_phase),
                    counts(4, 3, 2), "self-inverse relative-phase Toffoli");
}

namespace {

std::vector<Gate> suffix(std::vector<Gate> g, std::size_t from) {
  return std::vector<Gate>(g.begin() + static_cast<std::ptrdiff_t>(from), g.end());
}

}  // namespace

Construction rts3() {
  Construction c = elementary(
      "rts3", 3, rts3_gates(0, 1, 2),
      TargetSpec::tof({0, 1}, 2, Equivalence::relative_phase), counts(2, 2, 1),
      "relative-phase Toffoli followed by V(b,c); prefix of rtof3_long");
  c.tail = suffix(rtof3_long_gates(0, 1, 2), 5);
  return c;
}

Construction srts3() {
  Construction c = elementary("srts3", 3, srts3_gates(0, 1, 2),
                              TargetSpec::tof({0, 1}, 2), counts(4, 4, 1),
                              "Toffoli followed by V(a,c); prefix of toffoli3");
  c.tail = suffix(toffoli3_gates(0, 1, 2), 9);
  return c;
}

Circuit margolus_t_core() {
  return make_circuit(3, {Gate::t(2), Gate::cx(1, 2), Gate::t(2), Gate::cx(0, 2),
                          Gate::tdg(2), Gate::cx(1, 2), Gate::tdg(2)});
}

std::vector<Construction> margolus_variants() {
  TargetSpec neg = TargetSpec::tof({0, 1}, 2, Equivalence::relative_phase);
  neg.controls[1].positive = false;
  TargetSpec pos = TargetSpec::tof({0, 1}, 2, Equivalence::relative_phase);

  std::vector<Gate> tv{Gate::h(2)};
  const Circuit core = margolus_t_core();
  for (const auto& g : core.gates()) tv.push_back(g);
  tv.push_back(Gate::h(2));

  auto ry_seq = [](int s0, int s1, int s2, int s3) {
    return std::vector<Gate>{Gate::ry(2, s0), Gate::cx(1, 2), Gate::ry(2, s1),
                             Gate::cx(0, 2), Gate::ry(2, s2), Gate::cx(1, 2),
                             Gate::ry(2, s3)};
  };
  ClaimedCounts ry_counts{0, 3, 0, 0, 0};
  return {
      elementary("margolus_t", 3, tv, neg, counts(4, 3, 2),
                 "T-phase variant conjugated by H, negative middle control"),
      elementary("margolus_ry_neg", 3, ry_seq(1, -1, 1, -1), neg, ry_counts,
                 "RY(pi/4) variant, negative middle control"),
      elementary("margolus_ry", 3, ry_seq(1, 1, -1, -1), pos, ry_counts,
                 "RY(pi/4) variant with positive controls"),
  };
}

Construction rtof4_long() {
  return elementary("rtof4_long", 4, rtof4_long_gates(0, 1, 2, 3),
                    TargetSpec::tof({0, 1, 2}, 3, Equivalence::relative_phase),
                    counts(8, 6, 4), "relative-phase Toffoli-4");
}

Construction rt4s() {
  Construction c = elementary(
      "rt4s", 4, rt4s_gates(0, 1, 2, 3),
      TargetSpec::tof({0, 1, 2}, 3, Equivalence::relative_phase), counts(4, 4, 2),
      "relative-phase Toffoli-4 followed by V(b,c,d); prefix of rtof4_long");
  c.tail = suffix(rtof4_long_gates(0, 1, 2, 3), 10);
  return c;
}

namespace {

Circuit with_roles(Q width, const std::vector<Q>& ancillas, Role r) {
  Circuit c(width);
  for (auto q : ancillas) c.set_role(QubitId{q}, r);
  return c;
}

}  // namespace

Construction tof4_clean() {
  Circuit m = with_roles(5, {2}, Role::clean_ancilla);
  m.add(mk(GateKind::RTOF3L, {0, 1, 2}));
  m.add(Gate::tof({2, 3}, 4));
  m.add(mk(GateKind::RTOF3L, {0, 1, 2}, true));
  return composite("tof4_clean", m, TargetSpec::tof({0, 1, 3}, 4),
                   counts(15, 12, 6, 1), "Toffoli-4 with one clean ancilla");
}

Construction tof4_dirty() {
  Circuit m = with_roles(5, {2}, Role::dirty_ancilla);
  m.add(mk(GateKind::RTOF3L, {0, 1, 2}));
  m.add(mk(GateKind::SRTS3, {3, 2, 4}));
  m.add(mk(GateKind::RTOF3L, {0, 1, 2}, true));
  m.add(mk(GateKind::SRTS3, {3, 2, 4}, true));
  return composite("tof4_dirty", m, TargetSpec::tof({0, 1, 3}, 4),
                   counts(16, 14, 6, 1), "Toffoli-4 with one dirty ancilla");
}

Construction tof5_clean() {
  Circuit m = with_roles(6, {3}, Role::clean_ancilla);
  m.add(mk(GateKind::RTOF4L, {0, 1, 2, 3}));
  m.add(Gate::tof({3, 4}, 5));
  m.add(mk(GateKind::RTOF4L, {0, 1, 2, 3}, true));
  return composite("tof5_clean", m, TargetSpec::tof({0, 1, 2, 4}, 5),
                   counts(23, 18, 10, 1), "Toffoli-5 with one clean ancilla");
}

Construction tof5_dirty() {
  Circuit m = with_roles(6, {3}, Role::dirty_ancilla);
  m.add(mk(GateKind::RTOF4L, {0, 1, 2, 3}));
  m.add(mk(GateKind::SRTS3, {4, 3, 5}));
  m.add(mk(GateKind::RTOF4L, {0, 1, 2, 3}, true));
  m.add(mk(GateKind::SRTS3, {4, 3, 5}, true));
  return composite("tof5_dirty", m, TargetSpec::tof({0, 1, 2, 4}, 5),
                   counts(24, 20, 10, 1), "Toffoli-5 with one dirty ancilla");
}

Construction tofn_clean(int n) {
  if (n < 4) throw Error(Errc::invalid_argument, "tofn_clean needs n >= 4");
  // Chain: the first block eats two controls (n even) or three (n odd);
  // each later block eats two more plus the previous ancilla.
  std::vector<Role> roles;
  std::vector<Q> controls;
  std::vector<Gate> forward;
  int remaining = n - 1;
  Q next = 0;
  auto take_control = [&] {
    roles.push_back(Role::primary);
    controls.push_back(next);
    --remaining;
    return next++;
  };
  auto take_ancilla = [&] {
    roles.push_back(Role::clean_ancilla);
    return next++;
  };
  Q carry;
  if (n % 2 == 0) {
    Q a = take_control(), b = take_control();
    carry = take_ancilla();
    forward.push_back(mk(GateKind::RTOF3L, {a, b, carry}));
  } else {
    Q a = take_control(), b = take_control(), c = take_control();
    carry = take_ancilla();
    forward.push_back(mk(GateKind::RTOF4L, {a, b, c, carry}));
  }
  while (remaining > 1) {
    Q b = take_control(), c = take_control();
    Q anc = take_ancilla();
    forward.push_back(mk(GateKind::RTOF4L, {carry, b, c, anc}));
    carry = anc;
  }
  Q last = take_control();
  roles.push_back(Role::primary);
  Q target = next++;

  Circuit m(next, roles);
  for (const auto& g : forward) m.add(g);
  m.add(Gate::tof({carry, last}, target));
  for (auto it = forward.rbegin(); it != forward.rend(); ++it) m.add(it->inverse());
  Construction c = composite(
      "tofn_clean", m, TargetSpec::tof(controls, target),
      counts(8 * n - 17, 6 * n - 12, 4 * n - 10, (n - 3 + 1) / 2),
      "Toffoli-n from a chain of relative-phase Toffolis, clean ancillae");
  c.params = {{"n", n}};
  return c;
}

namespace {

// Gate sequence over 1-based qubits 1..2n-3 with the target at 2n-3.
struct Placed {
  GateKind kind;
  std::vector<Q> q;
  bool dagger;
};

std::vector<Placed> dirty_items(int n, bool ladder) {
  const Q N = static_cast<Q>(n);
  auto rts = [&](Q a, Q b, Q c, bool inv) {
    // As a full relative-phase Toffoli the ladder puts the ancilla on the
    // inner CNOT so that adjacent H/T pairs cancel after lowering.
    if (ladder) return Placed{GateKind::RTOF3L, {b, a, c}, inv};
    return Placed{GateKind::RTOF3S, {a, b, c}, inv};
  };
  std::vector<Placed> out;
  for (int half = 0; half < 2; ++half) {
    const bool inv = half == 1;
    out.push_back({GateKind::SRTS3, {N - 1, 2 * N - 4, 2 * N - 3}, inv});
    for (Q k = 1; k + 4 <= N; ++k)
      out.push_back(rts(2 * N - 4 - k, N - 1 - k, 2 * N - 3 - k, false));
    out.push_back({GateKind::RTOF3L, {1, 2, N}, inv});
    for (Q k = 1; k + 4 <= N; ++k)
      out.push_back(rts(N - 1 + k, k + 2, N + k, true));
  }
  return out;
}

bool same(const Placed& p, GateKind k, std::vector<Q> q, bool dagger) {
  return p.kind == k && p.q == q && p.dagger == dagger;
}

// Merges RTS(n,3,n+1) RTL(1,2,n) RTS^-1(n,3,n+1) into RT4L(1,2,3,n+1) and
// adjacent RTS pairs into RT4S gates.
std::vector<Placed> merge_dirty_items(std::vector<Placed> items, int n) {
  const Q N = static_cast<Q>(n);
  std::vector<Placed> out;
  for (std::size_t i = 0; i < items.size(); ++i) {
    if (i + 2 < items.size() &&
        same(items[i], GateKind::RTOF3S, {N, 3, N + 1}, false) &&
        items[i + 1].kind == GateKind::RTOF3L &&
        items[i + 1].q == std::vector<Q>{1, 2, N} &&
        same(items[i + 2], GateKind::RTOF3S, {N, 3, N + 1}, true)) {
      out.push_back({GateKind::RTOF4L, {1, 2, 3, N + 1}, items[i + 1].dagger});
      i += 2;
      continue;
    }
    out.push_back(items[i]);
  }
  items.swap(out);
  out.clear();
  const int kmax = n >= 6 ? (n - 6 + 1) / 2 : 0;
  for (std::size_t i = 0; i < items.size(); ++i) {
    bool merged = false;
    for (Q k = 1; static_cast<int>(k) <= kmax && i + 1 < items.size(); ++k) {
      std::vector<Q> rt4s{N - 1 + 2 * k, 2 * k + 2, 2 * k + 3, N + 2 * k + 1};
      if (same(items[i], GateKind::RTOF3S, {N + 2 * k, 2 * k + 3, N + 2 * k + 1}, false) &&
          same(items[i + 1], GateKind::RTOF3S, {N - 1 + 2 * k, 2 * k + 2, N + 2 * k}, false)) {
        out.push_back({GateKind::RT4S, rt4s, false});
      } else if (same(items[i], GateKind::RTOF3S, {N - 1 + 2 * k, 2 * k + 2, N + 2 * k}, true) &&
                 same(items[i + 1], GateKind::RTOF3S, {N + 2 * k, 2 * k + 3, N + 2 * k + 1}, true)) {
        out.push_back({GateKind::RT4S, rt4s, true});
      } else {
        continue;
      }
      ++i;
      merged = true;
      break;
    }
    if (!merged) out.push_back(items[i]);
  }
  return out;
}

Construction build_dirty(const std::string& name, int n, bool ladder,
                         ClaimedCounts claimed, const std::string& description) {
  std::vector<Placed> items = dirty_items(n, ladder);
  if (!ladder) items = merge_dirty_items(std::move(items), n);
  const Q N = static_cast<Q>(n);
  const Q top = 2 * N - 3;
  std::vector<bool> used(top + 1, false);
  for (Q q = 1; q < N; ++q) used[q] = true;
  used[top] = true;
  for (const auto& p : items)
    for (auto q : p.q) used[q] = true;
  std::vector<Q> map(top + 1, 0);
  std::vector<Role> roles;
  for (Q q = 1; q <= top; ++q) {
    if (!used[q]) continue;
    map[q] = static_cast<Q>(roles.size());
    roles.push_back(q < N || q == top ? Role::primary : Role::dirty_ancilla);
  }
  Circuit m(static_cast<Q>(roles.size()), roles);
  for (const auto& p : items) {
    std::vector<Q> q;
    for (auto x : p.q) q.push_back(map[x]);
    m.add(mk(p.kind, q, p.dagger));
  }
  std::vector<Q> controls;
  for (Q q = 1; q < N; ++q) controls.push_back(map[q]);
  Construction c = composite(name, m, TargetSpec::tof(controls, map[top]),
                             claimed, description);
  c.params = {{"n", n}};
  return c;
}

}  // namespace

Construction tofn_dirty(int n) {
  if (n < 5) throw Error(Errc::invalid_argument, "tofn_dirty needs n >= 5");
  return build_dirty("tofn_dirty", n, false,
                     counts(8 * n - 16, 8 * n - 20, 4 * n - 10, (n - 3 + 1) / 2),
                     "Toffoli-n from truncated relative-phase Toffolis, dirty ancillae");
}

Construction ladder_tofn(int n) {
  if (n < 6) throw Error(Errc::invalid_argument, "ladder_tofn needs n >= 6");
  ClaimedCounts cl;
  cl.t = 16 * (n - 1) - 32;
  cl.ancillas = n - 3;
  return build_dirty("ladder_tofn", n, true, cl,
                     "Toffoli ladder with relative-phase Toffolis and one special-form pair");
}

Construction two_block_tofn(int n, int k) {
  if (n < 4 || k < 3 || k > n - 1)
    throw Error(Errc::invalid_argument, "two_block_tofn needs n >= 4 and 3 <= k <= n-1");
  // Layout: c_1..c_{k-1}, ancilla, c_k..c_{n-1}, target.
  const Q N = static_cast<Q>(n), K = static_cast<Q>(k);
  const Q anc = K - 1, target = N;
  Circuit m = with_roles(N + 1, {anc}, Role::dirty_ancilla);
  std::vector<Q> first, second, controls;
  for (Q i = 0; i < anc; ++i) first.push_back(i);
  for (Q i = anc + 1; i < target; ++i) second.push_back(i);
  controls = first;
  controls.insert(controls.end(), second.begin(), second.end());

  auto rtof_block = [&](bool dagger) {
    std::vector<Q> q = first;
    q.push_back(anc);
    if (k == 3) return mk(GateKind::RTOF3L, q, dagger);
    if (k == 4) return mk(GateKind::RTOF4L, q, dagger);
    return Gate::tof(first, anc);
  };
  auto special_block = [&](bool dagger) {
    // Special form on the ancilla; SRTS3 is type-{b} so the ancilla sits at b.
    if (second.size() == 1) return mk(GateKind::SRTS3, {second[0], anc, target}, dagger);
    std::vector<Q> c = second;
    c.push_back(anc);
    return Gate::tof(c, target);
  };
  m.add(rtof_block(false));
  m.add(special_block(false));
  m.add(rtof_block(true));
  m.add(special_block(true));
  Construction c = composite("two_block_tofn", m, TargetSpec::tof(controls, target),
                             ClaimedCounts{std::nullopt, std::nullopt, std::nullopt,
                                           std::nullopt, 1},
                             "Toffoli-n from two relative-phase blocks and one dirty ancilla",
                             true);
  c.params = {{"n", n}, {"k", k}};
  return c;
}

namespace {

std::vector<Gate> controlled_u(Q a, Q t, CuOp op) {
  switch (op) {
    case CuOp::x: return {Gate::cx(a, t)};
    case CuOp::z: return {Gate::cz(a, t)};
    case CuOp::p:
      return {Gate::t(a), Gate::t(t), Gate::cx(a, t), Gate::tdg(t), Gate::cx(a, t)};
  }
  return {};
}

TargetSpec cu_target(const std::vector<Q>& controls, Q t, CuOp op) {
  TargetSpec s = TargetSpec::tof(controls, t);
  s.op = op == CuOp::x ? TargetOp::x : op == CuOp::z ? TargetOp::z : TargetOp::s;
  return s;
}

Construction cnu_finish(const std::string& name, int n, CuOp op,
                        const std::vector<Gate>& forward, Q root) {
  const Q N = static_cast<Q>(n);
  std::vector<Q> anc, controls;
  for (Q i = 0; i < N; ++i) controls.push_back(i);
  for (Q i = N; i < 2 * N - 1; ++i) anc.push_back(i);
  Circuit m = with_roles(2 * N, anc, Role::clean_ancilla);
  for (const auto& g : forward) m.add(g);
  for (const auto& g : controlled_u(root, 2 * N - 1, op)) m.add(g);
  for (auto it = forward.rbegin(); it != forward.rend(); ++it) m.add(it->inverse());
  ClaimedCounts cl;
  cl.ancillas = n - 1;
  cl.t = 8 * (n - 1) + (op == CuOp::p ? 3 : 0);
  Construction c = composite(name, m, cu_target(controls, 2 * N - 1, op), cl,
                             "controlled-U from relative-phase Toffolis, clean ancillae");
  c.params = {{"n", n}};
  return c;
}

}  // namespace

Construction cnu_clean_chain(int n, CuOp op) {
  if (n < 2) throw Error(Errc::invalid_argument, "cnu_clean_chain needs n >= 2");
  const Q N = static_cast<Q>(n);
  std::vector<Gate> fwd{mk(GateKind::RTOF3L, {0, 1, N})};
  for (Q i = 2; i < N; ++i) fwd.push_back(mk(GateKind::RTOF3L, {i, N + i - 2, N + i - 1}));
  return cnu_finish("cnu_clean_chain", n, op, fwd, 2 * N - 2);
}

Construction cnu_parallel(int n, CuOp op) {
  if (n < 2) throw Error(Errc::invalid_argument, "cnu_parallel needs n >= 2");
  const Q N = static_cast<Q>(n);
  std::vector<Q> level;
  for (Q i = 0; i < N; ++i) level.push_back(i);
  Q next = N;
  std::vector<Gate> fwd;
  while (level.size() > 1) {
    std::vector<Q> up;
    for (std::size_t i = 0; i + 1 < level.size(); i += 2) {
      fwd.push_back(mk(GateKind::RTOF3L, {level[i], level[i + 1], next}));
      up.push_back(next++);
    }
    if (level.size() % 2) up.push_back(level.back());
    level.swap(up);
  }
  return cnu_finish("cnu_parallel", n, op, fwd, level[0]);
}

Construction tof_rtof_pair(int n) {
  if (n != 3 && n != 4) throw Error(Errc::invalid_argument, "tof_rtof_pair needs n in {3,4}");
  const Q N = static_cast<Q>(n);
  std::vector<Q> controls, q;
  for (Q i = 0; i + 1 < N; ++i) controls.push_back(i);
  q = controls;
  q.push_back(N - 1);
  Circuit m = with_roles(N + 1, {N - 1}, Role::clean_ancilla);
  GateKind k = n == 3 ? GateKind::RTOF3L : GateKind::RTOF4L;
  m.add(mk(k, q));
  m.add(Gate::cx(N - 1, N));
  m.add(mk(k, q, true));
  int cnot = n == 3 ? 7 : 13;
  Construction c = composite("tof_rtof_pair", m, TargetSpec::tof(controls, N),
                             ClaimedCounts{std::nullopt, cnot, std::nullopt, 0, 1},
                             "Toffoli from a relative-phase pair around one CNOT");
  c.params = {{"n", n}};
  return c;
}

namespace {

CuOp parse_u(const std::string& u) {
  if (u == "x" || u.empty()) return CuOp::x;
  if (u == "z") return CuOp::z;
  if (u == "p" || u == "s") return CuOp::p;
  throw Error(Errc::invalid_argument, "unknown controlled operation '" + u + "'");
}

Construction synth_tof(const SynthRequest& r) {
  const bool dirty = r.ancilla == "dirty";
  if (!r.ancilla.empty() && r.ancilla != "clean" && !dirty)
    throw Error(Errc::invalid_argument, "ancilla must be clean or dirty");
  if (r.n == 3) return toffoli3();
  if (r.n < 3) throw Error(Errc::invalid_argument, "tof needs n >= 3");
  if (!dirty) return r.n == 4 ? tof4_clean() : r.n == 5 ? tof5_clean() : tofn_clean(r.n);
  return r.n == 4 ? tof4_dirty() : r.n == 5 ? tof5_dirty() : tofn_dirty(r.n);
}

using Synth = std::function<Construction(const SynthRequest&)>;

const std::vector<std::pair<std::string, Synth>>& catalog() {
  static const std::vector<std::pair<std::string, Synth>> c = {
      {"tof", synth_tof},
      {"toffoli3", [](const SynthRequest&) { return toffoli3(); }},
      {"rtof3", [](const SynthRequest&) { return rtof3_long(); }},
      {"rts3", [](const SynthRequest&) { return rts3(); }},
      {"srts3", [](const SynthRequest&) { return srts3(); }},
      {"ccix", [](const SynthRequest& r) { return srtof3_ccix(r.variant == 1); }},
      {"rtof4", [](const SynthRequest&) { return rtof4_long(); }},
      {"rt4s", [](const SynthRequest&) { return rt4s(); }},
      {"margolus",
       [](const SynthRequest& r) {
         auto v = margolus_variants();
         if (r.variant < 0 || r.variant >= static_cast<int>(v.size()))
           throw Error(Errc::invalid_argument, "margolus variant must be 0, 1 or 2");
         return v[r.variant];
       }},
      {"tofn_clean", [](const SynthRequest& r) { return tofn_clean(r.n); }},
      {"tofn_dirty", [](const SynthRequest& r) { return tofn_dirty(r.n); }},
      {"ladder", [](const SynthRequest& r) { return ladder_tofn(r.n); }},
      {"two_block", [](const SynthRequest& r) { return two_block_tofn(r.n, r.k); }},
      {"cnu_chain", [](const SynthRequest& r) { return cnu_clean_chain(r.n, parse_u(r.u)); }},
      {"cnu_parallel", [](const SynthRequest& r) { return cnu_parallel(r.n, parse_u(r.u)); }},
      {"tof_rtof_pair", [](const SynthRequest& r) { return tof_rtof_pair(r.n); }},
  };
  return c;
}

}  // namespace

std::vector<std::string> catalog_names() {
  std::vector<std::string> names;
  for (const auto& [name, fn] : catalog()) names.push_back(name);
  return names;
}

Construction synthesize(const SynthRequest& req) {
  for (const auto& [name, fn] : catalog())
    if (name == req.gate) return fn(req);
  throw Error(Errc::invalid_argument, "unknown gate '" + req.gate + "'");
}

}  // namespace rphase
