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

#include <gtest/gtest.h>

#include <map>

#include "oracle.hpp"
#include "rphase/constructions.hpp"
#include "rphase/error.hpp"
#include "rphase/resources.hpp"
#include "rphase/rewrite.hpp"
#include "rphase/simulate.hpp"
#include "rphase/verify.hpp"

namespace rphase {
namespace {

using R = RingElement;
using oracle::C;

const C kI(0, 1);

PhasePermutation<R> pp(const Circuit& c) {
  return std::get<PhasePermutation<R>>(
      unitary_columns<R>(lower(c, LowerPolicy{MultiControl::none, true})));
}

// Phase permutation read off a matrix given as diag entries plus the final
// 2x2 block, with entries in {0, +-1, +-i}.
PhasePermutation<R> from_matrix(const std::vector<int>& diag_turns, int b00, int b01, int b10,
                                int b11, std::uint32_t width) {
  // Entries encoded as quarter turns (0:1, 1:i, 2:-1, 3:-i), -1 for zero.
  PhasePermutation<R> p;
  p.width = width;
  const std::size_t n = std::size_t{1} << width;
  p.perm.resize(n);
  p.phase.resize(n);
  for (std::size_t j = 0; j + 2 < n; ++j) {
    p.perm[j] = j;
    p.phase[j] = R::omega_pow(2 * diag_turns[j]);
  }
  auto put = [&](std::size_t row, std::size_t col, int turns) {
    if (turns < 0) return;
    p.perm[col] = row;
    p.phase[col] = R::omega_pow(2 * turns);
  };
  put(n - 2, n - 2, b00);
  put(n - 2, n - 1, b01);
  put(n - 1, n - 2, b10);
  put(n - 1, n - 1, b11);
  return p;
}

void expect_counts(const Construction& c, int t, int cnot, int h, int anc = -1) {
  ResourceReport r = count_resources(c.circuit);
  EXPECT_EQ(r.t, t) << c.name;
  EXPECT_EQ(r.cnot, cnot) << c.name;
  EXPECT_EQ(r.h, h) << c.name;
  if (anc >= 0) {
    EXPECT_EQ(r.ancilla_count, anc) << c.name;
  }
}

void expect_verified(const Construction& c) {
  Circuit full = c.circuit;
  for (const auto& g : c.tail) full.add(g);
  VerificationReport rep = check_implements(full, c.target);
  EXPECT_TRUE(rep.satisfies(c.target)) << c.name << " " << rep.to_json();
  EXPECT_TRUE(rep.ancilla_ok) << c.name;
}

int count_kind(const Circuit& c, GateKind k) {
  int n = 0;
  for (const auto& g : c.gates()) n += g.kind == k;
  return n;
}

TEST(Toffoli3, ExactMatrixAndTruthTable) {
  Construction c = toffoli3();
  EXPECT_EQ(pp(c.circuit), from_matrix({0, 0, 0, 0, 0, 0}, -1, 0, 0, -1, 3));
  StateVector s = simulate_column<R>(c.circuit, 0b110);
  ASSERT_EQ(s.amps.size(), 1u);
  EXPECT_EQ(s.amps[0].first, 0b111u);
  EXPECT_EQ(simulate_column<R>(c.circuit, 0b010).amps[0].first, 0b010u);
  expect_counts(c, 7, 6, 2);
  // The dense oracle agrees.
  oracle::Mat want = oracle::diag_with_block({1, 1, 1, 1, 1, 1}, 0, 1, 1, 0);
  EXPECT_LT(oracle::distance(oracle::unitary(c.circuit), want), 1e-12);
}

TEST(Ccix, SpecialFormMatrix) {
  Construction c = srtof3_ccix();
  EXPECT_EQ(pp(c.circuit), from_matrix({0, 0, 0, 0, 0, 0}, -1, 1, 1, -1, 3));
  Construction moved = srtof3_ccix(true);
  EXPECT_EQ(pp(moved.circuit), from_matrix({0, 0, 0, 0, 0, 0}, -1, 3, 3, -1, 3));
  StateVector s = simulate_column<R>(c.circuit, 0b100);
  EXPECT_EQ(s.amplitude(0b100), R::one());
  oracle::Mat want = oracle::diag_with_block({1, 1, 1, 1, 1, 1}, 0, kI, kI, 0);
  EXPECT_LT(oracle::distance(oracle::unitary(lower(c.circuit)), want), 1e-12);
}

TEST(RtofLong, MatrixCountsSelfInverse) {
  Construction c = rtof3_long();
  EXPECT_EQ(pp(c.circuit), from_matrix({0, 0, 0, 0, 0, 2}, -1, 3, 1, -1, 3));
  oracle::Mat want = oracle::diag_with_block({1, 1, 1, 1, 1, -1}, 0, -kI, kI, 0);
  EXPECT_LT(oracle::distance(oracle::unitary(c.circuit), want), 1e-12);
  expect_counts(c, 4, 3, 2);
  EXPECT_EQ(c.circuit.size(), 9u);
  EXPECT_EQ(inverse(c.circuit), c.circuit);
}

TEST(RtofLong, ControlsMayBeSwapped) {
  Circuit c(3);
  for (const auto& g : rtof3_long_gates(1, 0, 2)) c.add(g);
  EXPECT_TRUE(is_relative_phase_of(pp(c), TargetSpec::tof({0, 1}, 2)));
}

TEST(Truncated, RtsPrefix) {
  Construction c = rts3();
  expect_counts(c, 2, 2, 1);
  EXPECT_EQ(c.circuit.size(), 5u);
  ASSERT_EQ(c.tail.size(), 4u);
  std::vector<Gate> joined = c.circuit.gates();
  joined.insert(joined.end(), c.tail.begin(), c.tail.end());
  EXPECT_EQ(joined, rtof3_long().circuit.gates());
  // U(prefix) = V^-1 U(full), with V the tail.
  Circuit tail(3);
  for (const auto& g : c.tail) tail.add(g);
  oracle::Mat lhs = oracle::unitary(c.circuit);
  oracle::Mat rhs = oracle::unitary(inverse(tail)) * oracle::unitary(rtof3_long().circuit);
  EXPECT_LT(oracle::distance(lhs, rhs), 1e-12);
  // The tail acts on b and c only.
  for (const auto& g : c.tail) EXPECT_FALSE(g.touches(QubitId{0}));
}

TEST(Truncated, SrtsPrefix) {
  Construction c = srts3();
  expect_counts(c, 4, 4, 1);
  EXPECT_EQ(c.circuit.size(), 9u);
  std::vector<Gate> joined = c.circuit.gates();
  joined.insert(joined.end(), c.tail.begin(), c.tail.end());
  EXPECT_EQ(joined, toffoli3().circuit.gates());
  Circuit tail(3);
  for (const auto& g : c.tail) tail.add(g);
  oracle::Mat lhs = oracle::unitary(c.circuit);
  oracle::Mat rhs = oracle::unitary(inverse(tail)) * oracle::unitary(toffoli3().circuit);
  EXPECT_LT(oracle::distance(lhs, rhs), 1e-12);
  for (const auto& g : c.tail) EXPECT_FALSE(g.touches(QubitId{1}));
  expect_verified(c);
}

TEST(Truncated, Rt4sPrefix) {
  Construction c = rt4s();
  expect_counts(c, 4, 4, 2);
  EXPECT_EQ(c.circuit.size(), 10u);
  std::vector<Gate> joined = c.circuit.gates();
  joined.insert(joined.end(), c.tail.begin(), c.tail.end());
  EXPECT_EQ(joined, rtof4_long().circuit.gates());
  Circuit tail(4);
  for (const auto& g : c.tail) tail.add(g);
  oracle::Mat lhs = oracle::unitary(c.circuit);
  oracle::Mat rhs = oracle::unitary(inverse(tail)) * oracle::unitary(rtof4_long().circuit);
  EXPECT_LT(oracle::distance(lhs, rhs), 1e-12);
  for (const auto& g : c.tail) EXPECT_FALSE(g.touches(QubitId{0}));
}

TEST(Rtof4, MatrixAndCounts) {
  Construction c = rtof4_long();
  std::vector<int> d(12, 0);
  d.push_back(1);
  d.push_back(3);
  EXPECT_EQ(pp(c.circuit), from_matrix(d, -1, 0, 2, -1, 4));
  expect_counts(c, 8, 6, 4);
  StateVector s = simulate_column<R>(c.circuit, 0b1110);
  EXPECT_EQ(s.amplitude(0b1111), -R::one());
}

TEST(Margolus, TCorePhases) {
  Circuit core = margolus_t_core();
  for (std::uint64_t in = 0; in < 8; ++in) {
    int a = (in >> 2) & 1, b = (in >> 1) & 1, c = in & 1;
    int exponent = c + (b ^ c) - (a ^ b ^ c) - (a ^ c);
    StateVector s = simulate_column<R>(core, in);
    ASSERT_EQ(s.amps.size(), 1u);
    EXPECT_EQ(s.amps[0].first, static_cast<std::uint64_t>((a << 2) | (b << 1) | (a ^ c)));
    EXPECT_EQ(s.amps[0].second, R::omega_pow(exponent)) << in;
  }
}

TEST(Margolus, VariantsAreRelativeToffolis) {
  auto v = margolus_variants();
  ASSERT_EQ(v.size(), 3u);
  for (const auto& m : v) {
    auto rep = check_implements(m.circuit, m.target);
    EXPECT_TRUE(rep.relative_phase) << m.name;
    EXPECT_FALSE(rep.exact) << m.name;
  }
  EXPECT_FALSE(v[0].target.controls[1].positive);
  EXPECT_FALSE(v[1].target.controls[1].positive);
  EXPECT_TRUE(v[2].target.controls[1].positive);
  EXPECT_EQ(count_resources(v[1].circuit).cnot, 3);
  EXPECT_EQ(count_resources(v[1].circuit).t, 0);
  // Dense float oracle agrees with the R_Y variant being a relative Toffoli.
  oracle::Mat u = oracle::unitary(v[2].circuit);
  oracle::Mat t = oracle::diag_with_block({1, 1, 1, 1, 1, 1}, 0, 1, 1, 0);
  for (std::size_t i = 0; i < 8; ++i)
    for (std::size_t j = 0; j < 8; ++j) EXPECT_NEAR(std::abs(u(i, j)), std::abs(t(i, j)), 1e-9);
}

TEST(Composite, ToffoliFour) {
  Construction clean = tof4_clean();
  expect_counts(clean, 15, 12, 6, 1);
  expect_verified(clean);
  StateVector s = simulate_column<R>(clean.circuit, 0b11010);
  EXPECT_EQ(s.amps[0].first, 0b11011u);
  Construction dirty = tof4_dirty();
  expect_counts(dirty, 16, 14, 6, 1);
  expect_verified(dirty);
  EXPECT_EQ(dirty.circuit.roles()[2], Role::dirty_ancilla);
}

TEST(Composite, ToffoliFive) {
  Construction clean = tof5_clean();
  expect_counts(clean, 23, 18, 10, 1);
  expect_verified(clean);
  EXPECT_EQ(simulate_column<R>(clean.circuit, 0).amps[0].first, 0u);
  Construction dirty = tof5_dirty();
  expect_counts(dirty, 24, 20, 10, 1);
  expect_verified(dirty);
}

TEST(Composite, PairCostIsTwiceRtofPlusOne) {
  EXPECT_EQ(count_resources(tof4_clean().circuit).cnot, 2 * 3 + 6);
  // With a CNOT in the middle: twice the RTOF cost plus one.
  EXPECT_EQ(count_resources(tof_rtof_pair(3).circuit).cnot,
            2 * count_resources(rtof3_long().circuit).cnot + 1);
  EXPECT_EQ(count_resources(tof_rtof_pair(4).circuit).cnot,
            2 * count_resources(rtof4_long().circuit).cnot + 1);
  expect_verified(tof_rtof_pair(3));
  expect_verified(tof_rtof_pair(4));
}

TEST(General, ClosedFormsForAllSizes) {
  for (int n = 4; n <= 16; ++n) {
    const int anc = (n - 3 + 1) / 2;
    expect_counts(tofn_clean(n), 8 * n - 17, 6 * n - 12, 4 * n - 10, anc);
    EXPECT_EQ(count_resources(tofn_clean(n).circuit).pz, 0);
    if (n >= 5) {
      expect_counts(tofn_dirty(n), 8 * n - 16, 8 * n - 20, 4 * n - 10, anc);
      EXPECT_EQ(count_resources(tofn_dirty(n).circuit).pz, 0);
    }
  }
  EXPECT_EQ(tofn_clean(4).circuit, tof4_clean().circuit);
  EXPECT_THROW(tofn_clean(3), Error);
  EXPECT_THROW(tofn_dirty(4), Error);
}

TEST(General, VerifiedUpToNine) {
  for (int n = 4; n <= 9; ++n) {
    expect_verified(tofn_clean(n));
    if (n >= 5) expect_verified(tofn_dirty(n));
  }
}

TEST(General, DirtyAncillaeAreAllDirty) {
  Construction c = tofn_dirty(8);
  auto dirty = c.circuit.qubits_with_role(Role::dirty_ancilla);
  EXPECT_EQ(dirty.size(), 3u);
  EXPECT_TRUE(c.circuit.qubits_with_role(Role::clean_ancilla).empty());
}

TEST(Ladder, MarkersAndCancellation) {
  Construction c = ladder_tofn(6);
  EXPECT_EQ(count_kind(c.markers, GateKind::RTOF3L), 10);
  EXPECT_EQ(count_kind(c.markers, GateKind::SRTS3), 2);
  expect_verified(c);
  for (int n = 6; n <= 11; ++n) {
    const int k = n - 1;
    Construction l = ladder_tofn(n);
    EXPECT_EQ(count_resources(l.circuit).t, 16 * k - 32);
    Circuit cancelled = cancel_adjacent_inverses(l.circuit);
    EXPECT_EQ(count_resources(cancelled).t, 12 * k - 20) << "n=" << n;
    EXPECT_EQ(count_kind(l.markers, GateKind::RTOF3L), 4 * n - 14);
  }
  // Cancellation keeps the unitary.
  Construction l6 = ladder_tofn(6);
  Circuit cancelled = cancel_adjacent_inverses(l6.circuit);
  EXPECT_TRUE(check_implements(cancelled, l6.target).exact);
}

TEST(TwoBlock, ShapeAndVerification) {
  Construction c = two_block_tofn(9, 6);
  EXPECT_EQ(c.markers.width(), 10u);
  EXPECT_EQ(c.markers.size(), 4u);
  EXPECT_EQ(c.markers[0].controls.size(), 5u);
  // Remaining three controls plus the ancilla.
  EXPECT_EQ(c.markers[1].controls.size(), 4u);
  expect_verified(c);
  expect_verified(two_block_tofn(5, 3));
  // k = n-1: the second block is a three-qubit special form.
  Construction d = two_block_tofn(5, 4);
  EXPECT_EQ(d.markers[1].kind, GateKind::SRTS3);
  EXPECT_EQ(d.markers[0].kind, GateKind::RTOF4L);
  expect_verified(d);
  EXPECT_THROW(two_block_tofn(5, 5), Error);
}

TEST(Cnu, ChainAndParallel) {
  Construction chain = cnu_clean_chain(5);
  EXPECT_EQ(count_kind(chain.markers, GateKind::RTOF3L), 8);
  EXPECT_EQ(count_kind(chain.markers, GateKind::CNOT), 1);
  Construction small = cnu_clean_chain(2);
  EXPECT_EQ(count_kind(small.markers, GateKind::RTOF3L), 2);
  expect_verified(small);
  for (CuOp op : {CuOp::x, CuOp::z, CuOp::p}) {
    expect_verified(cnu_clean_chain(4, op));
    expect_verified(cnu_parallel(4, op));
  }
  EXPECT_LT(count_resources(cnu_parallel(6).circuit).t_depth,
            count_resources(cnu_clean_chain(6).circuit).t_depth);
}

TEST(Catalog, EveryNameSynthesizes) {
  std::map<std::string, SynthRequest> reqs;
  for (const auto& name : catalog_names()) {
    SynthRequest r;
    r.gate = name;
    r.n = name == "ladder" ? 6 : name == "tof_rtof_pair" ? 3 : name == "two_block" ? 5 : 4;
    r.k = 3;
    if (name == "tofn_dirty") r.n = 5;
    if (name == "tof") r.ancilla = "dirty";
    Construction c = synthesize(r);
    EXPECT_FALSE(c.circuit.empty()) << name;
    expect_verified(c);
  }
  SynthRequest bad;
  bad.gate = "nope";
  EXPECT_THROW(synthesize(bad), Error);
}

TEST(Catalog, InverseOfEveryRtofIsRtof) {
  for (const Construction& c : {rtof3_long(), srtof3_ccix(), srtof3_ccix(true), rtof4_long()}) {
    auto inv = pp(inverse(c.circuit));
    EXPECT_TRUE(is_relative_phase_of(inv, c.target)) << c.name;
  }
}

}  // namespace
}  // namespace rphase
