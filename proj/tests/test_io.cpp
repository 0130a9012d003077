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

#include <random>

#include "oracle.hpp"
#include "rphase/constructions.hpp"
#include "rphase/error.hpp"
#include "rphase/io.hpp"

namespace rphase {
namespace {

const char* kHeader = "OPENQASM 2.0;\ninclude \"qelib1.inc\";\n";

Error parse_error(const std::string& text, bool strict = false) {
  try {
    parse_qasm(text, strict);
  } catch (const Error& e) {
    return e;
  }
  ADD_FAILURE() << "parse succeeded:\n" << text;
  return Error(Errc::internal, "");
}

TEST(Qasm, EmitCnot) {
  Circuit c(2);
  c.add(Gate::cx(0, 1));
  EXPECT_EQ(emit_qasm(c), std::string(kHeader) + "qreg q[2];\ncx q[0],q[1];\n");
}

TEST(Qasm, RoundTripToffoli) {
  Circuit c = toffoli3().circuit;
  Circuit back = parse_qasm(emit_qasm(c));
  EXPECT_EQ(back, c);
  EXPECT_EQ(back.size(), 15u);
}

TEST(Qasm, CcxIsTofWithTwoControls) {
  Circuit c = parse_qasm(std::string(kHeader) + "qreg q[3];\nccx q[0],q[1],q[2];\n");
  ASSERT_EQ(c.size(), 1u);
  EXPECT_EQ(c[0], Gate::tof({0, 1}, 2));
}

TEST(Qasm, RoundTripRandomLoweredCircuits) {
  std::mt19937 rng(21);
  for (int i = 0; i < 50; ++i) {
    Circuit c = lower(oracle::random_circuit(rng, 5, 20, true));
    EXPECT_EQ(parse_qasm(emit_qasm(c)), c);
  }
}

TEST(Qasm, RoundTripMarkersNegativeControlsAndRoles) {
  Circuit c(6);
  c.set_role(QubitId{4}, Role::clean_ancilla);
  c.set_role(QubitId{5}, Role::dirty_ancilla);
  c.add(Gate::marker(GateKind::RTOF3L, {0, 1, 4}));
  c.add(Gate::marker(GateKind::RT4S, {0, 1, 2, 3}, true));
  c.add(Gate::cx(2, 3, false));
  c.add(Gate::tof(std::vector<Control>{{QubitId{0}, false}, {QubitId{1}, true}}, 2));
  c.add(Gate::tof({0, 1, 2}, 3));
  c.add(Gate::ry(0, -2));
  std::string text = emit_qasm(c);
  EXPECT_NE(text.find("// rphase: {\"roles\":"), std::string::npos);
  EXPECT_NE(text.find("\"kind\":\"rtof3l\""), std::string::npos);
  EXPECT_EQ(parse_qasm(text), c);
}

TEST(Qasm, StrictRejectsMetadata) {
  Circuit c(3);
  c.add(Gate::marker(GateKind::SRTOF3, {0, 1, 2}));
  Error e = parse_error(emit_qasm(c), true);
  EXPECT_EQ(e.code(), Errc::parse_error);
  EXPECT_NE(std::string(e.what()).find("strict"), std::string::npos);
}

TEST(Qasm, IgnoresCregBarrierAndComments) {
  Circuit c = parse_qasm(std::string(kHeader) +
                         "qreg a[2];\nqreg b[1];\ncreg m[3];\n// a note\nbarrier a[0],b[0];\n"
                         "h a[1];\nCX a[1],b[0];\n");
  EXPECT_EQ(c.width(), 3u);
  ASSERT_EQ(c.size(), 2u);
  EXPECT_EQ(c[0], Gate::h(1));
  EXPECT_EQ(c[1], Gate::cx(1, 2));
}

TEST(Qasm, RyAngleExpressions) {
  Circuit c = parse_qasm(std::string(kHeader) +
                         "qreg q[1];\nry(pi/4) q[0];\nry(-pi/2) q[0];\nry(3*pi/4) q[0];\n"
                         "ry((pi+pi)/8) q[0];\nry(0.7853981633974483) q[0];\n");
  ASSERT_EQ(c.size(), 5u);
  EXPECT_EQ(c[0].angle, 1);
  EXPECT_EQ(c[1].angle, -2);
  EXPECT_EQ(c[2].angle, 3);
  EXPECT_EQ(c[3].angle, 1);
  EXPECT_EQ(c[4].angle, 1);
  EXPECT_EQ(parse_qasm(emit_qasm(c)), c);
}

TEST(Qasm, RyOffGridIsUnsupported) {
  Error e = parse_error(std::string(kHeader) + "qreg q[1];\nry(pi/3) q[0];\n");
  EXPECT_EQ(e.code(), Errc::unsupported_gate);
}

TEST(Qasm, UnsupportedGate) {
  Error e = parse_error(std::string(kHeader) + "qreg q[2];\nswap q[0],q[1];\n");
  EXPECT_EQ(e.code(), Errc::unsupported_gate);
  EXPECT_NE(std::string(e.what()).find("line 4, column 1"), std::string::npos) << e.what();
}

TEST(Qasm, ParseErrorsCarryPosition) {
  Error e = parse_error(std::string(kHeader) + "qreg q[2];\ncx q[0] q[1];\n");
  EXPECT_EQ(e.code(), Errc::parse_error);
  EXPECT_NE(std::string(e.what()).find("line 4, column 9"), std::string::npos) << e.what();

  Error oob = parse_error(std::string(kHeader) + "qreg q[2];\nx q[2];\n");
  EXPECT_EQ(oob.code(), Errc::parse_error);
  EXPECT_NE(std::string(oob.what()).find("line 4"), std::string::npos);

  Error reg = parse_error(std::string(kHeader) + "qreg q[2];\nx r[0];\n");
  EXPECT_EQ(reg.code(), Errc::parse_error);

  Error same = parse_error(std::string(kHeader) + "qreg q[2];\ncx q[1],q[1];\n");
  EXPECT_EQ(same.code(), Errc::parse_error);

  Error unterminated = parse_error(std::string(kHeader) +
                                   "qreg q[3];\n// rphase: {\"begin\":true,\"kind\":\"rtof3l\","
                                   "\"dagger\":false,\"controls\":[[0,true],[1,true]],"
                                   "\"targets\":[2],\"angle\":0}\nh q[2];\n");
  EXPECT_EQ(unterminated.code(), Errc::parse_error);
}

TEST(Json, RoundTrip) {
  Circuit c = tof4_dirty().markers;
  std::string j = emit_json(c);
  EXPECT_EQ(parse_json(j), c);
  EXPECT_EQ(parse_circuit(j), c);
  EXPECT_EQ(parse_circuit("  " + emit_qasm(c)), c);
}

TEST(Json, RejectsGarbage) {
  try {
    parse_json("{\"width\": 2, \"gates\": [{\"kind\": \"swap\"}]}");
    FAIL();
  } catch (const Error& e) {
    EXPECT_TRUE(e.code() == Errc::parse_error || e.code() == Errc::unsupported_gate);
  }
  EXPECT_THROW(parse_json("{"), Error);
}

}  // namespace
}  // namespace rphase
