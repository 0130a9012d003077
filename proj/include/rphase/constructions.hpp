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

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "rphase/circuit.hpp"

namespace rphase {

struct ClaimedCounts {
  std::optional<int> t, cnot, h, pz, ancillas;
};

/// A generated circuit together with what it implements.
struct Construction {
  std::string name;
  std::vector<std::pair<std::string, int>> params;
  Circuit circuit;  // lowered (multi-control TOFs may remain, see two_block_tofn)
  Circuit markers;  // marker-level form; equals `circuit` for elementary ones
  TargetSpec target;
  // Truncated forms: circuit followed by tail implements target.
  std::vector<Gate> tail;
  ClaimedCounts claimed;
  std::string description;
};

// Elementary gate bodies on explicit qubits, target last.
std::vector<Gate> toffoli3_gates(std::uint32_t a, std::uint32_t b, std::uint32_t c);
std::vector<Gate> srts3_gates(std::uint32_t a, std::uint32_t b, std::uint32_t c);
std::vector<Gate> rtof3_long_gates(std::uint32_t a, std::uint32_t b, std::uint32_t c);
std::vector<Gate> rts3_gates(std::uint32_t a, std::uint32_t b, std::uint32_t c);
std::vector<Gate> srtof3_ccix_gates(std::uint32_t a, std::uint32_t b, std::uint32_t c);
std::vector<Gate> rtof4_long_gates(std::uint32_t a, std::uint32_t b, std::uint32_t c,
                                   std::uint32_t d);
std::vector<Gate> rt4s_gates(std::uint32_t a, std::uint32_t b, std::uint32_t c,
                             std::uint32_t d);
// Elementary expansion of a marker gate, honouring its dagger flag.
std::vector<Gate> marker_expansion(const Gate& marker);

Construction toffoli3();
// With cz_at_end the CZ is moved behind the relative-phase Toffoli.
Construction srtof3_ccix(bool cz_at_end = false);
Construction rtof3_long();
Construction rts3();
Construction srts3();
// 0: T-based core conjugated by H on the target, 1: RY(+,-,+,-),
// 2: RY(+,+,-,-). The first two have a negative middle control.
std::vector<Construction> margolus_variants();
// Diagonal T-phase core of the first variant, without the H pair.
Circuit margolus_t_core();
Construction rtof4_long();
Construction rt4s();
Construction tof4_clean();
Construction tof4_dirty();
Construction tof5_clean();
Construction tof5_dirty();
Construction tofn_clean(int n);
Construction tofn_dirty(int n);
Construction ladder_tofn(int n);
Construction two_block_tofn(int n, int k);

enum class CuOp { x, z, p };
Construction cnu_clean_chain(int n, CuOp op = CuOp::x);
Construction cnu_parallel(int n, CuOp op = CuOp::x);
// TOF^n from a relative-phase pair around one CNOT; n in {3, 4}.
Construction tof_rtof_pair(int n);

struct SynthRequest {
  std::string gate;
  int n = 0;
  int k = 0;
  std::string ancilla;  // "", "clean" or "dirty"
  int variant = 0;
  std::string u = "x";
};

std::vector<std::string> catalog_names();
Construction synthesize(const SynthRequest& req);

}  // namespace rphase
