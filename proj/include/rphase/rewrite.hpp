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

#include <string>
#include <vector>

#include "rphase/circuit.hpp"
#include "rphase/simulate.hpp"

namespace rphase {

/**
 * Which conjugation identity a TOF pair admits, decided from qubit support:
 *  - prop1: the middle avoids the Toffoli controls and uses the target only
 *    diagonally (as a control or through a phase gate).
 *  - prop2: the middle avoids the target and touches a nonempty subset Y of
 *    the controls; Z is the rest of the controls.
 *  - prop3: the middle touches the target; W (controls it avoids) is
 *    nonempty and Z is the controls it touches.
 */
enum class Proposition { prop1, prop2, prop3, none };
const char* proposition_name(Proposition p);

struct ConjugationMatch {
  std::size_t left_index = 0;
  std::size_t right_index = 0;
  std::vector<Gate> middle;
  Proposition classification = Proposition::none;
  // Toffoli controls (x), controls touched by the middle (y), untouched
  // controls (z for prop2, w for prop3), the target (a).
  std::vector<QubitId> x, y, z, w;
  QubitId a;
};

// All pairs i < j of identical TOF gates, each with its classification.
std::vector<ConjugationMatch> find_conjugations(const Circuit& c);

enum class Implementation { toffoli, rtof3_long, srtof3_ccix, rtof4_long, srts3, rts3, rt4s };

struct ImplementationInfo {
  Implementation id;
  const char* name;
  GateKind marker;          // TOF for the plain Toffoli
  int arity;                // 0: any
  std::vector<int> v_slots; // marker positions touched by the trailing V
};

// In catalog order; also the tie-break order of the default policy.
const std::vector<ImplementationInfo>& implementations();
const ImplementationInfo& implementation_info(Implementation id);

struct ReplaceOptions {
  // Skip the classification and type checks; for negative tests.
  bool force = false;
};

/**
 * Replaces the matched pair by a marker and its inverse, choosing an order
 * of the controls under which the implementation's phase pattern and V
 * support fit the match. The plain Toffoli leaves the circuit unchanged.
 */
Circuit apply_replacement(const Circuit& c, const ConjugationMatch& m, Implementation impl,
                          const ReplaceOptions& opt = {});
bool replacement_fits(const ConjugationMatch& m, Implementation impl);

struct CanonicDecomposition {
  TargetSpec tof;
  std::vector<RingElement> diagonal;  // D in U = TOF * D
};

CanonicDecomposition canonic_decompose(const PhasePermutation<RingElement>& g,
                                       const TargetSpec& tof);
PhasePermutation<RingElement> compose(const CanonicDecomposition& d, std::uint32_t width);

// Removes g, g^-1 pairs separated only by gates on disjoint qubits, to a
// fixed point.
Circuit cancel_adjacent_inverses(const Circuit& c);

struct RewriteRules {
  bool prop1 = true;
  bool prop2 = true;
  bool prop3 = false;
  bool cancel = false;
  static RewriteRules parse(const std::string& list);
};

struct RewriteResult {
  Circuit circuit;
  int replacements = 0;
  int cancelled_gates = 0;
};

/**
 * Applies enabled replacements (leftmost pair first, then shortest span)
 * with the cheapest fitting implementation until none applies; with
 * `cancel` the result is lowered and inverse pairs are removed.
 */
RewriteResult rewrite(const Circuit& c, const RewriteRules& rules);

}  // namespace rphase
