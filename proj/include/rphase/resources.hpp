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

#include "rphase/circuit.hpp"

namespace rphase {

struct ResourceReport {
  int t = 0;
  int cnot = 0;
  int h = 0;
  int pz = 0;
  int other = 0;
  // Greedy layering; approximate.
  int t_depth = 0;
  int ancilla_count = 0;
  std::string ancilla_type = "none";

  bool operator==(const ResourceReport&) const = default;
  std::string to_json() const;
};

/**
 * Counts gates by bucket: T/Tdg, CNOT, H, P/Pdg/Z, everything else.
 * Markers, negative controls and multi-control TOFs are counted through
 * their default lowering; when the circuit has no ancilla room,
 * multi-control TOFs borrow scratch clean qubits.
 */
ResourceReport count_resources(const Circuit& c);

}  // namespace rphase
