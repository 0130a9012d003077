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

#include <optional>
#include <string>
#include <vector>

#include "rphase/circuit.hpp"
#include "rphase/resources.hpp"

namespace rphase {

struct TableRow {
  int n = 0;
  std::string ancilla;  // "clean" or "dirty"
  ResourceReport counts;
};

// Builds and counts tofn_clean / tofn_dirty for each n; a count that
// disagrees with the closed forms throws Errc::internal.
std::vector<TableRow> build_table(const std::vector<int>& ns);
std::string format_table(const std::vector<TableRow>& rows, bool csv);

struct LayoutRequest {
  std::string op = "tof";  // "tof" or "identity"
  int n = 0;               // 0: infer
  std::string layout;      // per-qubit letters, comma separated; see below
  std::string ancilla;     // "", "clean" or "dirty"
  std::string equivalence = "exact";
  std::string xprime;      // comma separated qubit indices
};

/**
 * Resolves the qubit roles and target of a verification request.
 * Layout letters: c control, n negative control, t target, 0 clean
 * ancilla, x dirty ancilla, i idle. Without a layout the primary qubits
 * are the controls followed by the target. The returned circuit carries
 * the resolved roles.
 */
std::pair<Circuit, TargetSpec> resolve_target(const Circuit& c, const LayoutRequest& req);

}  // namespace rphase
