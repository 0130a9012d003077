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

/**
 * OpenQASM 2.0 subset: qreg, creg (ignored), barrier (ignored), x y z s
 * sdg t tdg h ry cx cz ccx. Gates the subset cannot express (markers,
 * negative controls, TOF with other than two controls) are written as
 *
 *   // rphase: {"begin": ..., "kind": ..., "controls": [[q, pos], ...], ...}
 *   <elementary expansion>
 *   // rphase: {"end": true}
 *
 * and reassembled on parse unless `strict` is set, in which case such
 * comments are rejected. Qubit roles travel in a `// rphase: {"roles": ...}`
 * line after the qreg declarations.
 */
std::string emit_qasm(const Circuit& c);
Circuit parse_qasm(const std::string& text, bool strict = false);

// Marker-level JSON: {"width", "roles", "gates": [{"kind", "dagger",
// "controls": [[q, positive]], "targets", "angle"}]}.
std::string emit_json(const Circuit& c);
Circuit parse_json(const std::string& text);

// JSON if the first non-space character is '{', QASM otherwise.
Circuit parse_circuit(const std::string& text, bool strict = false);

}  // namespace rphase
