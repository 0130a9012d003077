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
#include "rphase/simulate.hpp"

namespace rphase {

struct VerificationReport {
  bool exact = false;
  bool global_phase = false;
  bool relative_phase = false;
  std::vector<QubitId> xprime;
  bool special_form = false;
  bool ancilla_ok = false;
  Backend backend = Backend::ring;
  SimStats stats;

  // True when the verdict for spec.equivalence holds and ancillae behave.
  bool satisfies(const TargetSpec& spec) const;
  std::string to_json() const;
};

/**
 * Simulates every basis column (clean ancillae fixed to 0) and compares
 * against the target. Markers are lowered first; TOF gates run natively.
 */
VerificationReport check_implements(const Circuit& c, const TargetSpec& spec,
                                    std::optional<Backend> backend = std::nullopt,
                                    const SimOptions& opt = {});

// Image of a basis column under the target, and the expected phase as a
// power of i (0 for X targets).
std::uint64_t target_image(const TargetSpec& spec, std::uint32_t width,
                           std::uint64_t column, int* quarter_turns = nullptr);

template <class Amp>
PhasePermutation<Amp> target_permutation(const TargetSpec& spec, std::uint32_t width);

template <class Amp>
bool is_relative_phase_of(const PhasePermutation<Amp>& u, const TargetSpec& target);

// Phases of the canonic diagonal agree on every class of basis states that
// differ only in the positions of xprime.
template <class Amp>
bool is_special_form(const PhasePermutation<Amp>& u, const std::vector<QubitId>& xprime,
                     const TargetSpec& spec);

int permutation_parity(const std::vector<std::uint64_t>& perm);
int permutation_parity(const TargetSpec& spec, std::uint32_t width);
template <class Amp>
int permutation_parity(const PhasePermutation<Amp>& u) {
  return permutation_parity(u.perm);
}

template <class Amp>
bool global_phase_equal(const PhasePermutation<Amp>& u, const PhasePermutation<Amp>& v);

}  // namespace rphase
