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

#include <stdexcept>
#include <string>

namespace rphase {

enum class Errc {
  invalid_argument,
  parse_error,
  unsupported_gate,
  no_construction,
  ancilla_budget,
  arity_mismatch,
  special_form_violated,
  not_phase_permutation,
  not_relative_phase,
  width_limit,
  marker_in_simulation,
  coefficient_overflow,
  backend_unsupported,
  internal,
};

const char* errc_name(Errc e);

class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what)
      : std::runtime_error(what), code_(code) {}
  Errc code() const { return code_; }

 private:
  Errc code_;
};

}  // namespace rphase
