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

#include "rphase/verify.hpp"

#include <json.hpp>

#include "rphase/error.hpp"

namespace rphase {

namespace {

std::uint64_t bit(std::uint32_t width, QubitId q) {
  return 1ull << (width - 1 - q.index);
}

std::uint64_t mask_of(std::uint32_t width, const std::vector<QubitId>& qs) {
  std::uint64_t m = 0;
  for (auto q : qs) m |= bit(width, q);
  return m;
}

void check_spec_width(const TargetSpec& spec, std::uint32_t width) {
  spec.validate();
  for (const auto& c : spec.controls)
    if (c.qubit.index >= width)
      throw Error(Errc::invalid_argument, "target spec qubit out of range");
  if (spec.target && spec.target->index >= width)
    throw Error(Errc::invalid_argument, "target spec qubit out of range");
}

template <class Amp>
Amp phase_of_turns(int quarter_turns) {
  if constexpr (std::is_same_v<Amp, RingElement>) {
    return RingElement::omega_pow(2 * quarter_turns);
  } else {
    return std::polar(1.0, quarter_turns * M_PI / 2.0);
  }
}

}  // namespace

std::uint64_t target_image(const TargetSpec& spec, std::uint32_t width,
                           std::uint64_t column, int* quarter_turns) {
  if (quarter_turns) *quarter_turns = 0;
  if (spec.op == TargetOp::identity) return column;
  std::uint64_t cmask = 0, cval = 0;
  for (const auto& c : spec.controls) {
    cmask |= bit(width, c.qubit);
    if (c.positive) cval |= bit(width, c.qubit);
  }
  if ((column & cmask) != cval) return column;
  const std::uint64_t t = bit(width, *spec.target);
  switch (spec.op) {
    case TargetOp::x: return column ^ t;
    case TargetOp::z:
      if (quarter_turns && (column & t)) *quarter_turns = 2;
      return column;
    case TargetOp::s:
      if (quarter_turns && (column & t)) *quarter_turns = 1;
      return column;
    default: return column;
  }
}

template <class Amp>
PhasePermutation<Amp> target_permutation(const TargetSpec& spec, std::uint32_t width) {
  check_spec_width(spec, width);
  PhasePermutation<Amp> u;
  u.width = width;
  const std::uint64_t dim = 1ull << width;
  u.perm.resize(dim);
  u.phase.resize(dim);
  for (std::uint64_t j = 0; j < dim; ++j) {
    int turns = 0;
    u.perm[j] = target_image(spec, width, j, &turns);
    u.phase[j] = phase_of_turns<Amp>(turns);
  }
  return u;
}

template <class Amp>
bool is_relative_phase_of(const PhasePermutation<Amp>& u, const TargetSpec& target) {
  check_spec_width(target, u.width);
  for (std::uint64_t j = 0; j < u.perm.size(); ++j)
    if (u.perm[j] != target_image(target, u.width, j)) return false;
  return true;
}

template <class Amp>
bool is_special_form(const PhasePermutation<Amp>& u, const std::vector<QubitId>& xprime,
                     const TargetSpec& spec) {
  if (!is_relative_phase_of(u, spec)) return false;
  TargetSpec s = spec;
  s.xprime = xprime;
  check_spec_width(s, u.width);
  // Class representative: the column with every xprime digit cleared. The
  // phases compared are those of D in U = TOF * D, i.e. the column phases.
  const std::uint64_t m = mask_of(u.width, xprime);
  for (std::uint64_t j = 0; j < u.perm.size(); ++j)
    if (!amp_equal(u.phase[j], u.phase[j & ~m])) return false;
  return true;
}

int permutation_parity(const std::vector<std::uint64_t>& perm) {
  std::vector<char> seen(perm.size(), 0);
  int sign = 1;
  for (std::size_t i = 0; i < perm.size(); ++i) {
    if (seen[i]) continue;
    std::size_t len = 0;
    for (std::size_t j = i; !seen[j]; j = perm[j]) {
      seen[j] = 1;
      ++len;
    }
    if (len % 2 == 0) sign = -sign;
  }
  return sign;
}

int permutation_parity(const TargetSpec& spec, std::uint32_t width) {
  check_spec_width(spec, width);
  std::vector<std::uint64_t> perm(1ull << width);
  for (std::uint64_t j = 0; j < perm.size(); ++j) perm[j] = target_image(spec, width, j);
  return permutation_parity(perm);
}

template <class Amp>
bool global_phase_equal(const PhasePermutation<Amp>& u, const PhasePermutation<Amp>& v) {
  if (u.width != v.width || u.perm != v.perm) return false;
  if (u.phase.empty()) return true;
  const Amp r0 = u.phase[0] * amp_conj(v.phase[0]);
  for (std::size_t j = 1; j < u.phase.size(); ++j)
    if (!amp_equal(u.phase[j] * amp_conj(v.phase[j]), r0)) return false;
  return true;
}

namespace {

template <class Amp>
VerificationReport check_with(const Circuit& c, const TargetSpec& spec,
                              const SimOptions& opt) {
  const std::uint32_t w = c.width();
  const std::uint64_t clean = mask_of(w, c.qubits_with_role(Role::clean_ancilla));
  const std::uint64_t dirty = mask_of(w, c.qubits_with_role(Role::dirty_ancilla));
  VerificationReport rep;
  auto img = simulate_columns<Amp>(
      c, [clean](std::uint64_t j) { return (j & clean) == 0; }, opt, &rep.stats);
  if (!img.all_collapsed)
    throw Error(Errc::not_phase_permutation,
                "not a phase permutation: some basis column does not map to a "
                "single basis state");
  const std::uint64_t dim = 1ull << w;
  // ratio[j] = observed phase / expected phase.
  std::vector<Amp> ratio(dim);
  bool perm_ok = true, ancilla_ok = true;
  for (std::uint64_t j = 0; j < dim; ++j) {
    if (!img.simulated[j]) continue;
    int turns = 0;
    std::uint64_t expect = target_image(spec, w, j, &turns);
    ratio[j] = img.phase[j] * amp_conj(phase_of_turns<Amp>(turns));
    std::uint64_t row = img.row[j];
    if (row != expect) perm_ok = false;
    if ((row & clean) != 0) ancilla_ok = false;
    if ((row & dirty) != (j & dirty)) ancilla_ok = false;
  }
  const std::uint64_t xm = mask_of(w, spec.xprime);
  bool exact = perm_ok, global = perm_ok, special = perm_ok;
  const Amp* first = nullptr;
  for (std::uint64_t j = 0; j < dim; ++j) {
    if (!img.simulated[j]) continue;
    if (!amp_is_one(ratio[j])) exact = false;
    if (!first) first = &ratio[j];
    else if (!amp_equal(ratio[j], *first)) global = false;
    if (!amp_equal(ratio[j], ratio[j & ~xm])) special = false;
    // Dirty ancillae must not influence the phase.
    if (!amp_equal(ratio[j], ratio[j & ~dirty])) ancilla_ok = false;
  }
  rep.exact = exact;
  rep.global_phase = global;
  rep.relative_phase = perm_ok;
  rep.xprime = spec.xprime;
  rep.special_form = special;
  rep.ancilla_ok = ancilla_ok;
  return rep;
}

}  // namespace

VerificationReport check_implements(const Circuit& c, const TargetSpec& spec,
                                    std::optional<Backend> backend,
                                    const SimOptions& opt) {
  check_spec_width(spec, c.width());
  Circuit flat = c.has_markers() ? lower(c, LowerPolicy{MultiControl::none, true}) : c;
  Backend b = backend.value_or(select_backend(flat));
  if (b == Backend::ring && !ring_representable(flat))
    throw Error(Errc::backend_unsupported,
                "ring backend requested for a circuit with RY(odd*pi/4)");
  VerificationReport r = b == Backend::ring ? check_with<RingElement>(flat, spec, opt)
                                            : check_with<Complex>(flat, spec, opt);
  r.backend = b;
  return r;
}

bool VerificationReport::satisfies(const TargetSpec& spec) const {
  if (!ancilla_ok) return false;
  switch (spec.equivalence) {
    case Equivalence::exact: return exact;
    case Equivalence::global_phase: return global_phase;
    case Equivalence::relative_phase: return relative_phase;
    case Equivalence::special_form: return special_form;
  }
  return false;
}

std::string VerificationReport::to_json() const {
  nlohmann::ordered_json j;
  j["exact"] = exact;
  j["global_phase"] = global_phase;
  j["relative_phase"] = relative_phase;
  std::vector<std::uint32_t> xs;
  for (auto q : xprime) xs.push_back(q.index);
  j["special_form"] = {{"xprime", xs}, {"holds", special_form}};
  j["ancilla_ok"] = ancilla_ok;
  j["backend"] = backend_name(backend);
  return j.dump();
}

#define RPHASE_INSTANTIATE(A)                                                        \
  template PhasePermutation<A> target_permutation<A>(const TargetSpec&, std::uint32_t); \
  template bool is_relative_phase_of<A>(const PhasePermutation<A>&, const TargetSpec&); \
  template bool is_special_form<A>(const PhasePermutation<A>&,                       \
                                   const std::vector<QubitId>&, const TargetSpec&);  \
  template bool global_phase_equal<A>(const PhasePermutation<A>&,                    \
                                      const PhasePermutation<A>&);

RPHASE_INSTANTIATE(RingElement)
RPHASE_INSTANTIATE(Complex)

#undef RPHASE_INSTANTIATE

}  // namespace rphase
