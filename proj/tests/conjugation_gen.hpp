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

// Random marker circuits containing a TOF pair around a middle block shaped
// for one of the three conjugation identities.

#pragma once

#include <algorithm>
#include <random>
#include <vector>

#include "rphase/circuit.hpp"

namespace rphase::gen {

enum class Shape { prop1, prop2, prop3 };

inline std::uint32_t pick(std::mt19937& rng, const std::vector<std::uint32_t>& v) {
  return v[std::uniform_int_distribution<std::size_t>(0, v.size() - 1)(rng)];
}

// One random gate on `free` qubits; if `diag` is set it may also use it
// as a control or through a phase gate.
inline void random_gate(std::mt19937& rng, Circuit& c, const std::vector<std::uint32_t>& free,
                        int diag = -1) {
  std::uniform_int_distribution<int> kind(0, 9);
  const int k = kind(rng);
  if (diag >= 0 && k < 4) {
    const auto d = static_cast<std::uint32_t>(diag);
    if (k == 0) c.add(Gate::t(d));
    else if (k == 1 || free.size() < 2) c.add(free.empty() ? Gate::p(d) : Gate::cx(d, pick(rng, free)));
    else if (k == 2) c.add(Gate::cz(d, pick(rng, free)));
    else {
      std::uint32_t x = pick(rng, free), y = pick(rng, free);
      while (y == x) y = pick(rng, free);
      c.add(Gate::tof({d, x}, y));
    }
    return;
  }
  if (free.empty()) return;
  const std::uint32_t q = pick(rng, free);
  if (free.size() < 2 || k < 6) {
    static const GateKind one[] = {GateKind::H, GateKind::T, GateKind::Tdg, GateKind::P,
                                   GateKind::X, GateKind::Y, GateKind::Z, GateKind::Pdg};
    GateKind g = one[std::uniform_int_distribution<int>(0, 7)(rng)];
    switch (g) {
      case GateKind::H: c.add(Gate::h(q)); break;
      case GateKind::T: c.add(Gate::t(q)); break;
      case GateKind::Tdg: c.add(Gate::tdg(q)); break;
      case GateKind::P: c.add(Gate::p(q)); break;
      case GateKind::X: c.add(Gate::x(q)); break;
      case GateKind::Y: c.add(Gate::y(q)); break;
      case GateKind::Z: c.add(Gate::z(q)); break;
      default: c.add(Gate::pdg(q));
    }
    return;
  }
  std::uint32_t r = pick(rng, free);
  while (r == q) r = pick(rng, free);
  if (k < 8) {
    c.add(Gate::cx(q, r));
  } else if (free.size() >= 3) {
    std::uint32_t s = pick(rng, free);
    while (s == q || s == r) s = pick(rng, free);
    c.add(Gate::marker(GateKind::RTOF3L, {q, r, s}, k == 9));
  } else {
    c.add(Gate::cz(q, r));
  }
}

struct Instance {
  Circuit circuit;
  Shape shape;
};

// Width in [4, 7]; the Toffoli has two or three controls. Random gates on
// all qubits pad both ends.
inline Instance random_instance(std::mt19937& rng, Shape shape) {
  const auto width = std::uniform_int_distribution<std::uint32_t>(4, 7)(rng);
  const std::size_t nctl = width >= 5 && (rng() & 1) ? 3 : 2;
  std::vector<std::uint32_t> all(width);
  for (std::uint32_t i = 0; i < width; ++i) all[i] = i;
  std::shuffle(all.begin(), all.end(), rng);
  std::vector<std::uint32_t> x(all.begin(), all.begin() + static_cast<std::ptrdiff_t>(nctl));
  const std::uint32_t a = all[nctl];
  std::vector<std::uint32_t> rest(all.begin() + static_cast<std::ptrdiff_t>(nctl + 1), all.end());

  Circuit c(width);
  std::vector<std::uint32_t> everyone(width);
  for (std::uint32_t i = 0; i < width; ++i) everyone[i] = i;
  for (int i = 0; i < 3; ++i) random_gate(rng, c, everyone);
  c.add(Gate::tof(x, a));

  const int len = std::uniform_int_distribution<int>(1, 5)(rng);
  if (shape == Shape::prop1) {
    // Avoid X; touch a only diagonally.
    for (int i = 0; i < len; ++i) random_gate(rng, c, rest, static_cast<int>(a));
  } else if (shape == Shape::prop2) {
    // Nonempty Y from X plus the other qubits; avoid a and Z.
    const std::size_t ny = std::uniform_int_distribution<std::size_t>(1, nctl - 1)(rng);
    std::vector<std::uint32_t> allowed(x.begin(), x.begin() + static_cast<std::ptrdiff_t>(ny));
    allowed.insert(allowed.end(), rest.begin(), rest.end());
    c.add(Gate::cx(rest[0], x[0]));  // rest is never empty here
    for (int i = 0; i < len; ++i) random_gate(rng, c, allowed);
  } else {
    // Touch a and a strict subset Z of X, leaving W nonempty.
    const std::size_t nz = std::uniform_int_distribution<std::size_t>(0, nctl - 1)(rng);
    std::vector<std::uint32_t> allowed(x.begin(), x.begin() + static_cast<std::ptrdiff_t>(nz));
    allowed.push_back(a);
    allowed.insert(allowed.end(), rest.begin(), rest.end());
    c.add(Gate::h(a));
    for (int i = 0; i < len; ++i) random_gate(rng, c, allowed);
  }
  c.add(Gate::tof(x, a));
  for (int i = 0; i < 3; ++i) random_gate(rng, c, everyone);
  return {c, shape};
}

}  // namespace rphase::gen
