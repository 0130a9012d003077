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

#include <complex>
#include <cstdint>
#include <functional>
#include <utility>
#include <variant>
#include <vector>

#include "rphase/circuit.hpp"
#include "rphase/ring.hpp"

namespace rphase {

using Complex = std::complex<double>;

enum class Backend { ring, floating };
const char* backend_name(Backend b);

// Float when some RY angle is an odd multiple of pi/4, ring otherwise.
Backend select_backend(const Circuit& c);
bool ring_representable(const Circuit& c);

constexpr double kFloatTolerance = 1e-9;

bool amp_equal(const RingElement& x, const RingElement& y);
bool amp_equal(const Complex& x, const Complex& y);
bool amp_is_one(const RingElement& x);
bool amp_is_one(const Complex& x);
RingElement amp_conj(const RingElement& x);
Complex amp_conj(const Complex& x);

/// Sparse state; entries sorted by basis index after every branching gate.
/// Qubit 0 is the most significant bit of the basis index.
template <class Amp>
struct SparseState {
  std::uint32_t width = 0;
  std::vector<std::pair<std::uint64_t, Amp>> amps;

  static SparseState basis(std::uint32_t width, std::uint64_t index);
  Amp amplitude(std::uint64_t index) const;
  void sort();
};

using StateVector = SparseState<RingElement>;
using FloatStateVector = SparseState<Complex>;

template <class Amp>
void apply_gate_inplace(SparseState<Amp>& s, const Gate& g);

template <class Amp>
SparseState<Amp> apply_gate(SparseState<Amp> s, const Gate& g) {
  apply_gate_inplace(s, g);
  return s;
}

/// U|j> = phase[j] |perm[j]>; phases indexed by column.
template <class Amp>
struct PhasePermutation {
  std::uint32_t width = 0;
  std::vector<std::uint64_t> perm;
  std::vector<Amp> phase;

  PhasePermutation inverse() const;
  bool operator==(const PhasePermutation& o) const;
};

/// Column-major matrix; each column kept sparse.
template <class Amp>
struct DenseMatrix {
  std::uint32_t width = 0;
  std::vector<SparseState<Amp>> columns;

  Amp at(std::uint64_t row, std::uint64_t col) const {
    return columns[col].amplitude(row);
  }
};

template <class Amp>
using Unitary = std::variant<PhasePermutation<Amp>, DenseMatrix<Amp>>;

struct SimOptions {
  std::uint32_t width_limit = 16;
  std::uint32_t dense_width_limit = 12;
  unsigned threads = 0;  // 0: hardware concurrency
};

struct SimStats {
  std::size_t max_support = 0;
  std::uint64_t columns = 0;
};

/// Result of pushing selected basis columns through a circuit.
template <class Amp>
struct ColumnImages {
  std::uint32_t width = 0;
  std::vector<char> simulated;
  std::vector<char> collapsed;  // single basis state in the output
  std::vector<std::uint64_t> row;
  std::vector<Amp> phase;
  bool all_collapsed = true;
};

// Columns where `include` is false are skipped. Markers are rejected.
template <class Amp>
ColumnImages<Amp> simulate_columns(const Circuit& c,
                                   const std::function<bool(std::uint64_t)>& include,
                                   const SimOptions& opt = {},
                                   SimStats* stats = nullptr);

template <class Amp>
SparseState<Amp> simulate_column(const Circuit& c, std::uint64_t column,
                                 std::size_t* max_support = nullptr);

template <class Amp>
Unitary<Amp> unitary_columns(const Circuit& c, const SimOptions& opt = {},
                             SimStats* stats = nullptr);

// Exact equality of the full unitaries (markers lowered, TOFs native).
template <class Amp>
bool unitaries_equal(const Circuit& a, const Circuit& b, const SimOptions& opt = {});

}  // namespace rphase
