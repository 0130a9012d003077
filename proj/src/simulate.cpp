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

#include "rphase/simulate.hpp"

#include <algorithm>
#include <cmath>
#include <thread>

#include "rphase/error.hpp"

namespace rphase {

const char* backend_name(Backend b) {
  return b == Backend::ring ? "ring" : "float";
}

bool ring_representable(const Circuit& c) {
  return std::none_of(c.gates().begin(), c.gates().end(), [](const Gate& g) {
    return g.kind == GateKind::RY && (g.angle % 2 != 0);
  });
}

Backend select_backend(const Circuit& c) {
  return ring_representable(c) ? Backend::ring : Backend::floating;
}

bool amp_equal(const RingElement& x, const RingElement& y) { return x == y; }
bool amp_equal(const Complex& x, const Complex& y) {
  return std::abs(x - y) <= kFloatTolerance;
}
bool amp_is_one(const RingElement& x) { return x == RingElement::one(); }
bool amp_is_one(const Complex& x) { return amp_equal(x, Complex(1.0, 0.0)); }
RingElement amp_conj(const RingElement& x) { return x.conj(); }
Complex amp_conj(const Complex& x) { return std::conj(x); }

namespace {

template <class Amp>
struct Ops;

template <>
struct Ops<RingElement> {
  static RingElement one() { return RingElement::one(); }
  static RingElement rotate(const RingElement& a, int p) { return a.mul_omega(p); }
  static RingElement halve_sqrt2(const RingElement& a) { return a.div_sqrt2(); }
  static bool is_zero(const RingElement& a) { return a.is_zero(); }
  // cos and sin of angle*pi/8.
  static std::pair<RingElement, RingElement> half_angle(int angle) {
    if (angle % 2 != 0)
      throw Error(Errc::backend_unsupported,
                  "RY(" + std::to_string(angle) +
                      "*pi/4) is not representable in the ring backend");
    int m = angle / 2;
    RingElement quarter(1, 0, 0, 0, 2);
    RingElement sum = RingElement::omega_pow(m) + RingElement::omega_pow(-m);
    RingElement diff = RingElement::omega_pow(m) - RingElement::omega_pow(-m);
    return {sum * quarter, diff.mul_omega(-2) * quarter};
  }
};

template <>
struct Ops<Complex> {
  static Complex one() { return {1.0, 0.0}; }
  static Complex rotate(const Complex& a, int p) {
    return a * std::polar(1.0, p * M_PI / 4.0);
  }
  static Complex halve_sqrt2(const Complex& a) { return a * M_SQRT1_2; }
  static bool is_zero(const Complex& a) { return std::abs(a) < 1e-12; }
  static std::pair<Complex, Complex> half_angle(int angle) {
    double th = angle * M_PI / 8.0;
    return {Complex(std::cos(th), 0.0), Complex(std::sin(th), 0.0)};
  }
};

struct GateMasks {
  std::uint64_t ctrl_mask = 0;
  std::uint64_t ctrl_val = 0;
  std::uint64_t tbit = 0;
};

GateMasks masks(const Gate& g, std::uint32_t width) {
  GateMasks m;
  for (const auto& c : g.controls) {
    std::uint64_t b = 1ull << (width - 1 - c.qubit.index);
    m.ctrl_mask |= b;
    if (c.positive) m.ctrl_val |= b;
  }
  m.tbit = 1ull << (width - 1 - g.targets[0].index);
  return m;
}

template <class Amp>
void merge(SparseState<Amp>& s) {
  auto& v = s.amps;
  std::sort(v.begin(), v.end(),
            [](const auto& x, const auto& y) { return x.first < y.first; });
  std::size_t out = 0;
  for (std::size_t i = 0; i < v.size();) {
    std::uint64_t idx = v[i].first;
    Amp sum = v[i].second;
    std::size_t j = i + 1;
    for (; j < v.size() && v[j].first == idx; ++j) sum = sum + v[j].second;
    if (!Ops<Amp>::is_zero(sum)) v[out++] = {idx, sum};
    i = j;
  }
  v.resize(out);
}

}  // namespace

template <class Amp>
SparseState<Amp> SparseState<Amp>::basis(std::uint32_t width, std::uint64_t index) {
  SparseState s;
  s.width = width;
  s.amps.push_back({index, Ops<Amp>::one()});
  return s;
}

template <class Amp>
Amp SparseState<Amp>::amplitude(std::uint64_t index) const {
  for (const auto& [i, a] : amps)
    if (i == index) return a;
  return Amp{};
}

template <class Amp>
void SparseState<Amp>::sort() {
  std::sort(amps.begin(), amps.end(),
            [](const auto& x, const auto& y) { return x.first < y.first; });
}

template <class Amp>
void apply_gate_inplace(SparseState<Amp>& s, const Gate& g) {
  if (is_marker(g.kind))
    throw Error(Errc::marker_in_simulation, "marker gate in simulation: " + g.to_string());
  const GateMasks m = masks(g, s.width);
  auto active = [&](std::uint64_t idx) { return (idx & m.ctrl_mask) == m.ctrl_val; };
  auto phase_if_set = [&](int p) {
    for (auto& [idx, a] : s.amps)
      if (active(idx) && (idx & m.tbit)) a = Ops<Amp>::rotate(a, p);
  };
  switch (g.kind) {
    case GateKind::X:
    case GateKind::CNOT:
    case GateKind::TOF:
      for (auto& e : s.amps)
        if (active(e.first)) e.first ^= m.tbit;
      return;
    case GateKind::Y:
      for (auto& [idx, a] : s.amps) {
        if (!active(idx)) continue;
        a = Ops<Amp>::rotate(a, (idx & m.tbit) ? 6 : 2);
        idx ^= m.tbit;
      }
      return;
    case GateKind::Z:
    case GateKind::CZ: return phase_if_set(4);
    case GateKind::P: return phase_if_set(2);
    case GateKind::Pdg: return phase_if_set(6);
    case GateKind::T: return phase_if_set(1);
    case GateKind::Tdg: return phase_if_set(7);
    case GateKind::H:
    case GateKind::RY: {
      Amp c, sn;
      if (g.kind == GateKind::RY) std::tie(c, sn) = Ops<Amp>::half_angle(g.angle);
      std::vector<std::pair<std::uint64_t, Amp>> next;
      next.reserve(2 * s.amps.size());
      for (const auto& [idx, a] : s.amps) {
        std::uint64_t i0 = idx & ~m.tbit, i1 = idx | m.tbit;
        bool one = idx & m.tbit;
        if (g.kind == GateKind::H) {
          Amp h = Ops<Amp>::halve_sqrt2(a);
          next.push_back({i0, h});
          next.push_back({i1, one ? -h : h});
        } else if (!one) {
          next.push_back({i0, c * a});
          next.push_back({i1, sn * a});
        } else {
          next.push_back({i0, -(sn * a)});
          next.push_back({i1, c * a});
        }
      }
      s.amps.swap(next);
      merge(s);
      return;
    }
    default:
      throw Error(Errc::internal, "unhandled gate kind in simulation");
  }
}

template <class Amp>
PhasePermutation<Amp> PhasePermutation<Amp>::inverse() const {
  PhasePermutation r;
  r.width = width;
  r.perm.assign(perm.size(), 0);
  r.phase.assign(phase.size(), Amp{});
  for (std::size_t j = 0; j < perm.size(); ++j) {
    r.perm[perm[j]] = j;
    r.phase[perm[j]] = amp_conj(phase[j]);
  }
  return r;
}

template <class Amp>
bool PhasePermutation<Amp>::operator==(const PhasePermutation& o) const {
  if (width != o.width || perm != o.perm) return false;
  for (std::size_t j = 0; j < phase.size(); ++j)
    if (!amp_equal(phase[j], o.phase[j])) return false;
  return true;
}

template <class Amp>
SparseState<Amp> simulate_column(const Circuit& c, std::uint64_t column,
                                 std::size_t* max_support) {
  auto s = SparseState<Amp>::basis(c.width(), column);
  std::size_t peak = 1;
  for (const auto& g : c.gates()) {
    apply_gate_inplace(s, g);
    peak = std::max(peak, s.amps.size());
  }
  s.sort();
  if (max_support) *max_support = std::max(*max_support, peak);
  return s;
}

namespace {

void check_width(const Circuit& c, const SimOptions& opt) {
  if (c.width() > opt.width_limit || c.width() > 30)
    throw Error(Errc::width_limit, "width limit exceeded: " + std::to_string(c.width()) +
                                       " qubits (limit " +
                                       std::to_string(opt.width_limit) + ")");
  if (c.has_markers()) {
    for (const auto& g : c.gates())
      if (is_marker(g.kind))
        throw Error(Errc::marker_in_simulation, "marker gate in simulation: " + g.to_string());
  }
}

unsigned thread_count(const SimOptions& opt, std::uint64_t work) {
  unsigned t = opt.threads ? opt.threads : std::thread::hardware_concurrency();
  if (t == 0) t = 1;
  if (work < 256) t = 1;
  return t;
}

// Runs fn(col, max_support&) for each column, split across threads.
template <class Fn>
std::size_t parallel_columns(std::uint64_t dim, unsigned threads, Fn fn) {
  std::vector<std::size_t> peaks(threads, 0);
  auto worker = [&](unsigned w) {
    for (std::uint64_t j = w; j < dim; j += threads) fn(j, peaks[w]);
  };
  if (threads == 1) {
    worker(0);
  } else {
    std::vector<std::thread> pool;
    std::vector<std::exception_ptr> errors(threads);
    for (unsigned w = 0; w < threads; ++w)
      pool.emplace_back([&, w] {
        try {
          worker(w);
        } catch (...) {
          errors[w] = std::current_exception();
        }
      });
    for (auto& th : pool) th.join();
    for (auto& e : errors)
      if (e) std::rethrow_exception(e);
  }
  return *std::max_element(peaks.begin(), peaks.end());
}

}  // namespace

template <class Amp>
ColumnImages<Amp> simulate_columns(const Circuit& c,
                                   const std::function<bool(std::uint64_t)>& include,
                                   const SimOptions& opt, SimStats* stats) {
  check_width(c, opt);
  const std::uint64_t dim = 1ull << c.width();
  ColumnImages<Amp> out;
  out.width = c.width();
  out.simulated.assign(dim, 0);
  out.collapsed.assign(dim, 0);
  out.row.assign(dim, 0);
  out.phase.assign(dim, Amp{});
  std::size_t peak = parallel_columns(dim, thread_count(opt, dim),
                                      [&](std::uint64_t j, std::size_t& pk) {
    if (include && !include(j)) return;
    auto s = simulate_column<Amp>(c, j, &pk);
    out.simulated[j] = 1;
    if (s.amps.size() == 1) {
      out.collapsed[j] = 1;
      out.row[j] = s.amps[0].first;
      out.phase[j] = s.amps[0].second;
    }
  });
  std::uint64_t count = 0;
  for (std::uint64_t j = 0; j < dim; ++j) {
    if (!out.simulated[j]) continue;
    ++count;
    if (!out.collapsed[j]) out.all_collapsed = false;
  }
  if (stats) {
    stats->max_support = std::max(stats->max_support, peak);
    stats->columns += count;
  }
  return out;
}

template <class Amp>
Unitary<Amp> unitary_columns(const Circuit& c, const SimOptions& opt, SimStats* stats) {
  auto img = simulate_columns<Amp>(c, nullptr, opt, stats);
  const std::uint64_t dim = 1ull << c.width();
  if (img.all_collapsed) {
    PhasePermutation<Amp> u;
    u.width = c.width();
    u.perm = std::move(img.row);
    u.phase = std::move(img.phase);
    std::vector<char> hit(dim, 0);
    for (auto r : u.perm) {
      if (hit[r]) throw Error(Errc::internal, "columns map to the same row");
      hit[r] = 1;
    }
    return u;
  }
  if (c.width() > opt.dense_width_limit)
    throw Error(Errc::width_limit,
                "width limit exceeded: dense matrices are limited to " +
                    std::to_string(opt.dense_width_limit) + " qubits");
  DenseMatrix<Amp> m;
  m.width = c.width();
  m.columns.resize(dim);
  parallel_columns(dim, thread_count(opt, dim), [&](std::uint64_t j, std::size_t& pk) {
    m.columns[j] = simulate_column<Amp>(c, j, &pk);
  });
  return m;
}

template <class Amp>
bool unitaries_equal(const Circuit& a, const Circuit& b, const SimOptions& opt) {
  if (a.width() != b.width()) return false;
  LowerPolicy keep{MultiControl::none, true};
  Circuit la = lower(a, keep), lb = lower(b, keep);
  check_width(la, opt);
  const std::uint64_t dim = 1ull << a.width();
  std::vector<char> ok(dim, 1);
  parallel_columns(dim, thread_count(opt, dim), [&](std::uint64_t j, std::size_t& pk) {
    auto x = simulate_column<Amp>(la, j, &pk);
    auto y = simulate_column<Amp>(lb, j, &pk);
    if (x.amps.size() != y.amps.size()) {
      ok[j] = 0;
      return;
    }
    for (std::size_t i = 0; i < x.amps.size(); ++i)
      if (x.amps[i].first != y.amps[i].first ||
          !amp_equal(x.amps[i].second, y.amps[i].second))
        ok[j] = 0;
  });
  return std::all_of(ok.begin(), ok.end(), [](char v) { return v != 0; });
}

#define RPHASE_INSTANTIATE(A)                                                        \
  template struct SparseState<A>;                                                    \
  template struct PhasePermutation<A>;                                               \
  template void apply_gate_inplace<A>(SparseState<A>&, const Gate&);                 \
  template SparseState<A> simulate_column<A>(const Circuit&, std::uint64_t,          \
                                             std::size_t*);                          \
  template ColumnImages<A> simulate_columns<A>(                                      \
      const Circuit&, const std::function<bool(std::uint64_t)>&, const SimOptions&, \
      SimStats*);                                                                    \
  template Unitary<A> unitary_columns<A>(const Circuit&, const SimOptions&,          \
                                         SimStats*);                                 \
  template bool unitaries_equal<A>(const Circuit&, const Circuit&, const SimOptions&);

RPHASE_INSTANTIATE(RingElement)
RPHASE_INSTANTIATE(Complex)

#undef RPHASE_INSTANTIATE

}  // namespace rphase
