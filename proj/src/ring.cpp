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

#include "rphase/ring.hpp"

#include <cmath>
#include <ostream>
#include <sstream>

#include "rphase/error.hpp"

namespace rphase {

namespace {

std::int64_t checked_add(std::int64_t x, std::int64_t y) {
  std::int64_t r;
  if (__builtin_add_overflow(x, y, &r))
    throw Error(Errc::coefficient_overflow, "coefficient overflow");
  return r;
}

std::int64_t checked_sub(std::int64_t x, std::int64_t y) {
  std::int64_t r;
  if (__builtin_sub_overflow(x, y, &r))
    throw Error(Errc::coefficient_overflow, "coefficient overflow");
  return r;
}

std::int64_t checked_mul(std::int64_t x, std::int64_t y) {
  std::int64_t r;
  if (__builtin_mul_overflow(x, y, &r))
    throw Error(Errc::coefficient_overflow, "coefficient overflow");
  return r;
}

std::int64_t checked_neg(std::int64_t x) { return checked_sub(0, x); }

using Coeffs = std::array<std::int64_t, 4>;

// sqrt2 = w - w^3.
Coeffs times_sqrt2(const Coeffs& a) {
  return {checked_sub(a[1], a[3]), checked_add(a[0], a[2]),
          checked_add(a[1], a[3]), checked_sub(a[2], a[0])};
}

}  // namespace

const char* errc_name(Errc e) {
  switch (e) {
    case Errc::invalid_argument: return "invalid argument";
    case Errc::parse_error: return "parse error";
    case Errc::unsupported_gate: return "unsupported gate";
    case Errc::no_construction: return "no construction for gate";
    case Errc::ancilla_budget: return "ancilla budget exceeded";
    case Errc::arity_mismatch: return "arity mismatch";
    case Errc::special_form_violated: return "special-form type violated";
    case Errc::not_phase_permutation: return "not a phase permutation";
    case Errc::not_relative_phase: return "not a relative-phase Toffoli";
    case Errc::width_limit: return "width limit exceeded";
    case Errc::marker_in_simulation: return "marker gate in simulation";
    case Errc::coefficient_overflow: return "coefficient overflow";
    case Errc::backend_unsupported: return "gate not representable in backend";
    case Errc::internal: return "internal invariant violation";
  }
  return "unknown";
}

RingElement::RingElement(std::int64_t a0, std::int64_t a1, std::int64_t a2,
                         std::int64_t a3, int k)
    : a_{a0, a1, a2, a3}, k_(k) {
  if (k < 0) throw Error(Errc::invalid_argument, "negative denominator exponent");
  normalize();
}

RingElement normalize(std::int64_t a0, std::int64_t a1, std::int64_t a2,
                      std::int64_t a3, int k) {
  return RingElement(a0, a1, a2, a3, k);
}

void RingElement::normalize() {
  if (a_[0] == 0 && a_[1] == 0 && a_[2] == 0 && a_[3] == 0) {
    k_ = 0;
    return;
  }
  // x / sqrt2 = (sqrt2 * x) / 2, so one step lowers k by one.
  while (k_ > 0) {
    Coeffs s = times_sqrt2(a_);
    bool even = true;
    for (auto c : s) even = even && (c % 2 == 0);
    if (!even) break;
    for (int i = 0; i < 4; ++i) a_[i] = s[i] / 2;
    --k_;
  }
}

RingElement RingElement::omega_pow(int p) {
  int r = ((p % 8) + 8) % 8;
  RingElement x;
  x.a_[r % 4] = r < 4 ? 1 : -1;
  return x;
}

bool RingElement::is_zero() const {
  return a_[0] == 0 && a_[1] == 0 && a_[2] == 0 && a_[3] == 0;
}

RingElement RingElement::operator+(const RingElement& o) const {
  Coeffs x = a_, y = o.a_;
  int k = std::max(k_, o.k_);
  // Align denominators: multiply the numerator with smaller k by sqrt2.
  for (int i = k_; i < k; ++i) x = times_sqrt2(x);
  for (int i = o.k_; i < k; ++i) y = times_sqrt2(y);
  return RingElement(checked_add(x[0], y[0]), checked_add(x[1], y[1]),
                     checked_add(x[2], y[2]), checked_add(x[3], y[3]), k);
}

RingElement RingElement::operator-() const {
  RingElement r = *this;
  for (auto& c : r.a_) c = checked_neg(c);
  return r;
}

RingElement RingElement::operator-(const RingElement& o) const {
  return *this + (-o);
}

RingElement RingElement::operator*(const RingElement& o) const {
  std::int64_t c[4] = {0, 0, 0, 0};
  for (int i = 0; i < 4; ++i) {
    if (a_[i] == 0) continue;
    for (int j = 0; j < 4; ++j) {
      if (o.a_[j] == 0) continue;
      std::int64_t p = checked_mul(a_[i], o.a_[j]);
      int e = i + j;
      if (e >= 4) c[e - 4] = checked_sub(c[e - 4], p);
      else c[e] = checked_add(c[e], p);
    }
  }
  return RingElement(c[0], c[1], c[2], c[3], k_ + o.k_);
}

RingElement RingElement::mul_omega(int p) const {
  int r = ((p % 8) + 8) % 8;
  RingElement x = *this;
  for (int s = 0; s < r; ++s) {
    // w * (a0 + a1 w + a2 w^2 + a3 w^3) = -a3 + a0 w + a1 w^2 + a2 w^3
    x.a_ = {checked_neg(x.a_[3]), x.a_[0], x.a_[1], x.a_[2]};
  }
  return x;
}

RingElement RingElement::div_sqrt2() const {
  if (is_zero()) return *this;
  RingElement x = *this;
  ++x.k_;
  x.normalize();
  return x;
}

RingElement RingElement::conj() const {
  // conj(w^j) = w^{-j} = -w^{4-j}
  RingElement x;
  x.a_ = {a_[0], checked_neg(a_[3]), checked_neg(a_[2]), checked_neg(a_[1])};
  x.k_ = k_;
  return x;
}

bool RingElement::is_unit_magnitude() const {
  return (*this * conj()) == one();
}

std::complex<double> RingElement::to_complex() const {
  const double h = std::sqrt(0.5);
  double re = static_cast<double>(a_[0]) + h * static_cast<double>(a_[1]) -
              h * static_cast<double>(a_[3]);
  double im = h * static_cast<double>(a_[1]) + static_cast<double>(a_[2]) +
              h * static_cast<double>(a_[3]);
  double scale = std::pow(std::sqrt(2.0), -k_);
  return {re * scale, im * scale};
}

std::pair<double, double> to_float(const RingElement& x) {
  auto c = x.to_complex();
  return {c.real(), c.imag()};
}

std::string RingElement::to_string() const {
  std::ostringstream os;
  os << "(" << a_[0] << "," << a_[1] << "," << a_[2] << "," << a_[3]
     << ";k=" << k_ << ")";
  return os.str();
}

std::ostream& operator<<(std::ostream& os, const RingElement& x) {
  return os << x.to_string();
}

}  // namespace rphase
