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

#include <array>
#include <complex>
#include <cstdint>
#include <iosfwd>
#include <string>

namespace rphase {

/**
 * Exact element of Z[w, 1/sqrt2] with w = exp(i*pi/4).
 *
 * Value is (a0 + a1 w + a2 w^2 + a3 w^3) / sqrt2^k. Always kept canonical:
 * k == 0, or the numerator is not divisible by sqrt2. Coefficients are
 * 64-bit and every operation checks for overflow.
 */
class RingElement {
 public:
  RingElement() = default;
  RingElement(std::int64_t a0, std::int64_t a1, std::int64_t a2,
              std::int64_t a3, int k = 0);

  static RingElement zero() { return {}; }
  static RingElement one() { return {1, 0, 0, 0}; }
  static RingElement omega_pow(int p);  // w^p for any integer p
  static RingElement inv_sqrt2() { return {1, 0, 0, 0, 1}; }
  static RingElement sqrt2() { return {0, 1, 0, -1}; }

  const std::array<std::int64_t, 4>& coeffs() const { return a_; }
  int k() const { return k_; }
  bool is_zero() const;

  RingElement operator+(const RingElement& o) const;
  RingElement operator-(const RingElement& o) const;
  RingElement operator-() const;
  RingElement operator*(const RingElement& o) const;
  RingElement& operator+=(const RingElement& o) { return *this = *this + o; }
  RingElement& operator*=(const RingElement& o) { return *this = *this * o; }
  bool operator==(const RingElement& o) const = default;

  // Cheap rotations and scalings.
  RingElement mul_omega(int p) const;
  RingElement div_sqrt2() const;

  RingElement conj() const;
  bool is_unit_magnitude() const;
  std::complex<double> to_complex() const;
  std::string to_string() const;

 private:
  void normalize();

  std::array<std::int64_t, 4> a_{0, 0, 0, 0};
  int k_ = 0;
};

inline RingElement add(const RingElement& x, const RingElement& y) { return x + y; }
inline RingElement mul(const RingElement& x, const RingElement& y) { return x * y; }
inline RingElement conj(const RingElement& x) { return x.conj(); }
inline bool is_unit_magnitude(const RingElement& x) { return x.is_unit_magnitude(); }
// Returns the canonical form of the raw numerator/denominator.
RingElement normalize(std::int64_t a0, std::int64_t a1, std::int64_t a2,
                      std::int64_t a3, int k);
std::pair<double, double> to_float(const RingElement& x);

std::ostream& operator<<(std::ostream& os, const RingElement& x);

}  // namespace rphase
