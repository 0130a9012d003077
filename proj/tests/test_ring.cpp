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

#include <gtest/gtest.h>

#include <cmath>
#include <complex>
#include <limits>
#include <random>

#include "rphase/error.hpp"
#include "rphase/ring.hpp"

namespace rphase {
namespace {

using C = std::complex<double>;

// Float oracle evaluated straight from the coefficients.
C value(std::int64_t a0, std::int64_t a1, std::int64_t a2, std::int64_t a3, int k) {
  const C w = std::polar(1.0, M_PI / 4);
  C v = double(a0) + double(a1) * w + double(a2) * w * w + double(a3) * w * w * w;
  return v / std::pow(std::sqrt(2.0), k);
}

RingElement random_element(std::mt19937& rng) {
  std::uniform_int_distribution<int> coef(-6, 6), kd(0, 5);
  return RingElement(coef(rng), coef(rng), coef(rng), coef(rng), kd(rng));
}

void expect_near(const RingElement& x, C v, double tol = 1e-12) {
  EXPECT_NEAR(x.to_complex().real(), v.real(), tol) << x;
  EXPECT_NEAR(x.to_complex().imag(), v.imag(), tol) << x;
}

TEST(RingAdd, AdditiveInverseIsZero) {
  RingElement s = RingElement(1, 0, 0, 0) + RingElement(-1, 0, 0, 0);
  EXPECT_TRUE(s.is_zero());
  EXPECT_EQ(s, RingElement::zero());
}

TEST(RingAdd, NoReduction) {
  RingElement w = RingElement::omega_pow(1);
  RingElement s = w + RingElement::omega_pow(3);
  EXPECT_EQ(s.coeffs(), (std::array<std::int64_t, 4>{0, 1, 0, 1}));
  EXPECT_EQ(s.k(), 0);
}

TEST(RingAdd, HalvesOfInverseSqrt2SumToSqrt2) {
  RingElement s = RingElement::inv_sqrt2() + RingElement::inv_sqrt2();
  EXPECT_EQ(s, RingElement(0, 1, 0, -1, 0));
  EXPECT_NEAR(to_float(s).first, 1.41421356, 1e-8);
  EXPECT_NEAR(to_float(s).second, 0.0, 1e-12);
}

TEST(RingMul, OmegaHasOrderEight) {
  RingElement w = RingElement::omega_pow(1);
  EXPECT_EQ(w * RingElement::omega_pow(7), RingElement::one());
  EXPECT_EQ(w * w, RingElement(0, 0, 1, 0));
  EXPECT_EQ(RingElement::omega_pow(4), RingElement(-1, 0, 0, 0));
  EXPECT_EQ(RingElement::omega_pow(8), RingElement::one());
  EXPECT_EQ(RingElement::omega_pow(-1), RingElement::omega_pow(7));
}

TEST(RingMul, InverseSqrt2Squared) {
  RingElement h = RingElement::inv_sqrt2() * RingElement::inv_sqrt2();
  EXPECT_EQ(h, RingElement(1, 0, 0, 0, 2));
  EXPECT_NE(h, RingElement(2, 0, 0, 0, 2));  // that one is 2/2 = 1
  EXPECT_EQ(h.coeffs(), (std::array<std::int64_t, 4>{1, 0, 0, 0}));
  EXPECT_EQ(h.k(), 2);
  EXPECT_NEAR(to_float(h).first, 0.5, 1e-15);
}

TEST(RingConj, Basics) {
  EXPECT_EQ(conj(RingElement(0, 0, 1, 0)), RingElement(0, 0, -1, 0));
  EXPECT_EQ(conj(RingElement::omega_pow(1)), RingElement::omega_pow(7));
  EXPECT_EQ(conj(RingElement::omega_pow(1)), -RingElement::omega_pow(3));
}

TEST(RingConj, NormIsRealNonNegative) {
  std::mt19937 rng(7);
  for (int i = 0; i < 20; ++i) {
    RingElement x = random_element(rng);
    C n = (conj(x) * x).to_complex();
    EXPECT_NEAR(n.imag(), 0.0, 1e-12);
    EXPECT_GE(n.real(), -1e-12);
  }
}

TEST(RingNormalize, Examples) {
  RingElement a = normalize(2, 0, 0, 0, 2);
  EXPECT_EQ(a.coeffs(), (std::array<std::int64_t, 4>{1, 0, 0, 0}));
  EXPECT_EQ(a.k(), 0);
  RingElement b = normalize(0, 1, 0, -1, 1);
  EXPECT_EQ(b.coeffs(), (std::array<std::int64_t, 4>{1, 0, 0, 0}));
  EXPECT_EQ(b.k(), 0);
  RingElement c = normalize(1, 0, 0, 0, 0);
  EXPECT_EQ(c, RingElement::one());
}

TEST(RingNormalize, PreservesValueAndIsMinimal) {
  std::mt19937 rng(11);
  std::uniform_int_distribution<int> coef(-20, 20), kd(0, 8);
  for (int i = 0; i < 2000; ++i) {
    int a0 = coef(rng), a1 = coef(rng), a2 = coef(rng), a3 = coef(rng), k = kd(rng);
    RingElement x = normalize(a0, a1, a2, a3, k);
    expect_near(x, value(a0, a1, a2, a3, k), 1e-9);
    if (x.k() > 0) {
      // Minimal: sqrt2 * numerator has an odd coefficient.
      auto [b0, b1, b2, b3] = x.coeffs();
      std::array<std::int64_t, 4> m{b1 - b3, b0 + b2, b1 + b3, b2 - b0};
      bool all_even = true;
      for (auto v : m) all_even = all_even && v % 2 == 0;
      EXPECT_FALSE(all_even) << x;
    }
  }
}

TEST(RingNormalize, EqualValuesHaveEqualCanonicalForms) {
  // (1 + i) / sqrt2 is w.
  RingElement x = RingElement(1, 0, 1, 0, 1);
  RingElement y = RingElement::omega_pow(1) * RingElement::one();
  EXPECT_EQ(x, y);
  EXPECT_EQ(RingElement(4, 0, 0, 0, 4), RingElement::one());
}

TEST(RingUnit, Magnitude) {
  EXPECT_TRUE(is_unit_magnitude(RingElement::omega_pow(5)));
  EXPECT_FALSE(is_unit_magnitude(RingElement::inv_sqrt2()));
  // (1 + i) / sqrt2
  EXPECT_TRUE(is_unit_magnitude(RingElement(1, 0, 1, 0, 1)));
  EXPECT_FALSE(is_unit_magnitude(RingElement::zero()));
  EXPECT_FALSE(is_unit_magnitude(RingElement::sqrt2()));
}

TEST(RingFloat, Examples) {
  EXPECT_EQ(to_float(RingElement::one()), std::make_pair(1.0, 0.0));
  auto w = to_float(RingElement::omega_pow(1));
  EXPECT_NEAR(w.first, 0.7071067811865476, 1e-15);
  EXPECT_NEAR(w.second, 0.7071067811865476, 1e-15);
  auto h = to_float(RingElement(0, 0, 1, 0, 1));
  EXPECT_NEAR(h.first, 0.0, 1e-15);
  EXPECT_NEAR(h.second, 0.70710678118654752, 1e-15);
}

TEST(RingProperties, RingAxiomsAgainstFloat) {
  std::mt19937 rng(3);
  for (int i = 0; i < 500; ++i) {
    RingElement x = random_element(rng), y = random_element(rng), z = random_element(rng);
    EXPECT_EQ(x * y, y * x);
    EXPECT_EQ((x * y) * z, x * (y * z));
    EXPECT_EQ(x * (y + z), x * y + x * z);
    EXPECT_EQ(x + y, y + x);
    EXPECT_EQ(conj(x * y), conj(x) * conj(y));
    expect_near(x * y, x.to_complex() * y.to_complex(), 1e-9);
    expect_near(x + y, x.to_complex() + y.to_complex(), 1e-9);
    expect_near(conj(x), std::conj(x.to_complex()), 1e-9);
    expect_near(x.div_sqrt2(), x.to_complex() / std::sqrt(2.0), 1e-9);
    expect_near(x.mul_omega(3), x.to_complex() * std::polar(1.0, 3 * M_PI / 4), 1e-9);
    EXPECT_EQ(x - x, RingElement::zero());
  }
}

TEST(RingProperties, UnitMagnitudeImpliesUnitNorm) {
  for (int p = -16; p <= 16; ++p) {
    RingElement u = RingElement::omega_pow(p);
    ASSERT_TRUE(is_unit_magnitude(u));
    EXPECT_EQ(u * conj(u), RingElement::one());
  }
  RingElement t = RingElement(1, 0, 1, 0, 1);
  EXPECT_EQ(t * conj(t), RingElement::one());
}

TEST(RingOverflow, AbortsInsteadOfWrapping) {
  const std::int64_t big = std::numeric_limits<std::int64_t>::max() / 2 + 1;
  RingElement x(big, 0, 0, 1);
  try {
    RingElement y = x + x;
    FAIL() << "expected overflow, got " << y;
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::coefficient_overflow);
  }
  EXPECT_THROW(x * x, Error);
}

TEST(RingText, ToString) {
  EXPECT_EQ(RingElement(1, 0, 0, 0, 1).to_string(), "(1,0,0,0;k=1)");
}

}  // namespace
}  // namespace rphase
