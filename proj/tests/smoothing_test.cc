// Copyright 2026 The Coalition Lab Authors. All rights reserved.
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

#include "coalition/smoothing.h"

#include <gtest/gtest.h>

#include <algorithm>
#include <cmath>
#include <random>

namespace coalition {
namespace {

std::vector<double> RandomVector(std::mt19937_64& rng, double lo, double hi) {
  std::uniform_int_distribution<int> len(1, 12);
  std::uniform_real_distribution<double> u(lo, hi);
  std::vector<double> x(len(rng));
  for (double& v : x) v = u(rng);
  return x;
}

TEST(SmoothMaxTest, EqualEntries) {
  const std::vector<double> x{0.3, 0.3};
  EXPECT_EQ(SmoothMax(x, SmoothingSpec::Softmax(1e-3)), 0.3);
  EXPECT_EQ(SmoothMax(x, SmoothingSpec::None()), 0.3);
  const double lp = SmoothMax(x, SmoothingSpec::LpShift(100));
  EXPECT_GE(lp, 0.3);
  EXPECT_LE(lp, 1.3 * std::pow(2.0, 0.01) - 1.0 + 1e-15);
}

TEST(SmoothMaxTest, SoftmaxNearlyExact) {
  const std::vector<double> x{0.0, 1.0};
  EXPECT_NEAR(SmoothMax(x, SmoothingSpec::Softmax(1e-6)), 1.0, 1e-6);
  EXPECT_NEAR(SmoothMin(x, SmoothingSpec::Softmax(1e-6)), 0.0, 1e-6);
}

TEST(SmoothMaxTest, LpShiftBounds) {
  const std::vector<double> x{0.0, 1.0};
  const double v = SmoothMax(x, SmoothingSpec::LpShift(100));
  EXPECT_GE(v, 1.0);
  EXPECT_LE(v, 2.0 * std::pow(2.0, 0.01) - 1.0);
  EXPECT_NEAR(2.0 * std::pow(2.0, 0.01) - 1.0, 1.0139, 1e-4);
}

TEST(SmoothMaxTest, SoftmaxHandlesLargeInputs) {
  const std::vector<double> x{1000.0, 999.0};
  const double v = SmoothMax(x, SmoothingSpec::Softmax(1e-3));
  EXPECT_TRUE(std::isfinite(v));
  EXPECT_NEAR(v, 1000.0, 1e-12);
}

TEST(SmoothMaxTest, ExactKindUsesSmallestIndex) {
  std::vector<double> grad;
  const std::vector<double> x{0.5, 2.0, 2.0, -1.0};
  EXPECT_EQ(SmoothMax(x, SmoothingSpec::None(), &grad), 2.0);
  EXPECT_EQ(grad, (std::vector<double>{0, 1, 0, 0}));
  EXPECT_EQ(SmoothMin(x, SmoothingSpec::None(), &grad), -1.0);
  EXPECT_EQ(grad, (std::vector<double>{0, 0, 0, 1}));
}

TEST(SmoothingSpecTest, ValidateAndParse) {
  EXPECT_THROW(SmoothingSpec::LpShift(0).Validate(), std::invalid_argument);
  EXPECT_THROW(SmoothingSpec::Softmax(0).Validate(), std::invalid_argument);
  EXPECT_THROW(SmoothingSpec::Softmax(-1).Validate(), std::invalid_argument);
  EXPECT_NO_THROW(SmoothingSpec::LpShift(-3).Validate());
  for (const SmoothingSpec& s :
       {SmoothingSpec::None(), SmoothingSpec::LpShift(50), SmoothingSpec::Softmax(1e-4)}) {
    const SmoothingSpec back = SmoothingSpec::Parse(s.ToString());
    EXPECT_EQ(back.kind, s.kind);
    EXPECT_EQ(back.param, s.param);
  }
  EXPECT_THROW(SmoothingSpec::Parse("bogus"), std::invalid_argument);
  EXPECT_THROW(SmoothingSpec::Parse("softmax:x"), std::invalid_argument);
}

TEST(SmoothMaxTest, LpRejectsShiftedNonPositive) {
  const std::vector<double> x{-1.0, 0.5};
  EXPECT_THROW(SmoothMax(x, SmoothingSpec::LpShift(10)), std::domain_error);
}

TEST(SmoothingProperty, LpSandwich) {
  std::mt19937_64 rng(1);
  for (int t = 0; t < 100; ++t) {
    const std::vector<double> x = RandomVector(rng, 0.0, 1.0);
    const double mx = *std::max_element(x.begin(), x.end());
    const double mn = *std::min_element(x.begin(), x.end());
    for (double p : {10.0, 100.0}) {
      const double s = SmoothMax(x, SmoothingSpec::LpShift(p));
      EXPECT_GE(s, mx - 1e-14);
      EXPECT_LE(s, (mx + 1) * std::pow(static_cast<double>(x.size()), 1 / p) - 1 + 1e-14);
      const double m = SmoothMin(x, SmoothingSpec::LpShift(p));
      EXPECT_LE(m, mn + 1e-14);
      EXPECT_GE(m, (mn + 1) * std::pow(static_cast<double>(x.size()), -1 / p) - 1 - 1e-14);
    }
  }
}

TEST(SmoothingProperty, SoftmaxBelowMaxAndTightening) {
  std::mt19937_64 rng(2);
  for (int t = 0; t < 100; ++t) {
    const std::vector<double> x = RandomVector(rng, -1.0, 1.0);
    const double mx = *std::max_element(x.begin(), x.end());
    const double mn = *std::min_element(x.begin(), x.end());
    double prev_max = HUGE_VAL, prev_min = HUGE_VAL;
    for (double eps : {1e-2, 1e-4, 1e-6}) {
      const double s = SmoothMax(x, SmoothingSpec::Softmax(eps));
      EXPECT_LE(s, mx + 1e-15);
      EXPECT_LE(mx - s, prev_max + 1e-15);
      prev_max = mx - s;
      const double m = SmoothMin(x, SmoothingSpec::Softmax(eps));
      EXPECT_GE(m, mn - 1e-15);
      EXPECT_LE(m - mn, prev_min + 1e-15);
      prev_min = m - mn;
    }
  }
}

TEST(SmoothingProperty, GradientsMatchFiniteDifferences) {
  std::mt19937_64 rng(3);
  const double h = 1e-6;
  for (const SmoothingSpec& spec : {SmoothingSpec::Softmax(0.05), SmoothingSpec::LpShift(20)}) {
    for (int t = 0; t < 30; ++t) {
      std::vector<double> x = RandomVector(rng, 0.05, 0.95);
      for (bool use_min : {false, true}) {
        auto eval = [&](const std::vector<double>& v, std::vector<double>* g) {
          return use_min ? SmoothMin(v, spec, g) : SmoothMax(v, spec, g);
        };
        std::vector<double> grad;
        eval(x, &grad);
        for (std::size_t i = 0; i < x.size(); ++i) {
          std::vector<double> up = x, dn = x;
          up[i] += h;
          dn[i] -= h;
          EXPECT_NEAR(grad[i], (eval(up, nullptr) - eval(dn, nullptr)) / (2 * h), 1e-6)
              << spec.ToString();
        }
      }
    }
  }
}

}  // namespace
}  // namespace coalition
