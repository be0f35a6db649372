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

#include "coalition/solvers.h"

#include <gtest/gtest.h>

#include <cmath>
#include <random>

#include "coalition/benchmarks.h"
#include "oracles.h"

namespace coalition {
namespace {

std::vector<double> Stack(std::initializer_list<double> a, std::initializer_list<double> b) {
  std::vector<double> v(a);
  v.insert(v.end(), b);
  return v;
}

template <typename Objective>
void ExpectGradientMatches(const Objective& f, std::vector<double> x) {
  std::vector<double> grad(x.size());
  f(x, grad);
  const double h = 1e-6;
  for (std::size_t i = 0; i < x.size(); ++i) {
    std::vector<double> up = x, dn = x;
    up[i] += h;
    dn[i] -= h;
    const double fd = (f(up, {}) - f(dn, {})) / (2 * h);
    EXPECT_NEAR(grad[i], fd, 1e-5) << "component " << i;
  }
}

TEST(MinimaxObjectiveTest, Examples) {
  MinimaxObjective omi(Rps(OddManVariant::kIn).tensor, SmoothingSpec::None());
  EXPECT_NEAR(omi(Stack({1, 0, 0}, {0, 0.5, 0.5}), {}), -0.5, 1e-15);
  MinimaxObjective omo(OddManTensor(2, OddManVariant::kOut), SmoothingSpec::None());
  EXPECT_NEAR(omo(Stack({0.5, 0.5}, {0.5, 0.5}), {}), 0.0, 1e-15);
}

TEST(MaximinObjectiveTest, Examples) {
  const std::vector<double> u{1.0 / 3, 1.0 / 3, 1.0 / 3};
  MaximinObjective omi(Rps(OddManVariant::kIn).tensor, SmoothingSpec::None());
  EXPECT_NEAR(omi(u, {}), -2.0 / 3.0, 1e-15);
  MaximinObjective omo(Rps(OddManVariant::kOut).tensor, SmoothingSpec::None());
  EXPECT_NEAR(omo(u, {}), -4.0 / 3.0, 1e-15);
}

TEST(MaximinObjectiveTest, OddsEvensHatShape) {
  MaximinObjective omo(OddManTensor(2, OddManVariant::kOut), SmoothingSpec::None());
  for (int i = 0; i <= 20; ++i) {
    const double t = i / 20.0;
    const std::vector<double> x{t, 1 - t};
    EXPECT_NEAR(omo(x, {}), 2 * (std::min(t, 1 - t) - 1), 1e-15);
  }
}

TEST(ObjectiveProperty, GradientsMatchFiniteDifferences) {
  std::mt19937_64 rng(1);
  const SmoothingSpec spec = SmoothingSpec::Softmax(1e-3);
  for (int t = 0; t < 20; ++t) {
    const PayoffTensor3 p = RandomSymmetricTensor(4, 50 + t);
    std::vector<double> yz = SampleSimplex(4, rng);
    const std::vector<double> z = SampleSimplex(4, rng);
    yz.insert(yz.end(), z.begin(), z.end());
    ExpectGradientMatches(MinimaxObjective(p, spec), yz);
    ExpectGradientMatches(MaximinObjective(p, spec), SampleSimplex(4, rng));
    ExpectGradientMatches(MatrixMaximinObjective(RandomMatrix(4, 3, t), spec),
                          SampleSimplex(4, rng));
  }
}

TEST(ObjectiveProperty, LpGradientsMatchFiniteDifferences) {
  std::mt19937_64 rng(2);
  const SmoothingSpec spec = SmoothingSpec::LpShift(30);
  for (int t = 0; t < 10; ++t) {
    const PayoffTensor3 p = RandomSymmetricTensor(3, 80 + t);
    std::vector<double> yz = SampleSimplex(3, rng);
    const std::vector<double> z = SampleSimplex(3, rng);
    yz.insert(yz.end(), z.begin(), z.end());
    ExpectGradientMatches(MinimaxObjective(p, spec), yz);
    ExpectGradientMatches(MaximinObjective(p, spec), SampleSimplex(3, rng));
  }
}

SolverConfig Config(std::size_t restarts) {
  SolverConfig c;
  c.restarts = restarts;
  return c;
}

TEST(SolveMaximinTest, Benchmarks) {
  const SolveOutcome omi = SolveMaximin(Rps(OddManVariant::kIn).tensor, Config(5));
  EXPECT_NEAR(omi.value, -2.0 / 3.0, 1e-4);
  for (int i = 0; i < 3; ++i) EXPECT_NEAR(omi.strategies[0][i], 1.0 / 3.0, 1e-3);
  EXPECT_NEAR(SolveMaximin(OddManTensor(2, OddManVariant::kOut), Config(5)).value, -1.0, 1e-4);
  EXPECT_NEAR(SolveMaximin(Family222Tensor(2.0, Family222::kOmoLike), Config(5)).value,
              -4.0 / 3.0, 1e-3);
}

TEST(SolveMinimaxTest, Benchmarks) {
  const SolveOutcome omi = SolveMinimax(Rps(OddManVariant::kIn).tensor, Config(20));
  EXPECT_NEAR(omi.value, -0.5, 1e-3);
  EXPECT_EQ(omi.strategies.size(), 2u);
  EXPECT_EQ(omi.log.size(), 20u);
  EXPECT_NEAR(SolveMinimax(Rps(OddManVariant::kOut).tensor, Config(10)).value, 0.0, 1e-3);
  const SolveOutcome oe = SolveMinimax(OddManTensor(2, OddManVariant::kIn), Config(20));
  EXPECT_NEAR(oe.value, -1.0, 1e-4);
  const double y = oe.strategies[0][0], z = oe.strategies[1][0];
  EXPECT_TRUE((std::abs(y) < 1e-3 && std::abs(z - 1) < 1e-3) ||
              (std::abs(y - 1) < 1e-3 && std::abs(z) < 1e-3));
}

TEST(SolverProperty, AgreesWithAllBenchmarkOracles) {
  std::vector<BenchmarkGame> games{OddsEvens(OddManVariant::kOut), OddsEvens(OddManVariant::kIn),
                                   Rps(OddManVariant::kIn), Rps(OddManVariant::kOut)};
  for (double alpha : {0.25, 0.5, 1.0, 2.0, 4.0}) {
    for (Family222 f : {Family222::kOmoLike, Family222::kOmiLike}) {
      games.push_back({"222", Family222Tensor(alpha, f), Classify222(alpha, f)});
    }
  }
  for (const BenchmarkGame& g : games) {
    EXPECT_NEAR(SolveMaximin(g.tensor, Config(20)).value, g.solution.v_sync, 1e-3) << g.name;
    EXPECT_NEAR(SolveMinimax(g.tensor, Config(20)).value, g.solution.v_async, 1e-3) << g.name;
  }
}

TEST(SolverProperty, SyncNeverExceedsAsync) {
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    const PayoffTensor3 p = RandomSymmetricTensor(3 + seed % 3, 1000 + seed);
    const double vs = SolveMaximin(p, Config(5)).value;
    const double va = SolveMinimax(p, Config(5)).value;
    EXPECT_LE(vs, va + 2e-3) << seed;
  }
}

TEST(SolverProperty, MatchesLatticeOnRandomGames) {
  for (std::uint64_t seed = 0; seed < 5; ++seed) {
    const PayoffTensor3 p = RandomSymmetricTensor(3, 200 + seed);
    const double lattice = testing::LatticeMaximin(p, 300);
    const double solved = SolveMaximin(p, Config(10)).value;
    EXPECT_GE(solved, lattice - 1e-9);
    EXPECT_LE(solved - lattice, 2e-2);
  }
}

TEST(SolverProperty, Deterministic) {
  const PayoffTensor3 p = RandomSymmetricTensor(4, 9);
  const SolveOutcome a = SolveMinimax(p, Config(4));
  const SolveOutcome b = SolveMinimax(p, Config(4));
  EXPECT_EQ(a.value, b.value);
  EXPECT_EQ(a.best_restart, b.best_restart);
  EXPECT_EQ(a.strategies[0], b.strategies[0]);
  EXPECT_EQ(a.strategies[1], b.strategies[1]);
}

TEST(SolverProperty, TwoPlayerValueGapIsSmall) {
  for (std::uint64_t seed = 0; seed < 5; ++seed) {
    const PayoffMatrix2 m = RandomMatrix(5, 5, seed);
    const double v = SolveMatrixMaximin(m, Config(5)).value;
    const double w = SolveMatrixMaximin(NegativeTranspose(m), Config(5)).value;
    EXPECT_NEAR(v + w, 0.0, 1e-3) << seed;
  }
}

TEST(SolverConfigTest, SoftConstraintsStayFeasible) {
  SolverConfig c = Config(5);
  c.constraints = ConstraintMode::kSoft;
  const SolveOutcome s = SolveMaximin(Rps(OddManVariant::kIn).tensor, c);
  EXPECT_NEAR(s.value, -2.0 / 3.0, 1e-2);
  const SolveOutcome a = SolveMinimax(Rps(OddManVariant::kOut).tensor, c);
  EXPECT_NEAR(a.value, 0.0, 1e-2);
  double sum = 0.0;
  for (double w : s.strategies[0].vector()) sum += w;
  EXPECT_NEAR(sum, 1.0, 1e-12);
}

TEST(SolverConfigTest, LpSmoothingSolves) {
  SolverConfig c = Config(5);
  c.smoothing = SmoothingSpec::LpShift(200);
  EXPECT_NEAR(SolveMaximin(Rps(OddManVariant::kIn).tensor, c).value, -2.0 / 3.0, 2e-2);
}

TEST(SolverConfigTest, AdaptiveAndGradientVariantsRun) {
  SolverConfig c = Config(5);
  c.adaptive_smoothing = true;
  c.method = Method::kProjectedGradient;
  EXPECT_NEAR(SolveMinimax(OddManTensor(2, OddManVariant::kIn), c).value, -1.0, 1e-3);
}

TEST(SolverConfigTest, ValidateRejectsBadValues) {
  SolverConfig c;
  c.restarts = 0;
  EXPECT_THROW(c.Validate(), std::invalid_argument);
  c = SolverConfig{};
  c.penalty_k = 0;
  EXPECT_THROW(c.Validate(), std::invalid_argument);
  EXPECT_EQ(ToString(ConstraintMode::kSoft), "soft");
}

}  // namespace
}  // namespace coalition
