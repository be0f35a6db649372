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

#ifndef COALITION_FICTITIOUS_H_
#define COALITION_FICTITIOUS_H_

#include <array>
#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "coalition/game_core.h"

namespace coalition {

struct FpTrace {
  std::size_t iterations = 0;
  // Two-player runs: {row, column}; joint runs: {x, y, z}.
  std::vector<StrategySimplex> empirical;
  double value_estimate = 0.0;
  // Largest gain any player gets by best-responding to the others'
  // empirical strategies.
  double converged_gap = 0.0;
  double lower = 0.0;  // value guaranteed by the maximizing player
  double upper = 0.0;  // value conceded by the minimizing side
};

// Alternating fictitious play on a matrix game (row maximizes). The first
// plays are pure strategies drawn from `seed`.
FpTrace Fp2Player(const PayoffMatrix2& m, std::size_t iterations, std::uint64_t seed = 0);

// Player 1 against the coalition's n^2 pure pairs; column j * n + k is the
// pair (j, k).
PayoffMatrix2 CoalitionMatrix(const PayoffTensor3& p);

// Fictitious play between player 1 and the synchronous coalition. The
// second empirical strategy is the distribution over pure pairs.
FpTrace SyncFp(const PayoffTensor3& p, std::size_t iterations, std::uint64_t seed = 0);

struct ThetaRule {
  // theta(n) = max(1/n, floor); floor = 0 is the classical rule.
  double floor = 0.0;

  static ThetaRule Classical() { return {}; }
  static ThetaRule Floor(double c = 0.001) { return {c}; }
  double operator()(std::size_t n) const;

  std::string ToString() const;
  // "classical" or "floor:C".
  static ThetaRule Parse(const std::string& text);
};

// Joint fictitious play on the game with the coalition's winnings pooled.
// All three players best-respond simultaneously to the current strategies
// (smallest index on ties), then x <- (1 - theta(n)) x + theta(n) BR for
// n = 1, 2, .... Initial strategies are pure and drawn from `seed`.
FpTrace JointFp(const PayoffTensor3& p, std::size_t iterations, ThetaRule rule,
                std::uint64_t seed);

struct JointNashReport {
  bool is_joint_ne = false;
  // Player 1's gain from its best pure deviation, and the reduction in
  // player 1's return from the best pure deviation of player 2 and 3.
  std::array<double, 3> best_deviations{};
  double value = 0.0;
};

JointNashReport VerifyJointNash(const PayoffTensor3& p, const StrategySimplex& x,
                                const StrategySimplex& y, const StrategySimplex& z,
                                double tol = 1e-8);

}  // namespace coalition

#endif  // COALITION_FICTITIOUS_H_
