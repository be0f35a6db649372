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

// Numerical synchronous (maximin) and asynchronous (minimax) values of a
// three-player payoff tensor, plus the two-player matrix maximin used for
// value-gap accuracy checks.

#ifndef COALITION_SOLVERS_H_
#define COALITION_SOLVERS_H_

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "coalition/game_core.h"
#include "coalition/minimize.h"
#include "coalition/smoothing.h"

namespace coalition {

// phi(y, z) = smooth max_i sum_jk y_j z_k P_ijk over the stacked point
// (y, z) of length 2n.
class MinimaxObjective {
 public:
  MinimaxObjective(const PayoffTensor3& p, SmoothingSpec spec);

  std::size_t dim() const { return 2 * p_.n(); }
  // Fills grad when it is non-empty.
  double operator()(std::span<const double> yz, std::span<double> grad) const;
  // Unsmoothed objective.
  double Exact(std::span<const double> yz) const;

  SmoothingSpec& spec() { return spec_; }

 private:
  PayoffTensor3 p_;
  SmoothingSpec spec_;
  double lo_, hi_;
};

// Phi(x) = smooth min over pure pairs (j, k) of sum_i x_i P_ijk.
class MaximinObjective {
 public:
  MaximinObjective(const PayoffTensor3& p, SmoothingSpec spec);

  std::size_t dim() const { return p_.n(); }
  double operator()(std::span<const double> x, std::span<double> grad) const;
  double Exact(std::span<const double> x) const;

  SmoothingSpec& spec() { return spec_; }

 private:
  PayoffTensor3 p_;
  SmoothingSpec spec_;
  double lo_, hi_;
};

// Row player's guaranteed value: smooth min_c sum_r x_r M_rc.
class MatrixMaximinObjective {
 public:
  MatrixMaximinObjective(const PayoffMatrix2& m, SmoothingSpec spec);

  std::size_t dim() const { return m_.rows(); }
  double operator()(std::span<const double> x, std::span<double> grad) const;
  double Exact(std::span<const double> x) const;

  SmoothingSpec& spec() { return spec_; }

 private:
  PayoffMatrix2 m_;
  SmoothingSpec spec_;
  double lo_, hi_;
};

enum class ConstraintMode { kHard, kSoft };

struct SolverConfig {
  SmoothingSpec smoothing = SmoothingSpec::Softmax(1e-4);
  ConstraintMode constraints = ConstraintMode::kHard;
  double penalty_k = 1e4;
  double penalty_exponent = 2.0;
  Method method = Method::kQuasiNewton;
  std::size_t max_iter = 3000;
  double grad_tol = 1e-10;
  std::size_t restarts = 20;
  std::uint64_t rng_seed = 0;
  // Softmax only: warm-started passes with epsilon decreasing by 10x from
  // `continuation_start` down to the configured value.
  bool continuation = true;
  double continuation_start = 1e-1;
  bool adaptive_smoothing = false;
  double epsilon_max = 1e-1;

  // Throws std::invalid_argument.
  void Validate() const;
};

struct RestartLog {
  std::size_t restart = 0;
  std::uint64_t seed = 0;
  double value = 0.0;           // exact objective at the final strategies
  double smoothed_value = 0.0;  // surrogate objective at the same point
  Termination termination = Termination::kMaxIter;
  std::size_t iterations = 0;
  std::size_t rescues = 0;  // adaptive re-smoothing episodes
};

struct SolveOutcome {
  double value = 0.0;
  std::vector<StrategySimplex> strategies;
  Termination termination = Termination::kMaxIter;
  std::size_t restarts_used = 0;
  std::size_t best_restart = 0;
  std::vector<RestartLog> log;
};

// V_S estimate and player 1's strategy. The value is the exact worst-pair
// return of the returned strategy, hence a lower bound on V_S.
SolveOutcome SolveMaximin(const PayoffTensor3& p, const SolverConfig& config);

// V_A estimate and the coalition pair (y, z). The value is player 1's exact
// best return against (y, z), hence an upper bound on V_A.
SolveOutcome SolveMinimax(const PayoffTensor3& p, const SolverConfig& config);

// Row player's maximin value of a two-player matrix game.
SolveOutcome SolveMatrixMaximin(const PayoffMatrix2& m, const SolverConfig& config);

std::string ToString(ConstraintMode mode);

}  // namespace coalition

#endif  // COALITION_SOLVERS_H_
