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

// Closed-form solutions for the small symmetric three-player games:
// odds-and-evens, the general 2x2x2 family, and three-player
// rock-paper-scissors. Each oracle returns the payoff tensor together with
// the synchronous, asynchronous and Nash values and the catalog of
// asynchronous minimizers.

#ifndef COALITION_BENCHMARKS_H_
#define COALITION_BENCHMARKS_H_

#include <string>
#include <utility>
#include <vector>

#include "coalition/game_core.h"

namespace coalition {

// Odd man out: the odd player pays one unit to each matcher.
// Odd man in: each matcher pays one unit to the odd player.
enum class OddManVariant { kOut, kIn };

enum class Family222 { kOmoLike, kOmiLike };

struct MinimizerPair {
  StrategySimplex y;
  StrategySimplex z;
  double value = 0.0;  // min-max objective max_i sum_jk y_j z_k P_ijk
};

struct BenchmarkSolution {
  double v_sync = 0.0;
  double v_async = 0.0;
  double v_nash = 0.0;
  std::vector<MinimizerPair> global_minimizers;
  std::vector<MinimizerPair> local_minimizers;
  std::string notes;
};

struct BenchmarkGame {
  std::string name;
  PayoffTensor3 tensor;
  BenchmarkSolution solution;
};

// Tensor built from the match/odd rule with n strategies. When all three
// choices agree, or (n = 3) all differ, nobody pays.
PayoffTensor3 OddManTensor(std::size_t n, OddManVariant variant);

BenchmarkGame OddsEvens(OddManVariant variant);

// Expected returns to player 1 for choosing "one" and "two" when players 2
// and 3 choose "one" with probabilities y and z (odd man out).
std::pair<double, double> OmoExpectedReturns(double y, double z);

// Tensor of the rescaled 2x2x2 family with parameter alpha.
PayoffTensor3 Family222Tensor(double alpha, Family222 family);

// Values and minimizers of the 2x2x2 family. The notes carry the reduced
// two-player game that determines the synchronous value.
BenchmarkSolution Classify222(double alpha, Family222 family);

BenchmarkGame Rps(OddManVariant variant);

enum class RecursiveRegime { kOneShot, kSwitch };

struct RecursiveToyResult {
  double v_oneshot = 0.0;
  RecursiveRegime regime = RecursiveRegime::kOneShot;
  double v_limit = 0.0;  // +infinity when the recursion diverges
  bool diverges = false;
};

// The 2x2 recursive game with payoff [[1,-1],[-1,1]] + alpha0 * ones and
// stakes beta0 * ones. Requires alpha0 > 0 and 0 < beta0 < 2.
RecursiveToyResult RecursiveToy2x2(double alpha0, double beta0);

std::string ToString(OddManVariant variant);
std::string ToString(Family222 family);
std::string ToString(RecursiveRegime regime);

}  // namespace coalition

#endif  // COALITION_BENCHMARKS_H_
