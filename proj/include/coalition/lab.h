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

// Experiment orchestration: random-game gap campaigns, value-gap accuracy
// benchmarks, and the umbrella value report for a single game.

#ifndef COALITION_LAB_H_
#define COALITION_LAB_H_

#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "coalition/game_core.h"
#include "coalition/solvers.h"

namespace coalition {

struct GapSample {
  std::size_t trial = 0;
  std::uint64_t game_seed = 0;
  double v_sync = 0.0;
  double v_async = 0.0;
  double gap = 0.0;              // v_async - v_sync
  std::optional<double> theta;   // v_async / v_sync; empty when v_sync ~ 0

  friend bool operator==(const GapSample&, const GapSample&) = default;
};

// |v_sync| below this leaves theta undefined.
inline constexpr double kThetaDegenerate = 1e-6;

GapSample MakeGapSample(std::size_t trial, std::uint64_t seed, double v_sync, double v_async);

struct SummaryStats {
  std::size_t count = 0;
  double mean = 0.0;
  double stddev = 0.0;  // sample standard deviation
};

SummaryStats Summarize(const std::vector<double>& values);
// Pearson correlation; 0 when either side is constant.
double Correlation(const std::vector<double>& a, const std::vector<double>& b);

struct HistogramBin {
  double lo = 0.0;
  double hi = 0.0;
  std::size_t count = 0;
};

// Bins of width `width` anchored at multiples of the width.
std::vector<HistogramBin> Histogram(const std::vector<double>& values, double width);

struct CampaignConfig {
  std::size_t n = 4;
  std::size_t trials = 300;
  std::uint64_t master_seed = 1;
  GeneratorRange range;
  SolverConfig sync_solver;
  SolverConfig async_solver;
  double gap_bin = 0.02;
  double theta_bin = 0.05;
  std::size_t threads = 0;  // 0 = hardware concurrency

  void Validate() const;
};

struct CampaignResult {
  std::vector<GapSample> samples;  // ordered by trial
  std::vector<std::size_t> failed_trials;
  SummaryStats gap;
  SummaryStats theta;
  std::size_t theta_undefined = 0;
  double correlation_gap_vsync = 0.0;
  std::vector<HistogramBin> gap_histogram;
  std::vector<HistogramBin> theta_histogram;
};

// Trial t solves RandomSymmetricTensor(n, master_seed + t). Output does not
// depend on the thread count.
CampaignResult RunGapCampaign(const CampaignConfig& config);

// Runs job(i) for i in [0, count) on a pool of workers that pull the next
// index from a shared counter.
void ParallelFor(std::size_t count, std::size_t threads,
                 const std::function<void(std::size_t)>& job);

struct ValueGapMethod {
  std::string name;
  SolverConfig config;
};

struct ValueGapRow {
  std::string method;
  std::size_t trial = 0;
  double value = 0.0;      // maximin value of M
  double value_gap = 0.0;  // |v(M) + v(-M^T)|
  double wall_time = 0.0;  // seconds, both solves, 3 significant digits
};

// Per trial, draws an n x n matrix with seed (seed + trial) and solves it
// and its negative transpose with every method.
std::vector<ValueGapRow> ValueGapBenchmark(std::size_t n,
                                           const std::vector<ValueGapMethod>& methods,
                                           std::size_t trials, std::uint64_t seed);

struct PairWeight {
  std::size_t j = 0;
  std::size_t k = 0;
  double weight = 0.0;
};

struct ValueReport {
  std::optional<double> v_nash;
  std::optional<double> v_sync;
  std::optional<double> v_async;
  std::optional<StrategySimplex> x_opt;
  std::optional<StrategySimplex> y_opt;
  std::optional<StrategySimplex> z_opt;
  std::vector<PairWeight> sync_coalition;
  // Flat key/value solver metadata.
  std::vector<std::pair<std::string, std::string>> diagnostics;
};

struct SolveGameOptions {
  bool want_sync = true;
  bool want_async = true;
  bool want_nash = true;
  SolverConfig sync_config;
  SolverConfig async_config;
  // Synchronous fictitious play supplies the coalition's pair distribution
  // and a cross-check of the synchronous value; 0 disables it.
  std::size_t fp_iterations = 20000;
};

// Throws std::invalid_argument when the Nash value is requested for a
// tensor that is not flagged symmetric zero-sum, or whose flag does not
// survive validation.
ValueReport SolveGame(const PayoffTensor3& p, const SolveGameOptions& options);

// Rounds to three significant digits.
double RoundSig3(double seconds);

}  // namespace coalition

#endif  // COALITION_LAB_H_
