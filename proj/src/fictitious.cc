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

#include "coalition/fictitious.h"

#include <algorithm>
#include <cmath>
#include <random>
#include <sstream>
#include <stdexcept>

namespace coalition {
namespace {

// Entries within this distance of the optimum count as ties, so exact ties
// are not decided by rounding noise.
constexpr double kTieTol = 1e-12;

std::size_t ArgMax(const std::vector<double>& v) {
  const double best = *std::max_element(v.begin(), v.end());
  std::size_t arg = 0;
  while (v[arg] < best - kTieTol) ++arg;
  return arg;
}

std::size_t ArgMin(const std::vector<double>& v) {
  const double best = *std::min_element(v.begin(), v.end());
  std::size_t arg = 0;
  while (v[arg] > best + kTieTol) ++arg;
  return arg;
}

StrategySimplex Normalized(std::vector<double> w) {
  double sum = 0.0;
  for (double e : w) sum += e;
  for (double& e : w) e /= sum;
  return StrategySimplex(std::move(w));
}

// Returns to player 2's pure choices (j) and player 3's (k) given the others.
std::vector<double> SecondReturns(const PayoffTensor3& p, std::span<const double> x,
                                  std::span<const double> z) {
  const std::size_t n = p.n();
  std::vector<double> out(n, 0.0);
  for (std::size_t i = 0; i < n; ++i) {
    if (x[i] == 0.0) continue;
    for (std::size_t j = 0; j < n; ++j) {
      double acc = 0.0;
      for (std::size_t k = 0; k < n; ++k) acc += z[k] * p(i, j, k);
      out[j] += x[i] * acc;
    }
  }
  return out;
}

std::vector<double> ThirdReturns(const PayoffTensor3& p, std::span<const double> x,
                                 std::span<const double> y) {
  const std::size_t n = p.n();
  std::vector<double> out(n, 0.0);
  for (std::size_t i = 0; i < n; ++i) {
    if (x[i] == 0.0) continue;
    for (std::size_t j = 0; j < n; ++j) {
      const double w = x[i] * y[j];
      if (w == 0.0) continue;
      for (std::size_t k = 0; k < n; ++k) out[k] += w * p(i, j, k);
    }
  }
  return out;
}

}  // namespace

FpTrace Fp2Player(const PayoffMatrix2& m, std::size_t iterations, std::uint64_t seed) {
  if (iterations < 1) throw std::invalid_argument("Fp2Player: iterations must be >= 1");
  const std::size_t rows = m.rows(), cols = m.cols();
  std::vector<double> row_count(rows, 0.0), col_count(cols, 0.0);
  // row_payoff[r] = sum over column plays of M(r, c); col_payoff[c] likewise.
  std::vector<double> row_payoff(rows, 0.0), col_payoff(cols, 0.0);

  std::mt19937_64 rng(seed);
  std::size_t r = std::uniform_int_distribution<std::size_t>(0, rows - 1)(rng);
  std::size_t c = std::uniform_int_distribution<std::size_t>(0, cols - 1)(rng);
  for (std::size_t t = 0; t < iterations; ++t) {
    if (t > 0) r = ArgMax(row_payoff);
    row_count[r] += 1.0;
    for (std::size_t cc = 0; cc < cols; ++cc) col_payoff[cc] += m(r, cc);
    if (t > 0) c = ArgMin(col_payoff);
    col_count[c] += 1.0;
    for (std::size_t rr = 0; rr < rows; ++rr) row_payoff[rr] += m(rr, c);
  }

  FpTrace trace;
  trace.iterations = iterations;
  const double count = static_cast<double>(iterations);
  trace.empirical = {Normalized(row_count), Normalized(col_count)};
  trace.lower = col_payoff[ArgMin(col_payoff)] / count;
  trace.upper = row_payoff[ArgMax(row_payoff)] / count;
  trace.value_estimate = 0.5 * (trace.lower + trace.upper);
  double empirical_value = 0.0;
  for (std::size_t rr = 0; rr < rows; ++rr) {
    empirical_value += trace.empirical[0][rr] * row_payoff[rr] / count;
  }
  trace.converged_gap =
      std::max(trace.upper - empirical_value, empirical_value - trace.lower);
  return trace;
}

PayoffMatrix2 CoalitionMatrix(const PayoffTensor3& p) {
  const std::size_t n = p.n();
  return PayoffMatrix2(n, n * n, std::vector<double>(p.entries().begin(), p.entries().end()));
}

FpTrace SyncFp(const PayoffTensor3& p, std::size_t iterations, std::uint64_t seed) {
  return Fp2Player(CoalitionMatrix(p), iterations, seed);
}

double ThetaRule::operator()(std::size_t n) const {
  return std::max(1.0 / static_cast<double>(n), floor);
}

std::string ThetaRule::ToString() const {
  if (floor <= 0.0) return "classical";
  std::ostringstream out;
  out << "floor:" << floor;
  return out.str();
}

ThetaRule ThetaRule::Parse(const std::string& text) {
  if (text == "classical") return Classical();
  if (text == "floor") return Floor();
  if (text.rfind("floor:", 0) == 0) {
    std::size_t used = 0;
    double c = 0.0;
    try {
      c = std::stod(text.substr(6), &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used == text.size() - 6 && c > 0.0 && c <= 1.0) return Floor(c);
  }
  throw std::invalid_argument("ThetaRule: expected classical or floor:C, got " + text);
}

FpTrace JointFp(const PayoffTensor3& p, std::size_t iterations, ThetaRule rule,
                std::uint64_t seed) {
  if (iterations < 1) throw std::invalid_argument("JointFp: iterations must be >= 1");
  const std::size_t n = p.n();
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<std::size_t> pick(0, n - 1);
  std::vector<double> x(n, 0.0), y(n, 0.0), z(n, 0.0);
  x[pick(rng)] = 1.0;
  y[pick(rng)] = 1.0;
  z[pick(rng)] = 1.0;

  for (std::size_t step = 1; step <= iterations; ++step) {
    const std::size_t bx = ArgMax(PlayerOneReturns(p, y, z));
    const std::size_t by = ArgMin(SecondReturns(p, x, z));
    const std::size_t bz = ArgMin(ThirdReturns(p, x, y));
    const double theta = rule(step);
    for (std::size_t i = 0; i < n; ++i) {
      x[i] *= 1.0 - theta;
      y[i] *= 1.0 - theta;
      z[i] *= 1.0 - theta;
    }
    x[bx] += theta;
    y[by] += theta;
    z[bz] += theta;
  }

  FpTrace trace;
  trace.iterations = iterations;
  trace.empirical = {Normalized(x), Normalized(y), Normalized(z)};
  const JointNashReport report =
      VerifyJointNash(p, trace.empirical[0], trace.empirical[1], trace.empirical[2]);
  trace.value_estimate = report.value;
  trace.converged_gap = *std::max_element(report.best_deviations.begin(),
                                          report.best_deviations.end());
  trace.upper = report.value + report.best_deviations[0];
  trace.lower = report.value - std::max(report.best_deviations[1], report.best_deviations[2]);
  return trace;
}

JointNashReport VerifyJointNash(const PayoffTensor3& p, const StrategySimplex& x,
                                const StrategySimplex& y, const StrategySimplex& z,
                                double tol) {
  const std::size_t n = p.n();
  if (x.size() != n || y.size() != n || z.size() != n) {
    throw DimensionError("VerifyJointNash: dimension mismatch");
  }
  const std::vector<double> v1 = PlayerOneReturns(p, y.weights(), z.weights());
  const std::vector<double> v2 = SecondReturns(p, x.weights(), z.weights());
  const std::vector<double> v3 = ThirdReturns(p, x.weights(), y.weights());
  JointNashReport report;
  for (std::size_t i = 0; i < n; ++i) report.value += x[i] * v1[i];
  report.best_deviations = {std::max(0.0, v1[ArgMax(v1)] - report.value),
                            std::max(0.0, report.value - v2[ArgMin(v2)]),
                            std::max(0.0, report.value - v3[ArgMin(v3)])};
  report.is_joint_ne = report.best_deviations[0] <= tol && report.best_deviations[1] <= tol &&
                       report.best_deviations[2] <= tol;
  return report;
}

}  // namespace coalition
