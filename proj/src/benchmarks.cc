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

#include "coalition/benchmarks.h"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>
#include <stdexcept>

namespace coalition {
namespace {

// Asynchronous objective at (y, z): player 1's best pure return.
double MinimaxValue(const PayoffTensor3& p, const StrategySimplex& y,
                    const StrategySimplex& z) {
  return BestPureResponseP1(p, y, z).value;
}

MinimizerPair MakePair(const PayoffTensor3& p, std::vector<double> y,
                       std::vector<double> z) {
  MinimizerPair pair{StrategySimplex(std::move(y)), StrategySimplex(std::move(z)),
                     0.0};
  pair.value = MinimaxValue(p, pair.y, pair.z);
  return pair;
}

// Two-strategy pair from the probabilities of choosing the first strategy.
MinimizerPair MakePair2(const PayoffTensor3& p, double y, double z) {
  return MakePair(p, {y, 1.0 - y}, {z, 1.0 - z});
}

}  // namespace

PayoffTensor3 OddManTensor(std::size_t n, OddManVariant variant) {
  if (n < 2) throw std::invalid_argument("OddManTensor: n must be >= 2");
  // Odd man in: odd player +2, matchers -1. Odd man out: the negation.
  const double sign = variant == OddManVariant::kIn ? 1.0 : -1.0;
  PayoffTensor3 p(n, /*symmetric_zero_sum=*/true);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      for (std::size_t k = 0; k < n; ++k) {
        const bool ij = i == j, ik = i == k, jk = j == k;
        if ((ij && ik) || (!ij && !ik && !jk)) continue;
        if (jk) {
          p(i, j, k) = 2.0 * sign;  // player 1 is the odd one
        } else {
          p(i, j, k) = -1.0 * sign;
        }
      }
    }
  }
  return p;
}

std::pair<double, double> OmoExpectedReturns(double y, double z) {
  if (!(y >= 0.0 && y <= 1.0 && z >= 0.0 && z <= 1.0)) {
    throw std::domain_error("OmoExpectedReturns: probabilities must lie in [0, 1]");
  }
  return {3.0 * y + 3.0 * z - 4.0 * y * z - 2.0, y + z - 4.0 * y * z};
}

BenchmarkGame OddsEvens(OddManVariant variant) {
  BenchmarkGame game;
  game.tensor = OddManTensor(2, variant);
  BenchmarkSolution& s = game.solution;
  s.v_nash = 0.0;
  if (variant == OddManVariant::kOut) {
    game.name = "odds-evens-omo";
    s.v_sync = -1.0;
    s.v_async = 0.0;
    for (auto [y, z] : {std::pair{0.0, 0.0}, {1.0, 1.0}, {0.5, 0.5}}) {
      s.global_minimizers.push_back(MakePair2(game.tensor, y, z));
    }
    s.notes =
        "Coalition pairs (1,1),(2,2) mixed evenly force -1. Asynchronous "
        "minimizers (0,0),(1,1),(1/2,1/2); saddles at (1/4,1/4),(3/4,3/4).";
  } else {
    game.name = "odds-evens-omi";
    s.v_sync = -1.0;
    s.v_async = -1.0;
    for (auto [y, z] : {std::pair{0.0, 1.0}, {1.0, 0.0}}) {
      s.global_minimizers.push_back(MakePair2(game.tensor, y, z));
    }
    s.notes = "Pure coalition pairs (1,2) and (2,1) force -1; no other local minima.";
  }
  return game;
}

PayoffTensor3 Family222Tensor(double alpha, Family222 family) {
  PayoffTensor3 p(2, /*symmetric_zero_sum=*/true);
  // Odd-man-out-like weighting; the odd-man-in-like family is its negation.
  p(0, 0, 0) = 0.0;
  p(0, 0, 1) = alpha;
  p(0, 1, 0) = alpha;
  p(0, 1, 1) = -2.0;
  p(1, 0, 0) = -2.0 * alpha;
  p(1, 0, 1) = 1.0;
  p(1, 1, 0) = 1.0;
  p(1, 1, 1) = 0.0;
  return family == Family222::kOmoLike ? p : p.Negated();
}

BenchmarkSolution Classify222(double alpha, Family222 family) {
  if (!std::isfinite(alpha)) throw std::invalid_argument("Classify222: alpha must be finite");
  const PayoffTensor3 p = Family222Tensor(alpha, family);
  BenchmarkSolution s;
  s.v_nash = 0.0;
  std::ostringstream notes;
  if (alpha <= 0.0) {
    s.v_sync = 0.0;
    s.v_async = 0.0;
    if (family == Family222::kOmoLike) {
      s.global_minimizers.push_back(MakePair2(p, 0.0, 0.0));
      notes << "alpha <= 0: player 1 forces 0 with strategy 2.";
    } else {
      s.global_minimizers.push_back(MakePair2(p, 1.0, 1.0));
      notes << "alpha <= 0: player 1 forces 0 with strategy 1.";
    }
  } else if (family == Family222::kOmoLike) {
    s.v_sync = -2.0 * alpha / (alpha + 1.0);
    s.v_async = 0.0;
    const double c = 1.0 / (1.0 + alpha);
    s.global_minimizers.push_back(MakePair2(p, 0.0, 0.0));
    s.global_minimizers.push_back(MakePair2(p, 1.0, 1.0));
    s.global_minimizers.push_back(MakePair2(p, c, c));
    notes << "reduced game [[0, -2], [" << -2.0 * alpha
          << ", 0]] (coalition pairs (1,1), (2,2)); player 1 plays 1 w.p. "
          << alpha / (alpha + 1.0);
  } else {
    s.v_sync = std::max(-1.0, -alpha);
    s.v_async = s.v_sync;
    s.global_minimizers.push_back(MakePair2(p, 1.0, 0.0));
    s.global_minimizers.push_back(MakePair2(p, 0.0, 1.0));
    notes << "reduced game [[" << -alpha << "], [-1]] (coalition pair (1,2))";
  }
  s.notes = notes.str();
  return s;
}

BenchmarkGame Rps(OddManVariant variant) {
  BenchmarkGame game;
  game.tensor = OddManTensor(3, variant);
  BenchmarkSolution& s = game.solution;
  const PayoffTensor3& p = game.tensor;
  constexpr double h = 0.5, t1 = 1.0 / 3.0, t2 = 2.0 / 3.0;
  s.v_nash = 0.0;
  if (variant == OddManVariant::kIn) {
    game.name = "rps-omi";
    s.v_sync = -2.0 / 3.0;
    s.v_async = -0.5;
    // One coalition member pure, the other splitting the remaining two.
    for (std::size_t a = 0; a < 3; ++a) {
      std::vector<double> pure(3, 0.0), split(3, h);
      pure[a] = 1.0;
      split[a] = 0.0;
      s.global_minimizers.push_back(MakePair(p, pure, split));
      s.global_minimizers.push_back(MakePair(p, split, pure));
    }
    // y ranges over the permutations of (0, 1/3, 2/3) with z = 2/3 - y.
    const std::vector<std::vector<double>> ys = {
        {0, t1, t2}, {t2, t1, 0}, {t1, 0, t2}, {t1, t2, 0}, {0, t2, t1}, {t2, 0, t1}};
    for (const auto& y : ys) {
      std::vector<double> z(3);
      for (std::size_t i = 0; i < 3; ++i) z[i] = t2 - y[i];
      s.local_minimizers.push_back(MakePair(p, y, z));
    }
    s.notes =
        "Synchronous optimum mixes pairs (1,2),(1,3),(2,3). The published "
        "local-minimizer list repeats (0,1/3,2/3)x(2/3,1/3,0); the catalog "
        "here is the full orbit of six, each at -4/9. Uniform Nash is a "
        "nonsmooth saddle.";
  } else {
    game.name = "rps-omo";
    s.v_sync = -4.0 / 3.0;
    s.v_async = 0.0;
    s.global_minimizers.push_back(
        MakePair(p, {t1, t1, t1}, {t1, t1, t1}));
    for (std::size_t a = 0; a < 3; ++a) {
      std::vector<double> e(3, 0.0);
      e[a] = 1.0;
      s.global_minimizers.push_back(MakePair(p, e, e));
    }
    for (std::size_t a = 0; a < 3; ++a) {
      std::vector<double> half(3, h);
      half[2 - a] = 0.0;
      s.global_minimizers.push_back(MakePair(p, half, half));
    }
    s.notes =
        "Synchronous optimum mixes pairs (1,1),(2,2),(3,3). Seven global "
        "asynchronous minimizers, no other local minima.";
  }
  return game;
}

RecursiveToyResult RecursiveToy2x2(double alpha0, double beta0) {
  if (!(alpha0 > 0.0) || !(beta0 > 0.0 && beta0 < 2.0)) {
    throw std::domain_error("RecursiveToy2x2: need alpha0 > 0 and 0 < beta0 < 2");
  }
  RecursiveToyResult r;
  r.v_oneshot = alpha0 / (1.0 - beta0 / 2.0);
  if (alpha0 * beta0 + beta0 > 2.0) {
    r.regime = RecursiveRegime::kSwitch;
    if (beta0 < 1.0) {
      r.v_limit = (alpha0 - 1.0) / (1.0 - beta0);
    } else {
      r.diverges = true;
      r.v_limit = std::numeric_limits<double>::infinity();
    }
  } else {
    r.regime = RecursiveRegime::kOneShot;
    r.v_limit = r.v_oneshot;
  }
  return r;
}

std::string ToString(OddManVariant variant) {
  return variant == OddManVariant::kOut ? "omo" : "omi";
}

std::string ToString(Family222 family) {
  return family == Family222::kOmoLike ? "omo-like" : "omi-like";
}

std::string ToString(RecursiveRegime regime) {
  return regime == RecursiveRegime::kOneShot ? "oneshot" : "switch";
}

}  // namespace coalition
