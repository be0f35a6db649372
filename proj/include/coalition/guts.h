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

// Continuous three-player Guts. A pure strategy is a hold threshold in
// [0, 1]; alpha is the one-round expected return to player 1 and beta the
// expected stakes carried into the next round.

#ifndef COALITION_GUTS_H_
#define COALITION_GUTS_H_

#include <array>
#include <cstddef>
#include <stdexcept>
#include <vector>

#include "coalition/game_core.h"

namespace coalition {

class GutsError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct GutsPoint {
  double p1 = 0.0;
  double p2 = 0.0;
  double p3 = 0.0;
};

// Position of p1 relative to the ordered pair p2 <= p3.
enum class GutsBranch { kLow, kMiddle, kHigh };

// Branch polynomials, valid for p2 <= p3. Exposed so continuity across the
// ordering boundaries can be tested directly.
double GutsAlphaBranch(GutsBranch branch, const GutsPoint& p);
std::array<double, 3> GutsGradientBranch(GutsBranch branch, const GutsPoint& p);

// Throws std::domain_error outside [0, 1]^3.
double GutsAlpha(const GutsPoint& p);
std::array<double, 3> GutsGradient(const GutsPoint& p);
double GutsBeta(const GutsPoint& p);

// Largest |V| accepted by GutsBestResponse.
inline constexpr double kGutsMaxAbsV = 0.1;

struct GutsBestResponse {
  double p1 = 0.0;
  double v = 0.0;
  double value_a = 0.0;  // attained at (p3a, p3a)
  double value_b = 0.0;  // attained at (0, p3b)
  double p3a = 0.0;
  double p3b = 0.0;
  double r = 0.0;  // min(value_a, value_b)
};

// Coalition best response against p1 in the game alpha + V beta.
GutsBestResponse BestResponse(double p1, double v);

// Closed forms of the two response values at V = 0.
double GutsAlphaA0(double p1);
double GutsAlphaB0(double p1);

struct SyncValueResult {
  double value = 0.0;  // T(V)
  double p1_opt = 0.0;
};

// max over p1 of min(alpha_a^V, alpha_b^V). Throws GutsError if the two
// response curves do not cross inside (0, 1) or if V is too large for the
// two-candidate response description to hold.
SyncValueResult SyncValue(double v);

struct CoalitionMixture {
  double p1_opt = 0.0;
  double value = 0.0;
  double p3a = 0.0;  // atom (p3a, p3a) with weight y
  double p3b = 0.0;  // atom (0, p3b) with weight 1 - y
  double y = 0.0;
  double d_alpha_a = 0.0;
  double d_alpha_b = 0.0;
};

CoalitionMixture OptimalCoalitionMixture();

// Return to player 1 playing p1 against the mixed coalition strategy.
double MixturePayoff(const CoalitionMixture& m, double p1);

struct RecursiveTrace {
  std::vector<double> values;   // T(0), T(T(0)), ...
  std::vector<double> p1_path;  // maximizing p1 per round
  bool converged = false;
  double v_star = 0.0;
};

RecursiveTrace RecursiveFixedPoint(std::size_t max_rounds, double tol);

struct InnerMax {
  double value = 0.0;
  double p1 = 0.0;
};

// max over p1 in [0, 1] of alpha(p1, p2, p3), by golden section (alpha is
// concave in p1).
InnerMax MaxOverP1(double p2, double p3);

struct AsyncCertificate {
  double min_of_max = 0.0;
  double p2 = 0.0;
  double p3 = 0.0;
};

// min over a grid_n x grid_n lattice of [0, 1]^2 of MaxOverP1.
AsyncCertificate ComputeAsyncCertificate(std::size_t grid_n);

// Tensor with entry (i, j, k) = alpha(i/n, j/n, k/n).
PayoffTensor3 DiscretizeGuts(std::size_t n);

// max of the l1 norm of the gradient over a lattice with `samples` points
// per axis.
double GutsGradientBound(std::size_t samples = 101);

}  // namespace coalition

#endif  // COALITION_GUTS_H_
