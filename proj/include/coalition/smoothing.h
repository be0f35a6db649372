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

#ifndef COALITION_SMOOTHING_H_
#define COALITION_SMOOTHING_H_

#include <span>
#include <string>
#include <vector>

namespace coalition {

enum class SmoothingKind { kNone, kLpShift, kSoftmax };

// kLpShift:  max_i x_i ~ (sum_i (x_i + 1)^p)^(1/p) - 1, param = p.
// kSoftmax:  max_i x_i ~ sum_i x_i e^(x_i/eps) / sum_i e^(x_i/eps), param = eps.
struct SmoothingSpec {
  SmoothingKind kind = SmoothingKind::kNone;
  double param = 0.0;

  static SmoothingSpec None() { return {}; }
  static SmoothingSpec LpShift(double p) { return {SmoothingKind::kLpShift, p}; }
  static SmoothingSpec Softmax(double eps) { return {SmoothingKind::kSoftmax, eps}; }

  // Throws std::invalid_argument on p == 0 or eps <= 0.
  void Validate() const;

  // "none", "lp:P" or "softmax:EPS".
  std::string ToString() const;
  static SmoothingSpec Parse(const std::string& text);
};

// Surrogate for max_i x_i. When `grad` is non-null it receives the partial
// derivatives (for kNone, the indicator of the smallest maximizing index).
// kLpShift requires x_i > -1.
double SmoothMax(std::span<const double> x, const SmoothingSpec& spec,
                 std::vector<double>* grad = nullptr);

// Surrogate for min_i x_i: the lp form with exponent -p, or the softmax
// form applied to -x.
double SmoothMin(std::span<const double> x, const SmoothingSpec& spec,
                 std::vector<double>* grad = nullptr);

}  // namespace coalition

#endif  // COALITION_SMOOTHING_H_
