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

#include <algorithm>
#include <cmath>
#include <sstream>
#include <stdexcept>

namespace coalition {
namespace {

void CheckNonEmpty(std::span<const double> x) {
  if (x.empty()) throw std::invalid_argument("smoothing: empty input");
}

double ExactMax(std::span<const double> x, std::vector<double>* grad) {
  std::size_t arg = 0;
  for (std::size_t i = 1; i < x.size(); ++i) {
    if (x[i] > x[arg]) arg = i;
  }
  if (grad) {
    grad->assign(x.size(), 0.0);
    (*grad)[arg] = 1.0;
  }
  return x[arg];
}

double ExactMin(std::span<const double> x, std::vector<double>* grad) {
  std::size_t arg = 0;
  for (std::size_t i = 1; i < x.size(); ++i) {
    if (x[i] < x[arg]) arg = i;
  }
  if (grad) {
    grad->assign(x.size(), 0.0);
    (*grad)[arg] = 1.0;
  }
  return x[arg];
}

// (sum_i (x_i + 1)^p)^(1/p) - 1 for any p != 0, evaluated in log space.
double ShiftedPowerMean(std::span<const double> x, double p, std::vector<double>* grad) {
  const std::size_t n = x.size();
  std::vector<double> logb(n);
  double top = -HUGE_VAL;
  for (std::size_t i = 0; i < n; ++i) {
    const double b = x[i] + 1.0;
    if (!(b > 0.0)) throw std::domain_error("lp smoothing: input <= -1");
    logb[i] = std::log(b);
    top = std::max(top, p * logb[i]);
  }
  double acc = 0.0;
  for (std::size_t i = 0; i < n; ++i) acc += std::exp(p * logb[i] - top);
  const double log_norm = (top + std::log(acc)) / p;
  if (grad) {
    grad->resize(n);
    for (std::size_t i = 0; i < n; ++i) {
      (*grad)[i] = std::exp((p - 1.0) * (logb[i] - log_norm));
    }
  }
  return std::exp(log_norm) - 1.0;
}

// Exponentially weighted average with weights e^(x_i/eps); max-subtracted.
double SoftmaxAverage(std::span<const double> x, double eps, std::vector<double>* grad) {
  const std::size_t n = x.size();
  const double top = *std::max_element(x.begin(), x.end());
  std::vector<double> w(n);
  double z = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    w[i] = std::exp((x[i] - top) / eps);
    z += w[i];
  }
  double s = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    w[i] /= z;
    s += w[i] * x[i];
  }
  if (grad) {
    grad->resize(n);
    for (std::size_t i = 0; i < n; ++i) (*grad)[i] = w[i] * (1.0 + (x[i] - s) / eps);
  }
  return s;
}

}  // namespace

void SmoothingSpec::Validate() const {
  if (kind == SmoothingKind::kLpShift && (param == 0.0 || !std::isfinite(param))) {
    throw std::invalid_argument("SmoothingSpec: lp exponent must be finite and nonzero");
  }
  if (kind == SmoothingKind::kSoftmax && !(param > 0.0 && std::isfinite(param))) {
    throw std::invalid_argument("SmoothingSpec: softmax epsilon must be positive");
  }
}

std::string SmoothingSpec::ToString() const {
  std::ostringstream out;
  switch (kind) {
    case SmoothingKind::kNone:
      return "none";
    case SmoothingKind::kLpShift:
      out << "lp:" << param;
      break;
    case SmoothingKind::kSoftmax:
      out << "softmax:" << param;
      break;
  }
  return out.str();
}

SmoothingSpec SmoothingSpec::Parse(const std::string& text) {
  if (text == "none") return None();
  const auto colon = text.find(':');
  if (colon == std::string::npos) {
    throw std::invalid_argument("SmoothingSpec: expected none, lp:P or softmax:EPS, got " + text);
  }
  const std::string head = text.substr(0, colon);
  double value = 0.0;
  try {
    std::size_t used = 0;
    value = std::stod(text.substr(colon + 1), &used);
    if (used != text.size() - colon - 1) throw std::invalid_argument("trailing");
  } catch (const std::exception&) {
    throw std::invalid_argument("SmoothingSpec: bad number in " + text);
  }
  SmoothingSpec spec;
  if (head == "lp") {
    spec = LpShift(value);
  } else if (head == "softmax") {
    spec = Softmax(value);
  } else {
    throw std::invalid_argument("SmoothingSpec: unknown kind " + head);
  }
  spec.Validate();
  return spec;
}

double SmoothMax(std::span<const double> x, const SmoothingSpec& spec,
                 std::vector<double>* grad) {
  CheckNonEmpty(x);
  spec.Validate();
  switch (spec.kind) {
    case SmoothingKind::kNone:
      return ExactMax(x, grad);
    case SmoothingKind::kLpShift:
      return ShiftedPowerMean(x, std::abs(spec.param), grad);
    case SmoothingKind::kSoftmax:
      return SoftmaxAverage(x, spec.param, grad);
  }
  return 0.0;
}

double SmoothMin(std::span<const double> x, const SmoothingSpec& spec,
                 std::vector<double>* grad) {
  CheckNonEmpty(x);
  spec.Validate();
  switch (spec.kind) {
    case SmoothingKind::kNone:
      return ExactMin(x, grad);
    case SmoothingKind::kLpShift:
      return ShiftedPowerMean(x, -std::abs(spec.param), grad);
    case SmoothingKind::kSoftmax: {
      std::vector<double> neg(x.begin(), x.end());
      for (double& e : neg) e = -e;
      // d/dx_i of -S(-x) is the softmax partial at -x.
      return -SoftmaxAverage(neg, spec.param, grad);
    }
  }
  return 0.0;
}

}  // namespace coalition
