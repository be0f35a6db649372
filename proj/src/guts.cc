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

#include "coalition/guts.h"

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>
#include <sstream>
#include <utility>

namespace coalition {
namespace {

constexpr double kGolden = 0.6180339887498949;

void CheckUnit(double v, const char* what) {
  if (!(v >= 0.0 && v <= 1.0)) {
    std::ostringstream msg;
    msg << what << " = " << v << " lies outside [0, 1]";
    throw std::domain_error(msg.str());
  }
}

void CheckPoint(const GutsPoint& p) {
  CheckUnit(p.p1, "p1");
  CheckUnit(p.p2, "p2");
  CheckUnit(p.p3, "p3");
}

// Golden-section maximization of a unimodal function on [lo, hi].
InnerMax GoldenMaximize(const std::function<double(double)>& f, double lo,
                        double hi, double tol = 1e-12) {
  double a = lo, b = hi;
  double c = b - kGolden * (b - a);
  double d = a + kGolden * (b - a);
  double fc = f(c), fd = f(d);
  while (b - a > tol) {
    if (fc >= fd) {
      b = d;
      d = c;
      fd = fc;
      c = b - kGolden * (b - a);
      fc = f(c);
    } else {
      a = c;
      c = d;
      fc = fd;
      d = a + kGolden * (b - a);
      fd = f(d);
    }
  }
  InnerMax best{fc, c};
  if (fd > best.value) best = {fd, d};
  for (double x : {lo, hi}) {
    const double fx = f(x);
    if (fx > best.value) best = {fx, x};
  }
  return best;
}

GutsBranch BranchOf(double p1, double lo, double hi) {
  if (p1 <= lo) return GutsBranch::kLow;
  if (p1 <= hi) return GutsBranch::kMiddle;
  return GutsBranch::kHigh;
}

double P3a(double p1, double v) {
  const double s = 2.0 - v;
  return (1.0 + v) / (std::sqrt(s * s * p1 * p1 + 6.0 * (1.0 + v)) - s * p1);
}

// The critical point leaves [0, 1] for large p1; alpha(p1, 0, .) is convex
// there, so the constrained minimizer is the endpoint.
double P3b(double p1, double v) {
  return std::min(1.0, std::sqrt((3.0 * p1 * p1 + 1.0 + v) / 3.0));
}

double AlphaAV(double p1, double v) {
  const double q = P3a(p1, v);
  return (q - p1) * (4.0 * q * q - 2.0) +
         v * (2.0 - p1 - 2.0 * q + 2.0 * p1 * q * q);
}

double AlphaBV(double p1, double v) {
  const double q = P3b(p1, v);
  return 2.0 * p1 - q + q * q * q - 3.0 * p1 * p1 * q + v * (2.0 - p1 - q);
}

double ResponseMin(double p1, double v) {
  return std::min(AlphaAV(p1, v), AlphaBV(p1, v));
}

}  // namespace

double GutsAlphaBranch(GutsBranch branch, const GutsPoint& p) {
  const double a = p.p1, b = p.p2, c = p.p3;
  const double linear = 2.0 * a - b - c;
  switch (branch) {
    case GutsBranch::kLow:
      return linear + c * c * c + 3.0 * b * b * c - 4.0 * a * b * c;
    case GutsBranch::kMiddle:
      return linear + c * c * c - 3.0 * a * a * c + 2.0 * a * b * c;
    case GutsBranch::kHigh:
      return linear - 2.0 * a * a * a + 2.0 * a * b * c;
  }
  return 0.0;
}

std::array<double, 3> GutsGradientBranch(GutsBranch branch, const GutsPoint& p) {
  const double a = p.p1, b = p.p2, c = p.p3;
  switch (branch) {
    case GutsBranch::kLow:
      return {2.0 - 4.0 * b * c, -1.0 + 6.0 * b * c - 4.0 * a * c,
              -1.0 + 3.0 * c * c + 3.0 * b * b - 4.0 * a * b};
    case GutsBranch::kMiddle:
      return {2.0 - 6.0 * a * c + 2.0 * b * c, -1.0 + 2.0 * a * c,
              -1.0 + 3.0 * c * c - 3.0 * a * a + 2.0 * a * b};
    case GutsBranch::kHigh:
      return {2.0 - 6.0 * a * a + 2.0 * b * c, -1.0 + 2.0 * a * c,
              -1.0 + 2.0 * a * b};
  }
  return {0.0, 0.0, 0.0};
}

double GutsAlpha(const GutsPoint& p) {
  CheckPoint(p);
  const double lo = std::min(p.p2, p.p3), hi = std::max(p.p2, p.p3);
  const GutsPoint canon{p.p1, lo, hi};
  return GutsAlphaBranch(BranchOf(p.p1, lo, hi), canon);
}

std::array<double, 3> GutsGradient(const GutsPoint& p) {
  CheckPoint(p);
  const bool swapped = p.p2 > p.p3;
  const double lo = std::min(p.p2, p.p3), hi = std::max(p.p2, p.p3);
  std::array<double, 3> g =
      GutsGradientBranch(BranchOf(p.p1, lo, hi), GutsPoint{p.p1, lo, hi});
  if (swapped) std::swap(g[1], g[2]);
  return g;
}

double GutsBeta(const GutsPoint& p) {
  CheckPoint(p);
  return 2.0 - p.p1 - p.p2 - p.p3 + 2.0 * p.p1 * p.p2 * p.p3;
}

double GutsAlphaA0(double p1) {
  return -(std::pow(4.0 * p1 * p1 + 6.0, 1.5) + 8.0 * p1 * p1 * p1 - 36.0 * p1) / 27.0;
}

double GutsAlphaB0(double p1) {
  return -2.0 * (std::pow(9.0 * p1 * p1 + 3.0, 1.5) - 27.0 * p1) / 27.0;
}

GutsBestResponse BestResponse(double p1, double v) {
  CheckUnit(p1, "p1");
  if (!(std::abs(v) <= kGutsMaxAbsV)) {
    std::ostringstream msg;
    msg << "BestResponse: |V| = " << std::abs(v) << " exceeds " << kGutsMaxAbsV;
    throw GutsError(msg.str());
  }
  GutsBestResponse br;
  br.p1 = p1;
  br.v = v;
  br.p3a = P3a(p1, v);
  br.p3b = P3b(p1, v);
  br.value_a = AlphaAV(p1, v);
  br.value_b = AlphaBV(p1, v);
  br.r = std::min(br.value_a, br.value_b);
  return br;
}

SyncValueResult SyncValue(double v) {
  BestResponse(0.0, v);  // range check
  constexpr int kGrid = 2000;
  auto diff = [v](double p1) { return AlphaAV(p1, v) - AlphaBV(p1, v); };

  // Among all sign changes of alpha_a - alpha_b keep the best bracket.
  double best_value = -std::numeric_limits<double>::infinity();
  double best_lo = 0.0, best_hi = 0.0;
  bool bracketed = false;
  double prev_p = 0.0, prev_d = diff(0.0);
  for (int i = 1; i <= kGrid; ++i) {
    const double p = static_cast<double>(i) / kGrid;
    const double d = diff(p);
    if ((prev_d < 0.0) != (d < 0.0)) {
      const double m = std::max(ResponseMin(prev_p, v), ResponseMin(p, v));
      if (m > best_value) {
        best_value = m;
        best_lo = prev_p;
        best_hi = p;
        bracketed = true;
      }
    }
    prev_p = p;
    prev_d = d;
  }

  auto response = [v](double p1) { return ResponseMin(p1, v); };
  InnerMax opt;
  if (bracketed) {
    opt = GoldenMaximize(response, std::max(0.0, best_lo - 1.0 / kGrid),
                         std::min(1.0, best_hi + 1.0 / kGrid));
  } else {
    int arg = 0;
    double val = response(0.0);
    for (int i = 1; i <= kGrid; ++i) {
      const double f = response(static_cast<double>(i) / kGrid);
      if (f > val) {
        val = f;
        arg = i;
      }
    }
    if (arg == 0 || arg == kGrid) {
      throw GutsError("SyncValue: response curves do not cross in [0, 1]");
    }
    opt = GoldenMaximize(response, static_cast<double>(arg - 1) / kGrid,
                         static_cast<double>(arg + 1) / kGrid);
  }

  // Beyond the crossing the (p3a, p3a) response must stay the larger one,
  // otherwise the two-candidate description no longer applies at this V.
  for (int i = 0; i <= 200; ++i) {
    const double p = opt.p1 + (1.0 - opt.p1) * i / 200.0;
    if (diff(p) < -1e-9) {
      std::ostringstream msg;
      msg << "SyncValue: V = " << v << " is too large; alpha_a < alpha_b at p1 = " << p;
      throw GutsError(msg.str());
    }
  }
  return {opt.value, opt.p1};
}

CoalitionMixture OptimalCoalitionMixture() {
  const SyncValueResult s = SyncValue(0.0);
  CoalitionMixture m;
  m.p1_opt = s.p1_opt;
  m.value = s.value;
  m.p3a = P3a(s.p1_opt, 0.0);
  m.p3b = P3b(s.p1_opt, 0.0);
  constexpr double h = 1e-6;
  m.d_alpha_a = (AlphaAV(s.p1_opt + h, 0.0) - AlphaAV(s.p1_opt - h, 0.0)) / (2.0 * h);
  m.d_alpha_b = (AlphaBV(s.p1_opt + h, 0.0) - AlphaBV(s.p1_opt - h, 0.0)) / (2.0 * h);
  if (!(m.d_alpha_a * m.d_alpha_b < 0.0)) {
    throw GutsError("OptimalCoalitionMixture: response slopes do not have opposite signs");
  }
  m.y = std::abs(m.d_alpha_b) / (std::abs(m.d_alpha_a) + std::abs(m.d_alpha_b));
  return m;
}

double MixturePayoff(const CoalitionMixture& m, double p1) {
  return m.y * GutsAlpha({p1, m.p3a, m.p3a}) +
         (1.0 - m.y) * GutsAlpha({p1, 0.0, m.p3b});
}

RecursiveTrace RecursiveFixedPoint(std::size_t max_rounds, double tol) {
  if (max_rounds < 1) throw std::invalid_argument("RecursiveFixedPoint: max_rounds < 1");
  RecursiveTrace trace;
  double v = 0.0;
  for (std::size_t round = 0; round < max_rounds; ++round) {
    const SyncValueResult s = SyncValue(v);
    if (!trace.values.empty() && s.value > trace.values.back() + 1e-12) {
      std::ostringstream msg;
      msg << "RecursiveFixedPoint: value increased at round " << round << " ("
          << trace.values.back() << " -> " << s.value << ")";
      throw GutsError(msg.str());
    }
    trace.values.push_back(s.value);
    trace.p1_path.push_back(s.p1_opt);
    const double step = std::abs(s.value - v);
    v = s.value;
    if (step < tol) {
      trace.converged = true;
      break;
    }
  }
  trace.v_star = v;
  return trace;
}

InnerMax MaxOverP1(double p2, double p3) {
  CheckUnit(p2, "p2");
  CheckUnit(p3, "p3");
  return GoldenMaximize([p2, p3](double p1) { return GutsAlpha({p1, p2, p3}); },
                        0.0, 1.0, 1e-10);
}

AsyncCertificate ComputeAsyncCertificate(std::size_t grid_n) {
  if (grid_n < 2) throw std::invalid_argument("ComputeAsyncCertificate: grid_n < 2");
  const double step = 1.0 / static_cast<double>(grid_n - 1);
  // alpha is symmetric in (p2, p3): scan the upper triangle, then report
  // the argmin with p2 <= p3 in row-major order.
  AsyncCertificate best{std::numeric_limits<double>::infinity(), 0.0, 0.0};
  for (std::size_t a = 0; a < grid_n; ++a) {
    const double p2 = a * step;
    for (std::size_t b = a; b < grid_n; ++b) {
      const double p3 = std::min(1.0, b * step);
      const double m = MaxOverP1(p2, p3).value;
      if (m < best.min_of_max) best = {m, p2, p3};
    }
  }
  return best;
}

PayoffTensor3 DiscretizeGuts(std::size_t n) {
  if (n < 2) throw std::invalid_argument("DiscretizeGuts: n must be >= 2");
  PayoffTensor3 p(n, /*symmetric_zero_sum=*/true);
  const double dn = static_cast<double>(n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      for (std::size_t k = 0; k < n; ++k) {
        p(i, j, k) = GutsAlpha({i / dn, j / dn, k / dn});
      }
    }
  }
  const SymmetryReport report = ValidateSymmetry(p, 1e-12);
  if (!report.pass) {
    std::ostringstream msg;
    msg << "DiscretizeGuts: symmetry violation " << report.max_violation;
    throw GutsError(msg.str());
  }
  return p;
}

double GutsGradientBound(std::size_t samples) {
  if (samples < 2) throw std::invalid_argument("GutsGradientBound: samples < 2");
  const double step = 1.0 / static_cast<double>(samples - 1);
  double bound = 0.0;
  for (std::size_t a = 0; a < samples; ++a) {
    for (std::size_t b = 0; b < samples; ++b) {
      for (std::size_t c = 0; c < samples; ++c) {
        const auto g = GutsGradient({std::min(1.0, a * step), std::min(1.0, b * step),
                                     std::min(1.0, c * step)});
        bound = std::max(bound, std::abs(g[0]) + std::abs(g[1]) + std::abs(g[2]));
      }
    }
  }
  return bound;
}

}  // namespace coalition
