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

#include "coalition/solvers.h"

#include <algorithm>
#include <cmath>
#include <random>
#include <stdexcept>

namespace coalition {
namespace {

constexpr std::size_t kRescueIterations = 50;
constexpr int kMaxRescues = 5;

// Applies the surrogate to payoffs in [lo, hi]. The lp form is evaluated on
// the affine image in [0, 1] and mapped back; the partials are unchanged by
// the map. `maximum` selects max or min.
double Surrogate(std::vector<double>& v, const SmoothingSpec& spec, double lo, double hi,
                 bool maximum, std::vector<double>* weights) {
  if (spec.kind == SmoothingKind::kLpShift && hi > lo) {
    const double scale = hi - lo;
    for (double& e : v) e = std::max((e - lo) / scale, -1.0 + 1e-12);
    const double s = maximum ? SmoothMax(v, spec, weights) : SmoothMin(v, spec, weights);
    return lo + scale * s;
  }
  const SmoothingSpec effective =
      spec.kind == SmoothingKind::kLpShift ? SmoothingSpec::None() : spec;
  return maximum ? SmoothMax(v, effective, weights) : SmoothMin(v, effective, weights);
}

// Coalition-side linear forms of the minimax objective.
void MinimaxForms(const PayoffTensor3& p, std::span<const double> y,
                  std::span<const double> z, std::vector<double>* a,
                  std::vector<double>* b, std::vector<double>* v) {
  const std::size_t n = p.n();
  a->assign(n * n, 0.0);
  b->assign(n * n, 0.0);
  v->assign(n, 0.0);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      double acc = 0.0;
      for (std::size_t k = 0; k < n; ++k) {
        const double e = p(i, j, k);
        acc += e * z[k];
        (*b)[i * n + k] += y[j] * e;
      }
      (*a)[i * n + j] = acc;
      (*v)[i] += y[j] * acc;
    }
  }
}

// Free variables of the soft-constraint mode: the first n - 1 weights of
// each block, the last weight being one minus their sum.
struct SoftLayout {
  std::size_t n;
  std::size_t blocks;

  std::vector<double> Expand(std::span<const double> w) const {
    std::vector<double> x(n * blocks);
    for (std::size_t b = 0; b < blocks; ++b) {
      double sum = 0.0;
      for (std::size_t i = 0; i + 1 < n; ++i) {
        x[b * n + i] = w[b * (n - 1) + i];
        sum += x[b * n + i];
      }
      x[b * n + n - 1] = 1.0 - sum;
    }
    return x;
  }

  std::vector<double> Compress(std::span<const double> x) const {
    std::vector<double> w((n - 1) * blocks);
    for (std::size_t b = 0; b < blocks; ++b) {
      for (std::size_t i = 0; i + 1 < n; ++i) w[b * (n - 1) + i] = x[b * n + i];
    }
    return w;
  }
};

template <typename Objective>
SolveOutcome RunMultistart(Objective objective, std::size_t n, std::size_t blocks,
                           bool maximize, const SolverConfig& config) {
  config.Validate();
  const double sign = maximize ? -1.0 : 1.0;
  const double target_eps = config.smoothing.param;
  const bool softmax = config.smoothing.kind == SmoothingKind::kSoftmax;
  const bool soft = config.constraints == ConstraintMode::kSoft;
  const SoftLayout layout{n, blocks};

  std::vector<double> schedule;
  if (softmax && config.continuation && config.continuation_start > target_eps) {
    for (double e = config.continuation_start; e > target_eps * 1.0000001; e /= 10.0) {
      schedule.push_back(e);
    }
  }
  schedule.push_back(target_eps);

  // Minimized function over the solver's own variables.
  ObjectiveFn f = [&](std::span<const double> u, std::span<double> grad) {
    if (!soft) {
      const double val = objective(u, grad);
      for (double& g : grad) g *= sign;
      return sign * val;
    }
    const std::vector<double> x = layout.Expand(u);
    std::vector<double> gx(grad.empty() ? 0 : x.size());
    double val = sign * objective(x, gx);
    for (std::size_t b = 0; b < blocks; ++b) {
      double sum = 0.0;
      for (std::size_t i = 0; i + 1 < n; ++i) sum += u[b * (n - 1) + i];
      const double excess = std::max(sum - 1.0, 0.0);
      val += config.penalty_k * std::pow(excess, config.penalty_exponent);
      if (grad.empty()) continue;
      const double dpen = excess > 0.0 ? config.penalty_k * config.penalty_exponent *
                                             std::pow(excess, config.penalty_exponent - 1.0)
                                       : 0.0;
      for (std::size_t i = 0; i + 1 < n; ++i) {
        grad[b * (n - 1) + i] = sign * (gx[b * n + i] - gx[b * n + n - 1]) + dpen;
      }
    }
    return val;
  };
  const Domain domain =
      soft ? Domain::UnitBox((n - 1) * blocks) : Domain::Simplices(n, blocks);
  MinimizeOptions options;
  options.method = config.method;
  options.max_iter = config.max_iter;
  options.grad_tol = config.grad_tol;

  SolveOutcome outcome;
  for (std::size_t r = 0; r < config.restarts; ++r) {
    RestartLog entry;
    entry.restart = r;
    entry.seed = config.rng_seed + r;
    std::mt19937_64 rng(entry.seed);
    std::vector<double> start;
    for (std::size_t b = 0; b < blocks; ++b) {
      const std::vector<double> s = SampleSimplex(n, rng);
      start.insert(start.end(), s.begin(), s.end());
    }
    std::vector<double> u = soft ? layout.Compress(start) : start;

    MinimizeResult res;
    for (double eps : schedule) {
      if (softmax) objective.spec().param = eps;
      res = Minimize(f, domain, u, options);
      u = res.x;
      entry.iterations += res.iterations;
    }
    if (softmax && config.adaptive_smoothing) {
      double bumped = target_eps;
      for (int k = 0; k < kMaxRescues && res.termination == Termination::kLineSearchFailure;
           ++k) {
        bumped = std::min(bumped * 10.0, config.epsilon_max);
        objective.spec().param = bumped;
        MinimizeOptions brief = options;
        brief.max_iter = kRescueIterations;
        u = Minimize(f, domain, u, brief).x;
        objective.spec().param = target_eps;
        res = Minimize(f, domain, u, options);
        u = res.x;
        entry.iterations += res.iterations;
        ++entry.rescues;
      }
    }
    if (softmax) objective.spec().param = target_eps;

    std::vector<double> x = soft ? layout.Expand(u) : u;
    Domain::Simplices(n, blocks).Project(x);
    entry.value = objective.Exact(x);
    entry.smoothed_value = objective(x, {});
    entry.termination = res.termination;

    const bool better = outcome.log.empty() ||
                        (maximize ? entry.value > outcome.value : entry.value < outcome.value);
    if (better) {
      outcome.value = entry.value;
      outcome.termination = entry.termination;
      outcome.best_restart = r;
      outcome.strategies.clear();
      for (std::size_t b = 0; b < blocks; ++b) {
        outcome.strategies.emplace_back(
            std::vector<double>(x.begin() + b * n, x.begin() + (b + 1) * n));
      }
    }
    outcome.log.push_back(entry);
  }
  outcome.restarts_used = outcome.log.size();
  return outcome;
}

}  // namespace

MinimaxObjective::MinimaxObjective(const PayoffTensor3& p, SmoothingSpec spec)
    : p_(p), spec_(spec), lo_(p.MinEntry()), hi_(p.MaxEntry()) {
  spec_.Validate();
}

double MinimaxObjective::operator()(std::span<const double> yz,
                                    std::span<double> grad) const {
  const std::size_t n = p_.n();
  if (yz.size() != 2 * n) throw DimensionError("MinimaxObjective: dimension mismatch");
  std::vector<double> a, b, v;
  MinimaxForms(p_, yz.subspan(0, n), yz.subspan(n, n), &a, &b, &v);
  std::vector<double> w;
  const double val = Surrogate(v, spec_, lo_, hi_, true, grad.empty() ? nullptr : &w);
  if (!grad.empty()) {
    for (std::size_t j = 0; j < n; ++j) {
      double gy = 0.0, gz = 0.0;
      for (std::size_t i = 0; i < n; ++i) {
        gy += w[i] * a[i * n + j];
        gz += w[i] * b[i * n + j];
      }
      grad[j] = gy;
      grad[n + j] = gz;
    }
  }
  return val;
}

double MinimaxObjective::Exact(std::span<const double> yz) const {
  const std::size_t n = p_.n();
  const std::vector<double> v = PlayerOneReturns(p_, yz.subspan(0, n), yz.subspan(n, n));
  return *std::max_element(v.begin(), v.end());
}

MaximinObjective::MaximinObjective(const PayoffTensor3& p, SmoothingSpec spec)
    : p_(p), spec_(spec), lo_(p.MinEntry()), hi_(p.MaxEntry()) {
  spec_.Validate();
}

double MaximinObjective::operator()(std::span<const double> x, std::span<double> grad) const {
  const std::size_t n = p_.n();
  std::vector<double> u = CoalitionPairReturns(p_, x);
  std::vector<double> w;
  const double val = Surrogate(u, spec_, lo_, hi_, false, grad.empty() ? nullptr : &w);
  if (!grad.empty()) {
    const std::span<const double> e = p_.entries();
    for (std::size_t i = 0; i < n; ++i) {
      double acc = 0.0;
      for (std::size_t jk = 0; jk < n * n; ++jk) acc += w[jk] * e[i * n * n + jk];
      grad[i] = acc;
    }
  }
  return val;
}

double MaximinObjective::Exact(std::span<const double> x) const {
  const std::vector<double> u = CoalitionPairReturns(p_, x);
  return *std::min_element(u.begin(), u.end());
}

MatrixMaximinObjective::MatrixMaximinObjective(const PayoffMatrix2& m, SmoothingSpec spec)
    : m_(m), spec_(spec) {
  spec_.Validate();
  const auto e = m.entries();
  lo_ = *std::min_element(e.begin(), e.end());
  hi_ = *std::max_element(e.begin(), e.end());
}

double MatrixMaximinObjective::operator()(std::span<const double> x,
                                          std::span<double> grad) const {
  if (x.size() != m_.rows()) throw DimensionError("MatrixMaximinObjective: dimension mismatch");
  std::vector<double> u(m_.cols(), 0.0);
  for (std::size_t r = 0; r < m_.rows(); ++r) {
    for (std::size_t c = 0; c < m_.cols(); ++c) u[c] += x[r] * m_(r, c);
  }
  std::vector<double> w;
  const double val = Surrogate(u, spec_, lo_, hi_, false, grad.empty() ? nullptr : &w);
  if (!grad.empty()) {
    for (std::size_t r = 0; r < m_.rows(); ++r) {
      double acc = 0.0;
      for (std::size_t c = 0; c < m_.cols(); ++c) acc += w[c] * m_(r, c);
      grad[r] = acc;
    }
  }
  return val;
}

double MatrixMaximinObjective::Exact(std::span<const double> x) const {
  double worst = HUGE_VAL;
  for (std::size_t c = 0; c < m_.cols(); ++c) {
    double acc = 0.0;
    for (std::size_t r = 0; r < m_.rows(); ++r) acc += x[r] * m_(r, c);
    worst = std::min(worst, acc);
  }
  return worst;
}

void SolverConfig::Validate() const {
  smoothing.Validate();
  if (!(penalty_k > 0.0)) throw std::invalid_argument("SolverConfig: penalty_k must be > 0");
  if (!(penalty_exponent >= 1.0)) {
    throw std::invalid_argument("SolverConfig: penalty_exponent must be >= 1");
  }
  if (restarts < 1) throw std::invalid_argument("SolverConfig: restarts must be >= 1");
  if (max_iter < 1) throw std::invalid_argument("SolverConfig: max_iter must be >= 1");
  if (!(grad_tol > 0.0)) throw std::invalid_argument("SolverConfig: grad_tol must be > 0");
  if (adaptive_smoothing && !(epsilon_max > 0.0)) {
    throw std::invalid_argument("SolverConfig: epsilon_max must be > 0");
  }
}

SolveOutcome SolveMaximin(const PayoffTensor3& p, const SolverConfig& config) {
  return RunMultistart(MaximinObjective(p, config.smoothing), p.n(), 1, true, config);
}

SolveOutcome SolveMinimax(const PayoffTensor3& p, const SolverConfig& config) {
  return RunMultistart(MinimaxObjective(p, config.smoothing), p.n(), 2, false, config);
}

SolveOutcome SolveMatrixMaximin(const PayoffMatrix2& m, const SolverConfig& config) {
  return RunMultistart(MatrixMaximinObjective(m, config.smoothing), m.rows(), 1, true, config);
}

std::string ToString(ConstraintMode mode) {
  return mode == ConstraintMode::kHard ? "hard" : "soft";
}

}  // namespace coalition
