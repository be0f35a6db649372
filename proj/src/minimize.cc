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

#include "coalition/minimize.h"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "coalition/game_core.h"

namespace coalition {
namespace {

double Dot(std::span<const double> a, std::span<const double> b) {
  double s = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

double StationarityGap(const Domain& domain, std::span<const double> x,
                       std::span<const double> g) {
  std::vector<double> trial(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) trial[i] = x[i] - g[i];
  domain.Project(trial);
  double gap = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) gap = std::max(gap, std::abs(x[i] - trial[i]));
  return gap;
}

// Dense inverse-Hessian approximation.
class InverseHessian {
 public:
  explicit InverseHessian(std::size_t n) : n_(n), h_(n * n) { Reset(); }

  void Reset() {
    std::fill(h_.begin(), h_.end(), 0.0);
    for (std::size_t i = 0; i < n_; ++i) h_[i * n_ + i] = 1.0;
  }

  std::vector<double> Apply(std::span<const double> v) const {
    std::vector<double> out(n_, 0.0);
    for (std::size_t i = 0; i < n_; ++i) {
      out[i] = Dot(std::span<const double>(&h_[i * n_], n_), v);
    }
    return out;
  }

  // BFGS update with step s and gradient change y.
  void Update(std::span<const double> s, std::span<const double> y) {
    const double sy = Dot(s, y);
    if (!(sy > 1e-14 * std::sqrt(Dot(s, s) * Dot(y, y)))) return;
    const double rho = 1.0 / sy;
    const std::vector<double> hy = Apply(y);
    const double yhy = Dot(y, hy);
    const double coeff = rho * (1.0 + rho * yhy);
    for (std::size_t i = 0; i < n_; ++i) {
      for (std::size_t j = 0; j < n_; ++j) {
        h_[i * n_ + j] += coeff * s[i] * s[j] - rho * (hy[i] * s[j] + s[i] * hy[j]);
      }
    }
  }

 private:
  std::size_t n_;
  std::vector<double> h_;
};

}  // namespace

Domain::Domain(std::vector<Block> blocks) : blocks_(std::move(blocks)) {
  std::size_t expected = 0;
  for (const Block& b : blocks_) {
    if (b.offset != expected || b.size == 0) {
      throw std::invalid_argument("Domain: blocks must be contiguous and nonempty");
    }
    expected += b.size;
  }
  dim_ = expected;
}

Domain Domain::Simplices(std::size_t n, std::size_t count) {
  std::vector<Block> blocks;
  for (std::size_t c = 0; c < count; ++c) blocks.push_back({c * n, n, BlockKind::kSimplex});
  return Domain(std::move(blocks));
}

Domain Domain::UnitBox(std::size_t n) { return Domain({{0, n, BlockKind::kBox}}); }

void Domain::Project(std::span<double> x) const {
  if (x.size() != dim_) throw DimensionError("Domain::Project: dimension mismatch");
  for (const Block& b : blocks_) {
    std::span<double> part = x.subspan(b.offset, b.size);
    if (b.kind == BlockKind::kBox) {
      for (double& e : part) e = std::clamp(e, 0.0, 1.0);
    } else {
      const std::vector<double> p = ProjectToSimplexRaw(part);
      std::copy(p.begin(), p.end(), part.begin());
    }
  }
}

void Domain::ProjectTangent(std::span<double> v) const {
  for (const Block& b : blocks_) {
    if (b.kind != BlockKind::kSimplex) continue;
    std::span<double> part = v.subspan(b.offset, b.size);
    double mean = 0.0;
    for (double e : part) mean += e;
    mean /= static_cast<double>(b.size);
    for (double& e : part) e -= mean;
  }
}

std::string ToString(Method method) {
  return method == Method::kProjectedGradient ? "projected-gradient" : "quasi-newton";
}

std::string ToString(Termination termination) {
  switch (termination) {
    case Termination::kConverged:
      return "converged";
    case Termination::kMaxIter:
      return "max_iter";
    case Termination::kLineSearchFailure:
      return "line_search_failure";
  }
  return "unknown";
}

MinimizeResult Minimize(const ObjectiveFn& f, const Domain& domain,
                        std::vector<double> x0, const MinimizeOptions& options) {
  const std::size_t n = domain.dim();
  if (x0.size() != n) throw DimensionError("Minimize: start point dimension mismatch");
  MinimizeResult result;
  std::vector<double>& x = result.x;
  x = std::move(x0);
  domain.Project(x);

  std::vector<double> g(n), g_new(n), x_new(n);
  double fx = f(x, g);
  ++result.evaluations;
  InverseHessian h(n);
  double pg_step = 1.0;

  // Backtracks along the projected arc x -> P(x + t d); returns success.
  auto search = [&](std::span<const double> d, double t0, double* t_out) {
    double t = t0;
    for (int k = 0; k <= options.max_halvings; ++k, t *= 0.5) {
      for (std::size_t i = 0; i < n; ++i) x_new[i] = x[i] + t * d[i];
      domain.Project(x_new);
      double decrease = 0.0;
      for (std::size_t i = 0; i < n; ++i) decrease += g[i] * (x_new[i] - x[i]);
      if (!(decrease < 0.0)) continue;
      const double f_new = f(x_new, g_new);
      ++result.evaluations;
      if (f_new <= fx + options.armijo_c * decrease) {
        *t_out = t;
        return f_new;
      }
    }
    return std::nan("");
  };

  result.termination = Termination::kMaxIter;
  for (result.iterations = 0; result.iterations < options.max_iter; ++result.iterations) {
    if (StationarityGap(domain, x, g) < options.grad_tol) {
      result.termination = Termination::kConverged;
      break;
    }
    double f_new = std::nan("");
    double t = 0.0;
    std::vector<double> g_tan;
    if (options.method == Method::kQuasiNewton) {
      g_tan = g;
      domain.ProjectTangent(g_tan);
      std::vector<double> d = h.Apply(g_tan);
      for (double& e : d) e = -e;
      f_new = search(d, 1.0, &t);
      if (std::isnan(f_new)) h.Reset();
    }
    if (std::isnan(f_new)) {
      std::vector<double> d(g);
      for (double& e : d) e = -e;
      f_new = search(d, std::min(2.0 * pg_step, 1e6), &t);
      if (std::isnan(f_new)) {
        result.termination = Termination::kLineSearchFailure;
        break;
      }
      pg_step = t;
    }
    if (options.method == Method::kQuasiNewton) {
      std::vector<double> s(n), y(g_new);
      domain.ProjectTangent(y);
      for (std::size_t i = 0; i < n; ++i) {
        s[i] = x_new[i] - x[i];
        y[i] -= g_tan[i];
      }
      h.Update(s, y);
    }
    x.swap(x_new);
    g.swap(g_new);
    fx = f_new;
  }
  result.value = fx;
  return result;
}

}  // namespace coalition
