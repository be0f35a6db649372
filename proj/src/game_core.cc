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

#include "coalition/game_core.h"

#include <algorithm>
#include <cmath>
#include <functional>
#include <numeric>
#include <sstream>

namespace coalition {
namespace {

void CheckSize(std::size_t got, std::size_t want, const char* what) {
  if (got != want) {
    std::ostringstream msg;
    msg << what << ": expected dimension " << want << ", got " << got;
    throw DimensionError(msg.str());
  }
}

}  // namespace

StrategySimplex::StrategySimplex(std::vector<double> weights)
    : weights_(std::move(weights)) {
  if (weights_.empty()) {
    throw std::invalid_argument("StrategySimplex: empty weight vector");
  }
  double sum = 0.0;
  for (double w : weights_) {
    if (!std::isfinite(w) || w < -kStructuralTol) {
      throw std::invalid_argument("StrategySimplex: negative or non-finite weight");
    }
    sum += w;
  }
  if (std::abs(sum - 1.0) > 1e3 * kStructuralTol) {
    std::ostringstream msg;
    msg << "StrategySimplex: weights sum to " << sum;
    throw std::invalid_argument(msg.str());
  }
  for (double& w : weights_) w = std::max(w, 0.0);
}

StrategySimplex StrategySimplex::Uniform(std::size_t n) {
  return StrategySimplex(std::vector<double>(n, 1.0 / static_cast<double>(n)));
}

StrategySimplex StrategySimplex::Vertex(std::size_t n, std::size_t index) {
  if (index >= n) throw std::out_of_range("StrategySimplex::Vertex");
  std::vector<double> w(n, 0.0);
  w[index] = 1.0;
  return StrategySimplex(std::move(w));
}

PayoffTensor3::PayoffTensor3(std::size_t n, bool symmetric_zero_sum)
    : n_(n), entries_(n * n * n, 0.0), symmetric_zero_sum_(symmetric_zero_sum) {}

PayoffTensor3::PayoffTensor3(std::size_t n, std::vector<double> entries,
                             bool symmetric_zero_sum)
    : n_(n), entries_(std::move(entries)), symmetric_zero_sum_(symmetric_zero_sum) {
  CheckSize(entries_.size(), n * n * n, "PayoffTensor3 entries");
  for (double e : entries_) {
    if (!std::isfinite(e)) throw std::invalid_argument("PayoffTensor3: non-finite entry");
  }
}

double PayoffTensor3::MinEntry() const {
  return *std::min_element(entries_.begin(), entries_.end());
}

double PayoffTensor3::MaxEntry() const {
  return *std::max_element(entries_.begin(), entries_.end());
}

PayoffTensor3 PayoffTensor3::Negated() const {
  PayoffTensor3 out = *this;
  for (double& e : out.entries_) e = -e;
  return out;
}

PayoffMatrix2::PayoffMatrix2(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), entries_(rows * cols, 0.0) {}

PayoffMatrix2::PayoffMatrix2(std::size_t rows, std::size_t cols,
                             std::vector<double> entries)
    : rows_(rows), cols_(cols), entries_(std::move(entries)) {
  CheckSize(entries_.size(), rows * cols, "PayoffMatrix2 entries");
  for (double e : entries_) {
    if (!std::isfinite(e)) throw std::invalid_argument("PayoffMatrix2: non-finite entry");
  }
}

PayoffMatrix2::PayoffMatrix2(std::initializer_list<std::initializer_list<double>> rows)
    : rows_(rows.size()), cols_(rows.size() ? rows.begin()->size() : 0) {
  for (const auto& row : rows) {
    CheckSize(row.size(), cols_, "PayoffMatrix2 row");
    entries_.insert(entries_.end(), row.begin(), row.end());
  }
}

double ExpectedPayoff(const PayoffTensor3& p, std::span<const double> x,
                      std::span<const double> y, std::span<const double> z) {
  CheckSize(x.size(), p.n(), "ExpectedPayoff x");
  const std::vector<double> v = PlayerOneReturns(p, y, z);
  return std::inner_product(x.begin(), x.end(), v.begin(), 0.0);
}

std::vector<double> PlayerOneReturns(const PayoffTensor3& p,
                                     std::span<const double> y,
                                     std::span<const double> z) {
  const std::size_t n = p.n();
  CheckSize(y.size(), n, "PlayerOneReturns y");
  CheckSize(z.size(), n, "PlayerOneReturns z");
  std::vector<double> v(n, 0.0);
  for (std::size_t i = 0; i < n; ++i) {
    double acc = 0.0;
    for (std::size_t j = 0; j < n; ++j) {
      if (y[j] == 0.0) continue;
      double row = 0.0;
      for (std::size_t k = 0; k < n; ++k) row += z[k] * p(i, j, k);
      acc += y[j] * row;
    }
    v[i] = acc;
  }
  return v;
}

std::vector<double> CoalitionPairReturns(const PayoffTensor3& p,
                                         std::span<const double> x) {
  const std::size_t n = p.n();
  CheckSize(x.size(), n, "CoalitionPairReturns x");
  std::vector<double> u(n * n, 0.0);
  for (std::size_t i = 0; i < n; ++i) {
    if (x[i] == 0.0) continue;
    for (std::size_t jk = 0; jk < n * n; ++jk) {
      u[jk] += x[i] * p.entries()[i * n * n + jk];
    }
  }
  return u;
}

PureResponse BestPureResponseP1(const PayoffTensor3& p, const StrategySimplex& y,
                                const StrategySimplex& z) {
  const std::vector<double> v = PlayerOneReturns(p, y.weights(), z.weights());
  PureResponse best{0, v[0]};
  for (std::size_t i = 1; i < v.size(); ++i) {
    if (v[i] > best.value) best = {i, v[i]};
  }
  return best;
}

PurePairResponse WorstPurePair(const PayoffTensor3& p, const StrategySimplex& x) {
  const std::size_t n = p.n();
  const std::vector<double> u = CoalitionPairReturns(p, x.weights());
  PurePairResponse worst{0, 0, u[0]};
  for (std::size_t jk = 1; jk < u.size(); ++jk) {
    if (u[jk] < worst.value) worst = {jk / n, jk % n, u[jk]};
  }
  return worst;
}

SymmetryReport ValidateSymmetry(const PayoffTensor3& p, double tol) {
  const std::size_t n = p.n();
  double worst = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      for (std::size_t k = 0; k < n; ++k) {
        worst = std::max(worst, std::abs(p(i, j, k) - p(i, k, j)));
        worst = std::max(worst, std::abs(p(i, j, k) + p(j, i, k) + p(k, i, j)));
      }
    }
  }
  return {worst <= tol, worst};
}

PayoffTensor3 RandomSymmetricTensor(std::size_t n, std::uint64_t seed,
                                    GeneratorRange range) {
  if (n < 2) throw std::invalid_argument("RandomSymmetricTensor: n must be >= 2");
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> uniform(range.lo, range.hi);
  // Free entries are dyadic with 40 fractional bits, so the derived entries
  // and every cyclic sum are exact in double precision.
  auto draw = [&](std::mt19937_64& g) {
    return std::ldexp(std::round(std::ldexp(uniform(g), 40)), -40);
  };
  PayoffTensor3 p(n, /*symmetric_zero_sum=*/true);

  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      // Orbit {jji, jij, ijj}: P_ijj = -2 P_jji.
      const double a = draw(rng);
      p(j, j, i) = a;
      p(j, i, j) = a;
      p(i, j, j) = -2.0 * a;
      // Orbit {jii, iij, iji}: P_iij = P_iji = -P_jii / 2.
      const double b = draw(rng);
      p(j, i, i) = b;
      p(i, i, j) = -0.5 * b;
      p(i, j, i) = -0.5 * b;
    }
  }
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      for (std::size_t k = j + 1; k < n; ++k) {
        const double a = draw(rng);
        const double b = draw(rng);
        const double c = -a - b;
        p(i, j, k) = p(i, k, j) = a;
        p(j, i, k) = p(j, k, i) = b;
        p(k, i, j) = p(k, j, i) = c;
      }
    }
  }
  return p;
}

PayoffMatrix2 RandomMatrix(std::size_t rows, std::size_t cols, std::uint64_t seed,
                           GeneratorRange range) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> draw(range.lo, range.hi);
  PayoffMatrix2 m(rows, cols);
  for (std::size_t r = 0; r < rows; ++r) {
    for (std::size_t c = 0; c < cols; ++c) m(r, c) = draw(rng);
  }
  return m;
}

PayoffMatrix2 NegativeTranspose(const PayoffMatrix2& m) {
  PayoffMatrix2 out(m.cols(), m.rows());
  for (std::size_t r = 0; r < m.rows(); ++r) {
    for (std::size_t c = 0; c < m.cols(); ++c) out(c, r) = -m(r, c);
  }
  return out;
}

std::vector<double> ProjectToSimplexRaw(std::span<const double> v) {
  const std::size_t n = v.size();
  if (n == 0) throw std::invalid_argument("ProjectToSimplex: empty vector");
  for (double e : v) {
    if (!std::isfinite(e)) throw std::invalid_argument("ProjectToSimplex: non-finite input");
  }
  std::vector<double> sorted(v.begin(), v.end());
  std::sort(sorted.begin(), sorted.end(), std::greater<>());
  double cumulative = 0.0;
  double threshold = 0.0;
  for (std::size_t r = 0; r < n; ++r) {
    cumulative += sorted[r];
    const double t = (cumulative - 1.0) / static_cast<double>(r + 1);
    if (sorted[r] - t > 0.0) threshold = t;
  }
  std::vector<double> out(n);
  double sum = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    out[i] = std::max(v[i] - threshold, 0.0);
    sum += out[i];
  }
  // Renormalize away the rounding residue so the sum invariant is exact.
  for (double& e : out) e /= sum;
  return out;
}

StrategySimplex ProjectToSimplex(std::span<const double> v) {
  return StrategySimplex(ProjectToSimplexRaw(v));
}

std::vector<double> SampleSimplex(std::size_t n, std::mt19937_64& rng) {
  std::exponential_distribution<double> exp1(1.0);
  std::vector<double> w(n);
  double sum = 0.0;
  for (double& e : w) {
    e = exp1(rng);
    sum += e;
  }
  for (double& e : w) e /= sum;
  return w;
}

}  // namespace coalition
