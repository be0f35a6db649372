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

// Brute-force reference computations used by the tests. They share no code
// with the library beyond direct tensor indexing.

#ifndef COALITION_TESTS_ORACLES_H_
#define COALITION_TESTS_ORACLES_H_

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>
#include <vector>

#include "coalition/game_core.h"

namespace coalition::testing {

inline double Trilinear(const PayoffTensor3& p, const std::vector<double>& x,
                        const std::vector<double>& y, const std::vector<double>& z) {
  double s = 0.0;
  const std::size_t n = p.n();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k) s += x[i] * y[j] * z[k] * p(i, j, k);
  return s;
}

// Calls f on every point of the simplex lattice {w : w_i = m_i / res}.
inline void ForEachLatticePoint(std::size_t n, int res,
                                const std::function<void(const std::vector<double>&)>& f) {
  std::vector<int> m(n, 0);
  std::vector<double> w(n);
  std::function<void(std::size_t, int)> rec = [&](std::size_t i, int left) {
    if (i + 1 == n) {
      m[i] = left;
      for (std::size_t t = 0; t < n; ++t) w[t] = static_cast<double>(m[t]) / res;
      f(w);
      return;
    }
    for (int v = 0; v <= left; ++v) {
      m[i] = v;
      rec(i + 1, left - v);
    }
  };
  rec(0, res);
}

// max over the lattice of min_{j,k} sum_i x_i P_ijk.
inline double LatticeMaximin(const PayoffTensor3& p, int res) {
  const std::size_t n = p.n();
  double best = -std::numeric_limits<double>::infinity();
  ForEachLatticePoint(n, res, [&](const std::vector<double>& x) {
    double worst = std::numeric_limits<double>::infinity();
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k) {
        double s = 0.0;
        for (std::size_t i = 0; i < n; ++i) s += x[i] * p(i, j, k);
        worst = std::min(worst, s);
      }
    best = std::max(best, worst);
  });
  return best;
}

// min over lattice pairs (y, z) of max_i sum_jk y_j z_k P_ijk.
inline double LatticeMinimax(const PayoffTensor3& p, int res) {
  const std::size_t n = p.n();
  std::vector<std::vector<double>> pts;
  ForEachLatticePoint(n, res, [&](const std::vector<double>& w) { pts.push_back(w); });
  double best = std::numeric_limits<double>::infinity();
  for (const auto& y : pts)
    for (const auto& z : pts) {
      double top = -std::numeric_limits<double>::infinity();
      for (std::size_t i = 0; i < n; ++i) {
        double s = 0.0;
        for (std::size_t j = 0; j < n; ++j)
          for (std::size_t k = 0; k < n; ++k) s += y[j] * z[k] * p(i, j, k);
        top = std::max(top, s);
      }
      best = std::min(best, top);
    }
  return best;
}

// Row player's maximin value of a matrix game on a simplex lattice.
inline double LatticeMatrixValue(const PayoffMatrix2& m, int res) {
  double best = -std::numeric_limits<double>::infinity();
  ForEachLatticePoint(m.rows(), res, [&](const std::vector<double>& x) {
    double worst = std::numeric_limits<double>::infinity();
    for (std::size_t c = 0; c < m.cols(); ++c) {
      double s = 0.0;
      for (std::size_t r = 0; r < m.rows(); ++r) s += x[r] * m(r, c);
      worst = std::min(worst, s);
    }
    best = std::max(best, worst);
  });
  return best;
}

// Column player's minimax value on a simplex lattice, an upper bound on the
// matrix game value.
inline double LatticeMatrixUpper(const PayoffMatrix2& m, int res) {
  double best = std::numeric_limits<double>::infinity();
  ForEachLatticePoint(m.cols(), res, [&](const std::vector<double>& y) {
    double worst = -std::numeric_limits<double>::infinity();
    for (std::size_t r = 0; r < m.rows(); ++r) {
      double s = 0.0;
      for (std::size_t c = 0; c < m.cols(); ++c) s += y[c] * m(r, c);
      worst = std::max(worst, s);
    }
    best = std::min(best, worst);
  });
  return best;
}

}  // namespace coalition::testing

#endif  // COALITION_TESTS_ORACLES_H_
