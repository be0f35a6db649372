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

#ifndef COALITION_GAME_CORE_H_
#define COALITION_GAME_CORE_H_

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <random>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace coalition {

// Tolerance for structural invariants (simplex sums, tensor symmetry).
inline constexpr double kStructuralTol = 1e-12;

class DimensionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// A mixed strategy: nonnegative weights summing to one.
class StrategySimplex {
 public:
  StrategySimplex() = default;

  // Validates the invariants at kStructuralTol; throws std::invalid_argument.
  explicit StrategySimplex(std::vector<double> weights);

  static StrategySimplex Uniform(std::size_t n);
  static StrategySimplex Vertex(std::size_t n, std::size_t index);

  std::size_t size() const { return weights_.size(); }
  double operator[](std::size_t i) const { return weights_[i]; }
  std::span<const double> weights() const { return weights_; }
  const std::vector<double>& vector() const { return weights_; }

  friend bool operator==(const StrategySimplex&,
                         const StrategySimplex&) = default;

 private:
  std::vector<double> weights_;
};

// Dense N x N x N tensor of returns to player 1, entry (i, j, k) for pure
// choices i, j, k of players 1, 2, 3. Row-major storage.
class PayoffTensor3 {
 public:
  PayoffTensor3() = default;
  explicit PayoffTensor3(std::size_t n, bool symmetric_zero_sum = false);
  PayoffTensor3(std::size_t n, std::vector<double> entries,
                bool symmetric_zero_sum = false);

  std::size_t n() const { return n_; }
  bool symmetric_zero_sum() const { return symmetric_zero_sum_; }
  void set_symmetric_zero_sum(bool flag) { symmetric_zero_sum_ = flag; }

  double operator()(std::size_t i, std::size_t j, std::size_t k) const {
    return entries_[(i * n_ + j) * n_ + k];
  }
  double& operator()(std::size_t i, std::size_t j, std::size_t k) {
    return entries_[(i * n_ + j) * n_ + k];
  }
  std::span<const double> entries() const { return entries_; }

  double MinEntry() const;
  double MaxEntry() const;
  PayoffTensor3 Negated() const;

  friend bool operator==(const PayoffTensor3&, const PayoffTensor3&) = default;

 private:
  std::size_t n_ = 0;
  std::vector<double> entries_;
  bool symmetric_zero_sum_ = false;
};

// rows x cols matrix of returns to the row player, row-major.
class PayoffMatrix2 {
 public:
  PayoffMatrix2() = default;
  PayoffMatrix2(std::size_t rows, std::size_t cols);
  PayoffMatrix2(std::size_t rows, std::size_t cols, std::vector<double> entries);
  PayoffMatrix2(std::initializer_list<std::initializer_list<double>> rows);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  double operator()(std::size_t r, std::size_t c) const {
    return entries_[r * cols_ + c];
  }
  double& operator()(std::size_t r, std::size_t c) {
    return entries_[r * cols_ + c];
  }
  std::span<const double> entries() const { return entries_; }

  friend bool operator==(const PayoffMatrix2&, const PayoffMatrix2&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<double> entries_;
};

struct PureResponse {
  std::size_t index = 0;
  double value = 0.0;
};

struct PurePairResponse {
  std::size_t j = 0;
  std::size_t k = 0;
  double value = 0.0;
};

// Sum_{ijk} x_i y_j z_k P_ijk.
double ExpectedPayoff(const PayoffTensor3& p, std::span<const double> x,
                      std::span<const double> y, std::span<const double> z);
inline double ExpectedPayoff(const PayoffTensor3& p, const StrategySimplex& x,
                             const StrategySimplex& y,
                             const StrategySimplex& z) {
  return ExpectedPayoff(p, x.weights(), y.weights(), z.weights());
}

// Vector v_i = Sum_jk y_j z_k P_ijk of player-1 pure returns.
std::vector<double> PlayerOneReturns(const PayoffTensor3& p,
                                     std::span<const double> y,
                                     std::span<const double> z);

// Vector u_{jk} = Sum_i x_i P_ijk (row-major over (j, k)).
std::vector<double> CoalitionPairReturns(const PayoffTensor3& p,
                                         std::span<const double> x);

// argmax_i / max_i of PlayerOneReturns; ties go to the smallest index.
PureResponse BestPureResponseP1(const PayoffTensor3& p,
                                const StrategySimplex& y,
                                const StrategySimplex& z);

// argmin_{(j,k)} / min of CoalitionPairReturns; ties lexicographic.
PurePairResponse WorstPurePair(const PayoffTensor3& p,
                               const StrategySimplex& x);

struct SymmetryReport {
  bool pass = false;
  double max_violation = 0.0;
};

// Checks P_ijk = P_ikj and P_ijk + P_jik + P_kij = 0.
SymmetryReport ValidateSymmetry(const PayoffTensor3& p,
                                double tol = kStructuralTol);

struct GeneratorRange {
  double lo = -1.0;
  double hi = 1.0;
};

// Random symmetric zero-sum tensor. Free entries are drawn uniformly from
// `range` on the orbit representatives (P_jji, P_jii for i < j; P_ijk, P_jik
// for i < j < k); every other entry is filled from the symmetry rules.
PayoffTensor3 RandomSymmetricTensor(std::size_t n, std::uint64_t seed,
                                    GeneratorRange range = {});

// Random rows x cols matrix with entries uniform on `range`.
PayoffMatrix2 RandomMatrix(std::size_t rows, std::size_t cols,
                           std::uint64_t seed, GeneratorRange range = {});

PayoffMatrix2 NegativeTranspose(const PayoffMatrix2& m);

// Euclidean projection onto the probability simplex (sort and threshold).
std::vector<double> ProjectToSimplexRaw(std::span<const double> v);
StrategySimplex ProjectToSimplex(std::span<const double> v);

// Uniform sample from the simplex via normalized exponential draws.
std::vector<double> SampleSimplex(std::size_t n, std::mt19937_64& rng);

}  // namespace coalition

#endif  // COALITION_GAME_CORE_H_
