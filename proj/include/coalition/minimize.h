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

// Bound-constrained minimization over products of simplices and boxes.

#ifndef COALITION_MINIMIZE_H_
#define COALITION_MINIMIZE_H_

#include <cstddef>
#include <functional>
#include <span>
#include <string>
#include <vector>

namespace coalition {

// Evaluates f(x); fills grad (same length as x) when it is non-empty.
using ObjectiveFn = std::function<double(std::span<const double> x, std::span<double> grad)>;

enum class BlockKind { kSimplex, kBox };

struct Block {
  std::size_t offset = 0;
  std::size_t size = 0;
  BlockKind kind = BlockKind::kSimplex;
};

// Cartesian product of blocks; a box block is [0, 1]^size.
class Domain {
 public:
  Domain() = default;
  explicit Domain(std::vector<Block> blocks);

  static Domain Simplices(std::size_t n, std::size_t count);
  static Domain UnitBox(std::size_t n);

  std::size_t dim() const { return dim_; }
  const std::vector<Block>& blocks() const { return blocks_; }

  void Project(std::span<double> x) const;
  // Removes the components normal to the affine hull of every simplex block.
  void ProjectTangent(std::span<double> v) const;

 private:
  std::vector<Block> blocks_;
  std::size_t dim_ = 0;
};

enum class Method { kProjectedGradient, kQuasiNewton };
enum class Termination { kConverged, kMaxIter, kLineSearchFailure };

std::string ToString(Method method);
std::string ToString(Termination termination);

struct MinimizeOptions {
  Method method = Method::kQuasiNewton;
  std::size_t max_iter = 2000;
  double grad_tol = 1e-9;  // on ||x - P(x - grad)||_inf
  double armijo_c = 1e-4;
  int max_halvings = 50;
};

struct MinimizeResult {
  std::vector<double> x;
  double value = 0.0;
  Termination termination = Termination::kMaxIter;
  std::size_t iterations = 0;
  std::size_t evaluations = 0;
};

// Projected gradient with Armijo backtracking, or a projected BFGS variant
// that falls back to a gradient step whenever its direction fails.
MinimizeResult Minimize(const ObjectiveFn& f, const Domain& domain,
                        std::vector<double> x0, const MinimizeOptions& options);

}  // namespace coalition

#endif  // COALITION_MINIMIZE_H_
