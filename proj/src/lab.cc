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

#include "coalition/lab.h"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cmath>
#include <exception>
#include <map>
#include <mutex>
#include <sstream>
#include <stdexcept>
#include <thread>

#include "coalition/fictitious.h"

namespace coalition {
namespace {

std::string Str(double v) {
  std::ostringstream out;
  out.precision(17);
  out << v;
  return out.str();
}

double Seconds(std::chrono::steady_clock::time_point since) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - since).count();
}

void AddSolveDiagnostics(const std::string& prefix, const SolveOutcome& out,
                         std::vector<std::pair<std::string, std::string>>* diag) {
  std::size_t iterations = 0;
  for (const RestartLog& r : out.log) iterations += r.iterations;
  diag->emplace_back(prefix + ".termination", ToString(out.termination));
  diag->emplace_back(prefix + ".restarts", std::to_string(out.restarts_used));
  diag->emplace_back(prefix + ".best_restart", std::to_string(out.best_restart));
  diag->emplace_back(prefix + ".iterations", std::to_string(iterations));
  diag->emplace_back(prefix + ".smoothed_value", Str(out.log[out.best_restart].smoothed_value));
}

}  // namespace

GapSample MakeGapSample(std::size_t trial, std::uint64_t seed, double v_sync, double v_async) {
  GapSample s;
  s.trial = trial;
  s.game_seed = seed;
  s.v_sync = v_sync;
  s.v_async = v_async;
  s.gap = v_async - v_sync;
  if (std::abs(v_sync) >= kThetaDegenerate) s.theta = v_async / v_sync;
  return s;
}

SummaryStats Summarize(const std::vector<double>& values) {
  SummaryStats s;
  s.count = values.size();
  if (values.empty()) return s;
  double sum = 0.0;
  for (double v : values) sum += v;
  s.mean = sum / static_cast<double>(values.size());
  if (values.size() > 1) {
    double ss = 0.0;
    for (double v : values) ss += (v - s.mean) * (v - s.mean);
    s.stddev = std::sqrt(ss / static_cast<double>(values.size() - 1));
  }
  return s;
}

double Correlation(const std::vector<double>& a, const std::vector<double>& b) {
  if (a.size() != b.size()) throw DimensionError("Correlation: length mismatch");
  if (a.size() < 2) return 0.0;
  const double ma = Summarize(a).mean, mb = Summarize(b).mean;
  double sab = 0.0, saa = 0.0, sbb = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    sab += (a[i] - ma) * (b[i] - mb);
    saa += (a[i] - ma) * (a[i] - ma);
    sbb += (b[i] - mb) * (b[i] - mb);
  }
  if (saa == 0.0 || sbb == 0.0) return 0.0;
  return sab / std::sqrt(saa * sbb);
}

std::vector<HistogramBin> Histogram(const std::vector<double>& values, double width) {
  if (!(width > 0.0)) throw std::invalid_argument("Histogram: width must be > 0");
  std::vector<HistogramBin> bins;
  if (values.empty()) return bins;
  std::map<long long, std::size_t> counts;
  for (double v : values) ++counts[static_cast<long long>(std::floor(v / width))];
  const long long first = counts.begin()->first, last = counts.rbegin()->first;
  for (long long b = first; b <= last; ++b) {
    const auto it = counts.find(b);
    bins.push_back({b * width, (b + 1) * width, it == counts.end() ? 0 : it->second});
  }
  return bins;
}

void CampaignConfig::Validate() const {
  if (trials < 1) throw std::invalid_argument("CampaignConfig: trials must be >= 1");
  if (n < 2) throw std::invalid_argument("CampaignConfig: n must be >= 2");
  sync_solver.Validate();
  async_solver.Validate();
}

void ParallelFor(std::size_t count, std::size_t threads,
                 const std::function<void(std::size_t)>& job) {
  if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());
  threads = std::min(threads, count);
  if (threads <= 1) {
    for (std::size_t i = 0; i < count; ++i) job(i);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::exception_ptr error;
  std::mutex error_mutex;
  std::vector<std::thread> pool;
  for (std::size_t t = 0; t < threads; ++t) {
    pool.emplace_back([&] {
      for (std::size_t i = next++; i < count; i = next++) {
        try {
          job(i);
        } catch (...) {
          std::lock_guard<std::mutex> lock(error_mutex);
          if (!error) error = std::current_exception();
        }
      }
    });
  }
  for (std::thread& th : pool) th.join();
  if (error) std::rethrow_exception(error);
}

CampaignResult RunGapCampaign(const CampaignConfig& config) {
  config.Validate();
  std::vector<std::optional<GapSample>> slots(config.trials);
  ParallelFor(config.trials, config.threads, [&](std::size_t t) {
    const std::uint64_t seed = config.master_seed + t;
    try {
      const PayoffTensor3 p = RandomSymmetricTensor(config.n, seed, config.range);
      const double vs = SolveMaximin(p, config.sync_solver).value;
      const double va = SolveMinimax(p, config.async_solver).value;
      slots[t] = MakeGapSample(t, seed, vs, va);
    } catch (const std::exception&) {
      slots[t].reset();
    }
  });

  CampaignResult result;
  std::vector<double> gaps, thetas, vsyncs;
  for (std::size_t t = 0; t < slots.size(); ++t) {
    if (!slots[t]) {
      result.failed_trials.push_back(t);
      continue;
    }
    const GapSample& s = *slots[t];
    result.samples.push_back(s);
    gaps.push_back(s.gap);
    vsyncs.push_back(s.v_sync);
    if (s.theta) {
      thetas.push_back(*s.theta);
    } else {
      ++result.theta_undefined;
    }
  }
  result.gap = Summarize(gaps);
  result.theta = Summarize(thetas);
  result.correlation_gap_vsync = Correlation(gaps, vsyncs);
  result.gap_histogram = Histogram(gaps, config.gap_bin);
  result.theta_histogram = Histogram(thetas, config.theta_bin);
  return result;
}

double RoundSig3(double seconds) {
  if (seconds == 0.0 || !std::isfinite(seconds)) return seconds;
  const double scale = std::pow(10.0, 2 - std::floor(std::log10(std::abs(seconds))));
  return std::round(seconds * scale) / scale;
}

std::vector<ValueGapRow> ValueGapBenchmark(std::size_t n,
                                           const std::vector<ValueGapMethod>& methods,
                                           std::size_t trials, std::uint64_t seed) {
  if (n < 1) throw std::invalid_argument("ValueGapBenchmark: n must be >= 1");
  std::vector<ValueGapRow> rows;
  for (std::size_t t = 0; t < trials; ++t) {
    const PayoffMatrix2 m = RandomMatrix(n, n, seed + t);
    const PayoffMatrix2 mt = NegativeTranspose(m);
    for (const ValueGapMethod& method : methods) {
      const auto start = std::chrono::steady_clock::now();
      const double v = SolveMatrixMaximin(m, method.config).value;
      const double w = SolveMatrixMaximin(mt, method.config).value;
      rows.push_back({method.name, t, v, std::abs(v + w), RoundSig3(Seconds(start))});
    }
  }
  return rows;
}

ValueReport SolveGame(const PayoffTensor3& p, const SolveGameOptions& options) {
  ValueReport report;
  if (options.want_nash) {
    if (!p.symmetric_zero_sum()) {
      throw std::invalid_argument("SolveGame: Nash value requested for a tensor not flagged "
                                  "symmetric zero-sum");
    }
    const SymmetryReport sym = ValidateSymmetry(p, 1e-9);
    if (!sym.pass) {
      throw std::invalid_argument("SolveGame: tensor flagged symmetric zero-sum violates the "
                                  "symmetry rules by " + Str(sym.max_violation));
    }
    report.v_nash = 0.0;
  }
  if (options.want_sync) {
    const auto start = std::chrono::steady_clock::now();
    const SolveOutcome out = SolveMaximin(p, options.sync_config);
    report.v_sync = out.value;
    report.x_opt = out.strategies[0];
    AddSolveDiagnostics("sync", out, &report.diagnostics);
    report.diagnostics.emplace_back("sync.wall_time", Str(RoundSig3(Seconds(start))));
    if (options.fp_iterations > 0) {
      const FpTrace fp = SyncFp(p, options.fp_iterations, options.sync_config.rng_seed);
      const std::size_t n = p.n();
      for (std::size_t jk = 0; jk < n * n; ++jk) {
        const double w = fp.empirical[1][jk];
        if (w >= 1e-3) report.sync_coalition.push_back({jk / n, jk % n, w});
      }
      report.diagnostics.emplace_back("sync_fp.value_estimate", Str(fp.value_estimate));
      report.diagnostics.emplace_back("sync_fp.lower", Str(fp.lower));
      report.diagnostics.emplace_back("sync_fp.upper", Str(fp.upper));
      report.diagnostics.emplace_back("sync_fp.iterations", std::to_string(fp.iterations));
    }
  }
  if (options.want_async) {
    const auto start = std::chrono::steady_clock::now();
    const SolveOutcome out = SolveMinimax(p, options.async_config);
    report.v_async = out.value;
    report.y_opt = out.strategies[0];
    report.z_opt = out.strategies[1];
    AddSolveDiagnostics("async", out, &report.diagnostics);
    report.diagnostics.emplace_back("async.wall_time", Str(RoundSig3(Seconds(start))));
  }
  return report;
}

}  // namespace coalition
