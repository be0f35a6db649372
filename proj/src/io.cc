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

#include "coalition/io.h"

#include <cstdio>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>

namespace coalition {
namespace {

std::string Format17(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

double ParseDouble(const std::string& field, const std::string& what) {
  std::size_t used = 0;
  double v = 0.0;
  try {
    v = std::stod(field, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used == 0 || used != field.size()) {
    throw std::invalid_argument("bad " + what + " field: '" + field + "'");
  }
  return v;
}

std::uint64_t ParseUnsigned(const std::string& field, const std::string& what) {
  std::size_t used = 0;
  unsigned long long v = 0;
  try {
    v = std::stoull(field, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used == 0 || used != field.size()) {
    throw std::invalid_argument("bad " + what + " field: '" + field + "'");
  }
  return v;
}

Json Optional(const std::optional<double>& v) { return v ? Json(*v) : Json(nullptr); }

Json PairsToJson(const std::vector<MinimizerPair>& pairs) {
  Json out = Json::array();
  for (const MinimizerPair& m : pairs) {
    out.push_back({{"y", StrategyToJson(m.y)}, {"z", StrategyToJson(m.z)}, {"value", m.value}});
  }
  return out;
}

}  // namespace

Json TensorToJson(const PayoffTensor3& p) {
  return {{"n", p.n()},
          {"entries", std::vector<double>(p.entries().begin(), p.entries().end())},
          {"symmetric_zero_sum", p.symmetric_zero_sum()}};
}

PayoffTensor3 TensorFromJson(const Json& j) {
  if (!j.is_object() || !j.contains("n") || !j.contains("entries")) {
    throw std::invalid_argument("tensor JSON needs \"n\" and \"entries\"");
  }
  if (!j["n"].is_number_unsigned() || j["n"].get<std::size_t>() < 1) {
    throw std::invalid_argument("tensor JSON: \"n\" must be a positive integer");
  }
  const std::size_t n = j["n"].get<std::size_t>();
  if (!j["entries"].is_array()) throw std::invalid_argument("tensor JSON: entries not an array");
  std::vector<double> entries;
  for (const Json& e : j["entries"]) {
    if (!e.is_number()) throw std::invalid_argument("tensor JSON: non-numeric entry");
    entries.push_back(e.get<double>());
  }
  if (entries.size() != n * n * n) {
    throw DimensionError("tensor JSON: expected " + std::to_string(n * n * n) + " entries, got " +
                         std::to_string(entries.size()));
  }
  bool sym = false;
  if (j.contains("symmetric_zero_sum")) {
    if (!j["symmetric_zero_sum"].is_boolean()) {
      throw std::invalid_argument("tensor JSON: symmetric_zero_sum must be a boolean");
    }
    sym = j["symmetric_zero_sum"].get<bool>();
  }
  PayoffTensor3 p(n, std::move(entries), sym);
  if (sym && !ValidateSymmetry(p, 1e-9).pass) {
    throw std::invalid_argument("tensor JSON: flagged symmetric_zero_sum but fails the symmetry check");
  }
  return p;
}

PayoffTensor3 ReadTensorFile(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  Json j;
  try {
    in >> j;
  } catch (const Json::parse_error& e) {
    throw std::invalid_argument(path + ": " + e.what());
  }
  return TensorFromJson(j);
}

void WriteTensorFile(const std::string& path, const PayoffTensor3& p) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write " + path);
  out << TensorToJson(p).dump() << "\n";
}

Json StrategyToJson(const StrategySimplex& s) { return s.vector(); }

StrategySimplex StrategyFromJson(const Json& j) {
  if (!j.is_array()) throw std::invalid_argument("strategy JSON must be an array");
  return StrategySimplex(j.get<std::vector<double>>());
}

Json ReportToJson(const ValueReport& report) {
  Json strategies = Json::object();
  if (report.x_opt) strategies["x"] = StrategyToJson(*report.x_opt);
  if (report.y_opt) strategies["y"] = StrategyToJson(*report.y_opt);
  if (report.z_opt) strategies["z"] = StrategyToJson(*report.z_opt);
  if (!report.sync_coalition.empty()) {
    Json pairs = Json::array();
    for (const PairWeight& w : report.sync_coalition) {
      pairs.push_back({{"j", w.j}, {"k", w.k}, {"weight", w.weight}});
    }
    strategies["sync_coalition"] = pairs;
  }
  Json diagnostics = Json::object();
  for (const auto& [key, value] : report.diagnostics) diagnostics[key] = value;
  return {{"v_nash", Optional(report.v_nash)},
          {"v_sync", Optional(report.v_sync)},
          {"v_async", Optional(report.v_async)},
          {"strategies", strategies},
          {"diagnostics", diagnostics}};
}

Json SolutionToJson(const BenchmarkSolution& s) {
  return {{"v_nash", s.v_nash},
          {"v_sync", s.v_sync},
          {"v_async", s.v_async},
          {"strategies",
           {{"global_minimizers", PairsToJson(s.global_minimizers)},
            {"local_minimizers", PairsToJson(s.local_minimizers)}}},
          {"diagnostics", {{"notes", s.notes}}}};
}

Json BenchmarkToJson(const BenchmarkGame& game) {
  Json j = SolutionToJson(game.solution);
  j["game"] = game.name;
  j["tensor"] = TensorToJson(game.tensor);
  return j;
}

Json OutcomeToJson(const SolveOutcome& outcome) {
  Json strategies = Json::array();
  for (const StrategySimplex& s : outcome.strategies) strategies.push_back(StrategyToJson(s));
  Json log = Json::array();
  for (const RestartLog& r : outcome.log) {
    log.push_back({{"restart", r.restart},
                   {"seed", r.seed},
                   {"value", r.value},
                   {"smoothed_value", r.smoothed_value},
                   {"termination", ToString(r.termination)},
                   {"iterations", r.iterations},
                   {"rescues", r.rescues}});
  }
  return {{"value", outcome.value},
          {"strategies", strategies},
          {"termination", ToString(outcome.termination)},
          {"restarts_used", outcome.restarts_used},
          {"best_restart", outcome.best_restart},
          {"log", log}};
}

Json FpTraceToJson(const FpTrace& trace) {
  Json empirical = Json::array();
  for (const StrategySimplex& s : trace.empirical) empirical.push_back(StrategyToJson(s));
  return {{"iterations", trace.iterations},
          {"empirical", empirical},
          {"value_estimate", trace.value_estimate},
          {"converged_gap", trace.converged_gap},
          {"lower", trace.lower},
          {"upper", trace.upper}};
}

Json CampaignToJson(const CampaignResult& r) {
  auto stats = [](const SummaryStats& s) {
    return Json{{"count", s.count}, {"mean", s.mean}, {"std", s.stddev}};
  };
  auto hist = [](const std::vector<HistogramBin>& bins) {
    Json out = Json::array();
    for (const HistogramBin& b : bins) {
      out.push_back({{"bin_lo", b.lo}, {"bin_hi", b.hi}, {"count", b.count}});
    }
    return out;
  };
  Json samples = Json::array();
  for (const GapSample& s : r.samples) {
    samples.push_back({{"trial", s.trial},
                       {"seed", s.game_seed},
                       {"v_sync", s.v_sync},
                       {"v_async", s.v_async},
                       {"gap", s.gap},
                       {"theta", Optional(s.theta)}});
  }
  return {{"gap", stats(r.gap)},
          {"theta", stats(r.theta)},
          {"theta_undefined", r.theta_undefined},
          {"failed_trials", r.failed_trials},
          {"correlation_gap_vsync", r.correlation_gap_vsync},
          {"gap_histogram", hist(r.gap_histogram)},
          {"theta_histogram", hist(r.theta_histogram)},
          {"samples", samples}};
}

Json SolverConfigToJson(const SolverConfig& c) {
  return {{"smoothing", c.smoothing.ToString()},
          {"constraints", ToString(c.constraints)},
          {"penalty_k", c.penalty_k},
          {"penalty_exponent", c.penalty_exponent},
          {"method", ToString(c.method)},
          {"max_iter", c.max_iter},
          {"grad_tol", c.grad_tol},
          {"restarts", c.restarts},
          {"rng_seed", c.rng_seed},
          {"continuation", c.continuation},
          {"continuation_start", c.continuation_start},
          {"adaptive_smoothing", c.adaptive_smoothing},
          {"epsilon_max", c.epsilon_max}};
}

SolverConfig SolverConfigFromJson(const Json& j, SolverConfig c) {
  if (!j.is_object()) throw std::invalid_argument("solver config must be a JSON object");
  try {
    for (const auto& [key, value] : j.items()) {
      if (key == "smoothing") {
        c.smoothing = SmoothingSpec::Parse(value.get<std::string>());
      } else if (key == "constraints") {
        const std::string m = value.get<std::string>();
        if (m != "hard" && m != "soft") throw std::invalid_argument("constraints: " + m);
        c.constraints = m == "hard" ? ConstraintMode::kHard : ConstraintMode::kSoft;
      } else if (key == "penalty_k") {
        c.penalty_k = value.get<double>();
      } else if (key == "penalty_exponent") {
        c.penalty_exponent = value.get<double>();
      } else if (key == "method") {
        const std::string m = value.get<std::string>();
        if (m != "projected-gradient" && m != "quasi-newton") {
          throw std::invalid_argument("method: " + m);
        }
        c.method = m == "quasi-newton" ? Method::kQuasiNewton : Method::kProjectedGradient;
      } else if (key == "max_iter") {
        c.max_iter = value.get<std::size_t>();
      } else if (key == "grad_tol") {
        c.grad_tol = value.get<double>();
      } else if (key == "restarts") {
        c.restarts = value.get<std::size_t>();
      } else if (key == "rng_seed") {
        c.rng_seed = value.get<std::uint64_t>();
      } else if (key == "continuation") {
        c.continuation = value.get<bool>();
      } else if (key == "continuation_start") {
        c.continuation_start = value.get<double>();
      } else if (key == "adaptive_smoothing") {
        c.adaptive_smoothing = value.get<bool>();
      } else if (key == "epsilon_max") {
        c.epsilon_max = value.get<double>();
      } else {
        throw std::invalid_argument("unknown solver config key: " + key);
      }
    }
  } catch (const Json::type_error& e) {
    throw std::invalid_argument(std::string("solver config: ") + e.what());
  }
  c.Validate();
  return c;
}

void WriteSamplesCsv(std::ostream& out, const std::vector<GapSample>& samples) {
  out << kSamplesCsvVersion << "\n";
  out << "trial,seed,v_sync,v_async,gap,theta\n";
  for (const GapSample& s : samples) {
    out << s.trial << "," << s.game_seed << "," << Format17(s.v_sync) << ","
        << Format17(s.v_async) << "," << Format17(s.gap) << ","
        << (s.theta ? Format17(*s.theta) : std::string("null")) << "\n";
  }
}

std::vector<GapSample> ReadSamplesCsv(std::istream& in) {
  std::string line;
  if (!std::getline(in, line) || line != kSamplesCsvVersion) {
    throw std::invalid_argument("samples CSV: missing or unsupported version line");
  }
  if (!std::getline(in, line) || line != "trial,seed,v_sync,v_async,gap,theta") {
    throw std::invalid_argument("samples CSV: unexpected column header");
  }
  std::vector<GapSample> samples;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    std::vector<std::string> f;
    std::stringstream row(line);
    std::string field;
    while (std::getline(row, field, ',')) f.push_back(field);
    if (f.size() != 6) throw std::invalid_argument("samples CSV: expected 6 fields: " + line);
    GapSample s;
    s.trial = ParseUnsigned(f[0], "trial");
    s.game_seed = ParseUnsigned(f[1], "seed");
    s.v_sync = ParseDouble(f[2], "v_sync");
    s.v_async = ParseDouble(f[3], "v_async");
    s.gap = ParseDouble(f[4], "gap");
    if (f[5] != "null") s.theta = ParseDouble(f[5], "theta");
    samples.push_back(s);
  }
  return samples;
}

void WriteHistogramCsv(std::ostream& out, const std::vector<HistogramBin>& bins) {
  out << "bin_lo,bin_hi,count\n";
  for (const HistogramBin& b : bins) {
    out << Format17(b.lo) << "," << Format17(b.hi) << "," << b.count << "\n";
  }
}

void WriteValueGapCsv(std::ostream& out, const std::vector<ValueGapRow>& rows) {
  out << "method,trial,value,value_gap,wall_time\n";
  for (const ValueGapRow& r : rows) {
    out << r.method << "," << r.trial << "," << Format17(r.value) << ","
        << Format17(r.value_gap) << "," << r.wall_time << "\n";
  }
}

}  // namespace coalition
