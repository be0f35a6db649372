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

// Command-line front end: coalition_lab <solve|bench|guts|fp|campaign> ...

#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include "CLI11.hpp"
#include "coalition/benchmarks.h"
#include "coalition/fictitious.h"
#include "coalition/guts.h"
#include "coalition/io.h"
#include "coalition/lab.h"
#include "coalition/solvers.h"

namespace {

using coalition::Json;

struct SolverFlags {
  std::string smoothing;
  std::string constraints;
  std::string method;
  std::optional<std::size_t> restarts;
  std::optional<std::uint64_t> seed;
  std::optional<std::size_t> max_iter;
  bool adaptive = false;

  void Register(CLI::App* app) {
    app->add_option("--smoothing", smoothing, "none | lp:P | softmax:EPS");
    app->add_option("--constraints", constraints, "hard | soft")
        ->check(CLI::IsMember({"hard", "soft"}));
    app->add_option("--method", method, "quasi-newton | projected-gradient")
        ->check(CLI::IsMember({"quasi-newton", "projected-gradient"}));
    app->add_option("--restarts", restarts, "multistart count");
    app->add_option("--solver-seed", seed, "base RNG seed for solver restarts");
    app->add_option("--max-iter", max_iter, "iterations per minimization pass");
    app->add_flag("--adaptive", adaptive, "re-smooth after line-search failures");
  }

  coalition::SolverConfig Apply(coalition::SolverConfig c) const {
    if (!smoothing.empty()) c.smoothing = coalition::SmoothingSpec::Parse(smoothing);
    if (!constraints.empty()) {
      c.constraints = constraints == "hard" ? coalition::ConstraintMode::kHard
                                            : coalition::ConstraintMode::kSoft;
    }
    if (!method.empty()) {
      c.method = method == "quasi-newton" ? coalition::Method::kQuasiNewton
                                          : coalition::Method::kProjectedGradient;
    }
    if (restarts) c.restarts = *restarts;
    if (seed) c.rng_seed = *seed;
    if (max_iter) c.max_iter = *max_iter;
    if (adaptive) c.adaptive_smoothing = true;
    c.Validate();
    return c;
  }
};

// Solver settings from the --config file: {"solver": {...}, "sync_solver":
// {...}, "async_solver": {...}}; the specific keys refine "solver".
struct ConfigFile {
  coalition::SolverConfig sync;
  coalition::SolverConfig async;

  static ConfigFile Load(const std::string& path) {
    ConfigFile cfg;
    if (path.empty()) return cfg;
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open config " + path);
    Json j;
    in >> j;
    coalition::SolverConfig base;
    if (j.contains("solver")) base = coalition::SolverConfigFromJson(j["solver"], base);
    cfg.sync = j.contains("sync_solver") ? coalition::SolverConfigFromJson(j["sync_solver"], base)
                                         : base;
    cfg.async = j.contains("async_solver")
                    ? coalition::SolverConfigFromJson(j["async_solver"], base)
                    : base;
    return cfg;
  }
};

void Emit(const Json& j, const std::string& out_path) {
  if (out_path.empty()) {
    std::cout << j.dump(2) << "\n";
    return;
  }
  std::ofstream out(out_path);
  if (!out) throw std::runtime_error("cannot write " + out_path);
  out << j.dump(2) << "\n";
}

std::string Num(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.10g", v);
  return buf;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Coalition values of symmetric three-player zero-sum games"};
  app.require_subcommand(1);
  std::string config_path;
  app.add_option("--config", config_path, "JSON file with solver settings");

  // solve
  CLI::App* solve = app.add_subcommand("solve", "V_N, V_S and V_A of a tensor file");
  std::string tensor_path, target = "both", out_path;
  bool as_json = false;
  std::size_t fp_iters = 20000;
  SolverFlags solve_flags;
  solve->add_option("--tensor", tensor_path, "tensor JSON file")->required();
  solve->add_option("--target", target, "sync | async | both")
      ->check(CLI::IsMember({"sync", "async", "both"}));
  solve->add_option("--fp-iters", fp_iters, "synchronous FP cross-check iterations (0 = off)");
  solve->add_option("--out", out_path, "write the JSON report here");
  solve->add_flag("--json", as_json, "print the JSON report");
  solve_flags.Register(solve);

  // bench
  CLI::App* bench = app.add_subcommand("bench", "closed-form benchmark games");
  std::string game, variant = "omo";
  double alpha = 1.0, alpha0 = 1.0, beta0 = 0.5;
  bench->add_option("game", game, "odds-evens | rps | 222 | recursive-toy")
      ->required()
      ->check(CLI::IsMember({"odds-evens", "rps", "222", "recursive-toy"}));
  bench->add_option("--variant", variant, "omo | omi (222: omo-like | omi-like)");
  bench->add_option("--alpha", alpha, "2x2x2 family parameter");
  bench->add_option("--alpha0", alpha0, "recursive toy payoff shift");
  bench->add_option("--beta0", beta0, "recursive toy stakes");

  // guts
  CLI::App* guts = app.add_subcommand("guts", "continuous three-player Guts");
  guts->require_subcommand(1);
  double guts_v = 0.0, recurse_tol = 1e-6;
  std::size_t max_rounds = 200, grid = 200, disc_n = 50, curve_points = 1001;
  std::string guts_out;
  CLI::App* g_value = guts->add_subcommand("value", "synchronous value T(V)");
  g_value->add_option("--v", guts_v, "continuation value V");
  CLI::App* g_mix = guts->add_subcommand("mixture", "optimal coalition mixture");
  CLI::App* g_rec = guts->add_subcommand("recurse", "fixed point of T");
  g_rec->add_option("--tol", recurse_tol, "stop when |V_{n+1} - V_n| < tol");
  g_rec->add_option("--max-rounds", max_rounds, "round limit");
  CLI::App* g_cert = guts->add_subcommand("certify", "asynchronous value certificate");
  g_cert->add_option("--grid", grid, "lattice points per axis")->check(CLI::Range(100, 100000));
  CLI::App* g_disc = guts->add_subcommand("discretize", "tensor on the grid i/n");
  g_disc->add_option("--n", disc_n, "strategies per player")->check(CLI::Range(2, 400));
  g_disc->add_option("--out", guts_out, "tensor JSON path")->required();
  CLI::App* g_curves = guts->add_subcommand("curves", "CSV p1,alpha_a,alpha_b");
  g_curves->add_option("--points", curve_points, "samples on [0, 1]")->check(CLI::Range(2, 1000000));
  g_curves->add_option("--v", guts_v, "continuation value V");
  g_curves->add_option("--out", guts_out, "CSV path (default stdout)");

  // fp
  CLI::App* fp = app.add_subcommand("fp", "fictitious play");
  std::string fp_mode = "joint", theta_text = "classical";
  std::size_t fp_iterations = 1000, fp_trials = 1;
  std::uint64_t fp_seed = 0;
  bool fp_json = false;
  fp->add_option("--tensor", tensor_path, "tensor JSON file")->required();
  fp->add_option("--mode", fp_mode, "joint | sync | 2player")
      ->check(CLI::IsMember({"joint", "sync", "2player"}));
  fp->add_option("--iters", fp_iterations, "iterations")->check(CLI::PositiveNumber);
  fp->add_option("--theta", theta_text, "classical | floor:C (joint mode)");
  fp->add_option("--seed", fp_seed, "first seed");
  fp->add_option("--trials", fp_trials, "seeds seed, seed+1, ...")->check(CLI::PositiveNumber);
  fp->add_flag("--json", fp_json, "print JSON");

  // campaign
  CLI::App* campaign = app.add_subcommand("campaign", "random-game experiments");
  campaign->require_subcommand(1);
  std::size_t camp_n = 4, camp_trials = 300, camp_threads = 0;
  std::uint64_t camp_seed = 1;
  std::string out_prefix;
  SolverFlags camp_flags;
  CLI::App* c_gap = campaign->add_subcommand("gap", "V_A - V_S and theta statistics");
  c_gap->add_option("--n", camp_n, "strategies per player")->check(CLI::Range(2, 64));
  c_gap->add_option("--trials", camp_trials, "games")->check(CLI::PositiveNumber);
  c_gap->add_option("--seed", camp_seed, "master seed");
  c_gap->add_option("--threads", camp_threads, "worker threads (0 = all cores)");
  c_gap->add_option("--out-prefix", out_prefix,
                    "write PREFIX_samples.csv, PREFIX_gap_hist.csv, PREFIX_theta_hist.csv");
  camp_flags.Register(c_gap);
  CLI::App* c_vg = campaign->add_subcommand("value-gap", "accuracy on random matrices");
  std::size_t vg_n = 8, vg_trials = 10;
  std::string vg_out;
  c_vg->add_option("--n", vg_n, "matrix size")->check(CLI::Range(1, 512));
  c_vg->add_option("--trials", vg_trials, "matrices")->check(CLI::PositiveNumber);
  c_vg->add_option("--seed", camp_seed, "first seed");
  c_vg->add_option("--out", vg_out, "CSV path (default stdout)");

  CLI11_PARSE(app, argc, argv);

  try {
    const ConfigFile cfg = ConfigFile::Load(config_path);

    if (*solve) {
      coalition::SolveGameOptions opts;
      opts.want_sync = target != "async";
      opts.want_async = target != "sync";
      const coalition::PayoffTensor3 p = coalition::ReadTensorFile(tensor_path);
      opts.want_nash = p.symmetric_zero_sum();
      opts.sync_config = solve_flags.Apply(cfg.sync);
      opts.async_config = solve_flags.Apply(cfg.async);
      opts.fp_iterations = fp_iters;
      const coalition::ValueReport report = coalition::SolveGame(p, opts);
      const Json j = coalition::ReportToJson(report);
      if (!out_path.empty()) Emit(j, out_path);
      if (as_json || out_path.empty()) {
        if (as_json) {
          std::cout << j.dump(2) << "\n";
        } else {
          auto show = [](const char* name, const std::optional<double>& v) {
            std::cout << name << " = " << (v ? Num(*v) : std::string("n/a")) << "\n";
          };
          show("V_N", report.v_nash);
          show("V_S", report.v_sync);
          show("V_A", report.v_async);
        }
      }
      return 0;
    }

    if (*bench) {
      using coalition::OddManVariant;
      if (game == "recursive-toy") {
        const auto r = coalition::RecursiveToy2x2(alpha0, beta0);
        Emit({{"v_oneshot", r.v_oneshot},
              {"regime", coalition::ToString(r.regime)},
              {"v_limit", r.diverges ? Json("inf") : Json(r.v_limit)},
              {"diverges", r.diverges}},
             "");
        return 0;
      }
      if (game == "222") {
        if (variant != "omo-like" && variant != "omi-like") {
          throw std::invalid_argument("222 variant must be omo-like or omi-like");
        }
        const auto family = variant == "omo-like" ? coalition::Family222::kOmoLike
                                                  : coalition::Family222::kOmiLike;
        Json j = coalition::SolutionToJson(coalition::Classify222(alpha, family));
        j["game"] = "222-" + variant;
        j["alpha"] = alpha;
        j["tensor"] = coalition::TensorToJson(coalition::Family222Tensor(alpha, family));
        Emit(j, "");
        return 0;
      }
      if (variant != "omo" && variant != "omi") {
        throw std::invalid_argument("variant must be omo or omi");
      }
      const OddManVariant v = variant == "omo" ? OddManVariant::kOut : OddManVariant::kIn;
      Emit(coalition::BenchmarkToJson(game == "rps" ? coalition::Rps(v) : coalition::OddsEvens(v)),
           "");
      return 0;
    }

    if (*guts) {
      if (*g_value) {
        const auto s = coalition::SyncValue(guts_v);
        Emit({{"v", guts_v}, {"value", s.value}, {"p1_opt", s.p1_opt}}, "");
      } else if (*g_mix) {
        const auto m = coalition::OptimalCoalitionMixture();
        Emit({{"p1_opt", m.p1_opt},
              {"value", m.value},
              {"atom_a", {m.p3a, m.p3a}},
              {"atom_b", {0.0, m.p3b}},
              {"y", m.y},
              {"d_alpha_a", m.d_alpha_a},
              {"d_alpha_b", m.d_alpha_b}},
             "");
      } else if (*g_rec) {
        const auto t = coalition::RecursiveFixedPoint(max_rounds, recurse_tol);
        Emit({{"values", t.values},
              {"p1_path", t.p1_path},
              {"converged", t.converged},
              {"v_star", t.v_star}},
             "");
      } else if (*g_cert) {
        const auto c = coalition::ComputeAsyncCertificate(grid);
        Emit({{"grid", grid}, {"min_of_max", c.min_of_max}, {"argmin", {c.p2, c.p3}}}, "");
      } else if (*g_disc) {
        coalition::WriteTensorFile(guts_out, coalition::DiscretizeGuts(disc_n));
      } else if (*g_curves) {
        std::ofstream file;
        if (!guts_out.empty()) {
          file.open(guts_out);
          if (!file) throw std::runtime_error("cannot write " + guts_out);
        }
        std::ostream& out = guts_out.empty() ? std::cout : file;
        out << "p1,alpha_a,alpha_b\n";
        for (std::size_t i = 0; i < curve_points; ++i) {
          const double p1 = static_cast<double>(i) / static_cast<double>(curve_points - 1);
          const auto br = coalition::BestResponse(p1, guts_v);
          out << Num(p1) << "," << Num(br.value_a) << "," << Num(br.value_b) << "\n";
        }
      }
      return 0;
    }

    if (*fp) {
      const coalition::PayoffTensor3 p = coalition::ReadTensorFile(tensor_path);
      const coalition::ThetaRule rule = coalition::ThetaRule::Parse(theta_text);
      Json runs = Json::array();
      for (std::size_t t = 0; t < fp_trials; ++t) {
        const std::uint64_t seed = fp_seed + t;
        coalition::FpTrace trace;
        if (fp_mode == "joint") {
          trace = coalition::JointFp(p, fp_iterations, rule, seed);
        } else if (fp_mode == "sync") {
          trace = coalition::SyncFp(p, fp_iterations, seed);
        } else {
          if (p.n() < 1) throw std::invalid_argument("empty tensor");
          trace = coalition::Fp2Player(coalition::CoalitionMatrix(p), fp_iterations, seed);
        }
        Json j = coalition::FpTraceToJson(trace);
        j["seed"] = seed;
        runs.push_back(j);
        if (!fp_json) {
          std::cout << "seed " << seed << ": value " << Num(trace.value_estimate) << ", player-1 "
                    << "best response " << Num(trace.upper) << ", gap "
                    << Num(trace.converged_gap) << "\n";
        }
      }
      if (fp_json) {
        Emit({{"mode", fp_mode}, {"theta", rule.ToString()}, {"runs", runs}}, "");
      }
      return 0;
    }

    if (*campaign) {
      if (*c_gap) {
        coalition::CampaignConfig cc;
        cc.n = camp_n;
        cc.trials = camp_trials;
        cc.master_seed = camp_seed;
        cc.threads = camp_threads;
        cc.sync_solver = camp_flags.Apply(cfg.sync);
        cc.async_solver = camp_flags.Apply(cfg.async);
        const coalition::CampaignResult r = coalition::RunGapCampaign(cc);
        if (!out_prefix.empty()) {
          std::ofstream samples(out_prefix + "_samples.csv");
          coalition::WriteSamplesCsv(samples, r.samples);
          std::ofstream gh(out_prefix + "_gap_hist.csv");
          coalition::WriteHistogramCsv(gh, r.gap_histogram);
          std::ofstream th(out_prefix + "_theta_hist.csv");
          coalition::WriteHistogramCsv(th, r.theta_histogram);
          if (!samples || !gh || !th) throw std::runtime_error("cannot write " + out_prefix + "_*");
        }
        Json j = coalition::CampaignToJson(r);
        j.erase("samples");
        j["n"] = camp_n;
        j["trials"] = camp_trials;
        Emit(j, "");
      } else if (*c_vg) {
        coalition::SolverConfig smoothed = cfg.sync;
        coalition::SolverConfig plain = cfg.sync;
        plain.smoothing = coalition::SmoothingSpec::None();
        const auto rows = coalition::ValueGapBenchmark(
            vg_n, {{"softmax", smoothed}, {"unsmoothed", plain}}, vg_trials, camp_seed);
        std::ofstream file;
        if (!vg_out.empty()) {
          file.open(vg_out);
          if (!file) throw std::runtime_error("cannot write " + vg_out);
        }
        coalition::WriteValueGapCsv(vg_out.empty() ? std::cout : file, rows);
      }
      return 0;
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
