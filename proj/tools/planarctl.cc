// Copyright 2026 The Planar Control Authors
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


// planarctl: list tasks, run agents, benchmark, render frames, solve LQR.

#include <cstdio>
#include <exception>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "planar/agents/agent.h"
#include "planar/bench/config.h"
#include "planar/bench/curves.h"
#include "planar/bench/harness.h"
#include "planar/common/error.h"
#include "planar/common/random.h"
#include "planar/domains/suite.h"
#include "planar/lqr/lqr_solver.h"
#include "planar/render/rasterizer.h"

namespace {

using namespace planar;

int List() {
  std::cout << std::left << std::setw(28) << "task" << std::setw(14) << "set"
            << "dims (state, action, observation)\n";
  for (const TaskId& id : AllTasks()) {
    const auto env = Load(id.domain, id.task, 0);
    const TaskDims d = Dimensions(*env);
    std::cout << std::setw(28) << id.ToString() << std::setw(14)
              << (IsBenchmarking(id) ? "benchmarking" : "extra") << '('
              << d.state << ", " << d.action << ", " << d.observation << ")\n";
  }
  return 0;
}

struct RunArgs {
  std::string domain;
  std::string task;
  std::string agent = "random";
  std::uint64_t seed = 0;
  int episodes = 1;
  std::int64_t train_steps = 0;
  std::string csv;
};

int Run(const RunArgs& a) {
  auto env = Load(a.domain, a.task, DeriveSeed(a.seed, 1));
  auto agent = MakeAgent(a.agent, *env, DeriveSeed(a.seed, 2));
  if (a.train_steps > 0) {
    if (!agent->learns()) {
      throw ConfigError("agent '" + a.agent + "' does not train");
    }
    auto train_env = Load(a.domain, a.task, DeriveSeed(a.seed, 0));
    std::int64_t steps = 0;
    while (steps < a.train_steps) {
      EpisodeOptions opts;
      opts.explore = true;
      opts.train = true;
      opts.max_steps = static_cast<int>(std::min<std::int64_t>(
          a.train_steps - steps, env->options().episode_length));
      steps += RunEpisode(*train_env, *agent, opts).steps;
    }
  }
  std::vector<CurveRow> rows;
  std::int64_t steps = 0;
  for (int e = 0; e < a.episodes; ++e) {
    const EpisodeResult r = RunEpisode(*env, *agent);
    steps += r.steps;
    std::printf("episode %d return %.6f steps %d wallclock %.3fs\n", e,
                r.episode_return, r.steps, r.wallclock_s);
    rows.push_back({a.domain, a.task, a.agent, a.seed, steps,
                    r.episode_return, r.wallclock_s});
  }
  if (!a.csv.empty()) WriteCsvFile(a.csv, rows);
  return 0;
}

int Bench(const std::string& config_path, std::string csv, std::string svg) {
  BenchmarkFile file = LoadBenchmarkConfig(config_path);
  if (csv.empty()) csv = file.csv;
  if (svg.empty()) svg = file.svg;
  const std::vector<CurveRow> rows =
      RunBenchmark(file.config, [](const CurveRow& r) {
        std::printf("%s:%s seed %llu steps %lld return %.3f\n",
                    r.domain.c_str(), r.task.c_str(),
                    static_cast<unsigned long long>(r.seed),
                    static_cast<long long>(r.env_steps), r.mean_return);
        std::fflush(stdout);
      });
  if (!csv.empty()) WriteCsvFile(csv, rows);
  const CurveSet curves = GroupCurves(rows);
  const Curve mean = Aggregate(curves);
  std::printf("aggregate (mean over tasks of median over seeds):\n");
  for (std::size_t i = 0; i < mean.steps.size(); ++i) {
    std::printf("  %.0f %.3f\n", mean.steps[i], mean.values[i]);
  }
  if (!svg.empty()) {
    std::vector<PlotSeries> series;
    for (const auto& [task, seeds] : curves) {
      std::vector<Curve> list;
      for (const auto& [seed, c] : seeds) list.push_back(c);
      series.push_back({task, PercentileBand(list)});
    }
    std::ofstream out(svg);
    if (!out) throw ConfigError("cannot write '" + svg + "'");
    PlotOptions options;
    options.title = file.config.agent;
    WriteSvg(out, series, options);
  }
  return 0;
}

struct RenderArgs {
  std::string domain;
  std::string task;
  std::string out = "frame";
  std::uint64_t seed = 0;
  int frames = 1;
  int width = 84;
  int height = 84;
  int camera = 0;
  bool tint = false;
};

int Render(const RenderArgs& a) {
  auto env = Load(a.domain, a.task, a.seed);
  RandomAgent agent(env->action_spec(), DeriveSeed(a.seed, 2));
  TimeStep step = env->Reset();
  for (int f = 0; f < a.frames; ++f) {
    if (f > 0) step = env->Step(agent.Sample());
    RenderOptions options;
    options.width = a.width;
    options.height = a.height;
    options.camera = a.camera;
    if (a.tint) options.reward_tint = env->last_reward().value_or(0.0);
    char suffix[32];
    std::snprintf(suffix, sizeof(suffix), "_%04d.ppm", f);
    const std::string path = a.out + suffix;
    WritePpm(RenderFrame(env->physics(), options), path);
    std::cout << path << '\n';
    if (step.last()) break;
  }
  return 0;
}

void PrintMatrix(const char* name, const Eigen::MatrixXd& m) {
  const Eigen::IOFormat fmt(Eigen::FullPrecision, 0, " ", "\n", "  ");
  std::cout << name << " (" << m.rows() << "x" << m.cols() << ")\n"
            << m.format(fmt) << '\n';
}

int LqrSolve(const std::string& domain, const std::string& task, double tol) {
  auto env = Load(domain, task, 0);
  const LinearSystem sys =
      LqrTaskSystem(env->physics().model(), env->options().n_sub_steps);
  const RiccatiSolution sol = SolveDare(sys, tol);
  PrintMatrix("A", sys.A);
  PrintMatrix("B", sys.B);
  PrintMatrix("P", sol.P);
  PrintMatrix("K", sol.K);
  std::cout << std::setprecision(6) << "iterations " << sol.iterations
            << "\nresidual " << sol.residual << "\nspectral_radius "
            << ClosedLoopSpectralRadius(sys, sol.K) << '\n';
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"planar control suite tool"};
  app.require_subcommand(1);

  app.add_subcommand("list", "list tasks and their dimensions");

  RunArgs run;
  CLI::App* run_cmd = app.add_subcommand("run", "run evaluation episodes");
  run_cmd->add_option("--domain", run.domain)->required();
  run_cmd->add_option("--task", run.task)->required();
  run_cmd->add_option("--agent", run.agent, "random, lqr or ddpg")
      ->check(CLI::IsMember({"random", "lqr", "ddpg"}));
  run_cmd->add_option("--seed", run.seed);
  run_cmd->add_option("--episodes", run.episodes)->check(CLI::PositiveNumber);
  run_cmd->add_option("--train-steps", run.train_steps,
                      "environment steps of training before evaluation");
  run_cmd->add_option("--csv", run.csv, "write one row per episode");

  std::string config_path, bench_csv, bench_svg;
  CLI::App* bench_cmd = app.add_subcommand("bench", "run a benchmark config");
  bench_cmd->add_option("--config", config_path)->required()->check(
      CLI::ExistingFile);
  bench_cmd->add_option("--csv", bench_csv, "overrides the config");
  bench_cmd->add_option("--svg", bench_svg, "overrides the config");

  RenderArgs render;
  CLI::App* render_cmd =
      app.add_subcommand("render", "write PPM frames of a random rollout");
  render_cmd->add_option("--domain", render.domain)->required();
  render_cmd->add_option("--task", render.task)->required();
  render_cmd->add_option("--out", render.out, "file prefix");
  render_cmd->add_option("--seed", render.seed);
  render_cmd->add_option("--frames", render.frames)->check(CLI::PositiveNumber);
  render_cmd->add_option("--width", render.width)->check(CLI::PositiveNumber);
  render_cmd->add_option("--height", render.height)->check(CLI::PositiveNumber);
  render_cmd->add_option("--camera", render.camera);
  render_cmd->add_flag("--tint", render.tint, "tint geoms by reward");

  CLI::App* lqr_cmd = app.add_subcommand("lqr", "LQR utilities");
  lqr_cmd->require_subcommand(1);
  std::string lqr_domain = "lqr", lqr_task = "lqr_2_1";
  double lqr_tol = 1e-12;
  CLI::App* solve_cmd = lqr_cmd->add_subcommand("solve", "print P, K, residual");
  solve_cmd->add_option("--domain", lqr_domain);
  solve_cmd->add_option("--task", lqr_task);
  solve_cmd->add_option("--tol", lqr_tol);

  CLI11_PARSE(app, argc, argv);

  try {
    if (app.got_subcommand("list")) return List();
    if (run_cmd->parsed()) return Run(run);
    if (bench_cmd->parsed()) return Bench(config_path, bench_csv, bench_svg);
    if (render_cmd->parsed()) return Render(render);
    if (solve_cmd->parsed()) return LqrSolve(lqr_domain, lqr_task, lqr_tol);
  } catch (const std::exception& e) {
    std::cerr << "planarctl: " << e.what() << '\n';
    return 1;
  }
  return 0;
}
