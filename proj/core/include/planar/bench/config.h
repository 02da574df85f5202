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


#ifndef PLANAR_BENCH_CONFIG_H_
#define PLANAR_BENCH_CONFIG_H_

#include <iosfwd>
#include <string>

#include "planar/bench/harness.h"

namespace planar {

// Benchmark description read from a key = value file:
//
//   version = 1              # required, first key
//   tasks = benchmarking     # or extra, all, or domain:task,domain:task
//   agent = ddpg
//   seeds = 0-4              # or 0,1,2
//   total_steps = 200000
//   eval_every = 10000
//   eval_episodes = 10
//   wallclock = false
//   stop_return = 500
//   csv = out.csv            # optional outputs
//   svg = out.svg
//   ddpg.batch_size = 64     # any DdpgConfig field, see below
//
// '#' starts a comment. Unknown keys and repeated keys are errors.
struct BenchmarkFile {
  BenchmarkConfig config;
  std::string csv;
  std::string svg;
};

// Throws ParseError (with line numbers) or ConfigError.
BenchmarkFile ParseBenchmarkConfig(std::istream& in);
BenchmarkFile LoadBenchmarkConfig(const std::string& path);
// Inverse of ParseBenchmarkConfig.
void WriteBenchmarkConfig(std::ostream& out, const BenchmarkFile& file);

}  // namespace planar

#endif  // PLANAR_BENCH_CONFIG_H_
