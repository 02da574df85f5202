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


#include "planar/bench/config.h"

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <functional>
#include <istream>
#include <map>
#include <ostream>
#include <set>
#include <sstream>

#include "planar/common/error.h"

namespace planar {
namespace {

constexpr int kConfigVersion = 1;

std::string Trim(const std::string& s) {
  const auto begin = s.find_first_not_of(" \t\r");
  if (begin == std::string::npos) return "";
  const auto end = s.find_last_not_of(" \t\r");
  return s.substr(begin, end - begin + 1);
}

std::vector<std::string> Split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::string item;
  std::istringstream in(s);
  while (std::getline(in, item, sep)) {
    item = Trim(item);
    if (!item.empty()) out.push_back(item);
  }
  return out;
}

struct Reader {
  int line = 0;

  [[noreturn]] void Fail(const std::string& message) const {
    throw ParseError(message, line, 1);
  }

  template <typename T>
  T Number(const std::string& text) const {
    std::istringstream in(text);
    T value{};
    in >> value;
    if (!in || !in.eof()) Fail("bad number '" + text + "'");
    return value;
  }

  bool Bool(const std::string& text) const {
    if (text == "true" || text == "1") return true;
    if (text == "false" || text == "0") return false;
    Fail("expected true or false, got '" + text + "'");
  }

  std::vector<int> Ints(const std::string& text) const {
    std::vector<int> out;
    for (const std::string& s : Split(text, ',')) out.push_back(Number<int>(s));
    return out;
  }

  std::vector<TaskId> Tasks(const std::string& text) const {
    if (text == "benchmarking") return BenchmarkingTasks();
    if (text == "extra") return ExtraTasks();
    if (text == "all") return AllTasks();
    std::vector<TaskId> out;
    for (const std::string& item : Split(text, ',')) {
      const auto colon = item.find(':');
      if (colon == std::string::npos) Fail("expected domain:task, got " + item);
      TaskId id{item.substr(0, colon), item.substr(colon + 1)};
      if (std::find(AllTasks().begin(), AllTasks().end(), id) ==
          AllTasks().end()) {
        Fail("unknown task " + item);
      }
      out.push_back(std::move(id));
    }
    return out;
  }

  std::vector<std::uint64_t> Seeds(const std::string& text) const {
    std::vector<std::uint64_t> out;
    for (const std::string& item : Split(text, ',')) {
      const auto dash = item.find('-');
      if (dash == std::string::npos) {
        out.push_back(Number<std::uint64_t>(item));
        continue;
      }
      const auto lo = Number<std::uint64_t>(Trim(item.substr(0, dash)));
      const auto hi = Number<std::uint64_t>(Trim(item.substr(dash + 1)));
      if (hi < lo) Fail("empty seed range " + item);
      for (std::uint64_t s = lo; s <= hi; ++s) out.push_back(s);
    }
    return out;
  }
};

std::string JoinInts(const std::vector<int>& v) {
  std::string out;
  for (std::size_t i = 0; i < v.size(); ++i) {
    out += (i ? "," : "") + std::to_string(v[i]);
  }
  return out;
}

std::string Real(double x) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.17g", x);
  return buf;
}

}  // namespace

BenchmarkFile ParseBenchmarkConfig(std::istream& in) {
  BenchmarkFile file;
  BenchmarkConfig& c = file.config;
  DdpgConfig& d = c.ddpg;
  Reader r;
  using Setter = std::function<void(const std::string&)>;
  const std::map<std::string, Setter> setters = {
      {"tasks", [&](const std::string& v) { c.tasks = r.Tasks(v); }},
      {"agent", [&](const std::string& v) { c.agent = v; }},
      {"seeds", [&](const std::string& v) { c.seeds = r.Seeds(v); }},
      {"total_steps",
       [&](const std::string& v) { c.total_steps = r.Number<std::int64_t>(v); }},
      {"eval_every",
       [&](const std::string& v) { c.eval_every = r.Number<std::int64_t>(v); }},
      {"eval_episodes",
       [&](const std::string& v) { c.eval_episodes = r.Number<int>(v); }},
      {"wallclock",
       [&](const std::string& v) { c.record_wallclock = r.Bool(v); }},
      {"stop_return",
       [&](const std::string& v) { c.stop_return = r.Number<double>(v); }},
      {"csv", [&](const std::string& v) { file.csv = v; }},
      {"svg", [&](const std::string& v) { file.svg = v; }},
      {"ddpg.actor_hidden",
       [&](const std::string& v) { d.actor_hidden = r.Ints(v); }},
      {"ddpg.critic_hidden",
       [&](const std::string& v) { d.critic_hidden = r.Ints(v); }},
      {"ddpg.actor_learning_rate",
       [&](const std::string& v) { d.actor_learning_rate = r.Number<double>(v); }},
      {"ddpg.critic_learning_rate",
       [&](const std::string& v) { d.critic_learning_rate = r.Number<double>(v); }},
      {"ddpg.discount",
       [&](const std::string& v) { d.discount = r.Number<double>(v); }},
      {"ddpg.tau", [&](const std::string& v) { d.tau = r.Number<double>(v); }},
      {"ddpg.batch_size",
       [&](const std::string& v) { d.batch_size = r.Number<int>(v); }},
      {"ddpg.replay_capacity",
       [&](const std::string& v) { d.replay_capacity = r.Number<int>(v); }},
      {"ddpg.min_replay_size",
       [&](const std::string& v) { d.min_replay_size = r.Number<int>(v); }},
      {"ddpg.updates_per_step",
       [&](const std::string& v) { d.updates_per_step = r.Number<int>(v); }},
      {"ddpg.actor_grad_clip",
       [&](const std::string& v) { d.actor_grad_clip = r.Number<double>(v); }},
      {"ddpg.final_layer_init",
       [&](const std::string& v) { d.final_layer_init = r.Number<double>(v); }},
      {"ddpg.noise_theta",
       [&](const std::string& v) { d.noise.theta = r.Number<double>(v); }},
      {"ddpg.noise_sigma",
       [&](const std::string& v) { d.noise.sigma = r.Number<double>(v); }},
      {"ddpg.noise_dt",
       [&](const std::string& v) { d.noise.dt = r.Number<double>(v); }},
  };

  std::set<std::string> seen;
  bool versioned = false;
  std::string raw;
  while (std::getline(in, raw)) {
    ++r.line;
    const auto hash = raw.find('#');
    const std::string line = Trim(raw.substr(0, hash));
    if (line.empty()) continue;
    const auto eq = line.find('=');
    if (eq == std::string::npos) r.Fail("expected key = value");
    const std::string key = Trim(line.substr(0, eq));
    const std::string value = Trim(line.substr(eq + 1));
    if (!seen.insert(key).second) r.Fail("repeated key '" + key + "'");
    if (key == "version") {
      if (r.Number<int>(value) != kConfigVersion) {
        r.Fail("unsupported config version " + value);
      }
      versioned = true;
      continue;
    }
    if (!versioned) r.Fail("the first key must be version");
    const auto it = setters.find(key);
    if (it == setters.end()) r.Fail("unknown key '" + key + "'");
    it->second(value);
  }
  if (!versioned) throw ConfigError("config has no version");
  c.Validate();
  c.ddpg.Validate();
  return file;
}

BenchmarkFile LoadBenchmarkConfig(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot read '" + path + "'");
  return ParseBenchmarkConfig(in);
}

void WriteBenchmarkConfig(std::ostream& out, const BenchmarkFile& file) {
  const BenchmarkConfig& c = file.config;
  const DdpgConfig& d = c.ddpg;
  out << "version = " << kConfigVersion << '\n';
  out << "tasks = ";
  for (std::size_t i = 0; i < c.tasks.size(); ++i) {
    out << (i ? "," : "") << c.tasks[i].ToString();
  }
  out << '\n';
  out << "agent = " << c.agent << '\n';
  out << "seeds = ";
  for (std::size_t i = 0; i < c.seeds.size(); ++i) {
    out << (i ? "," : "") << c.seeds[i];
  }
  out << '\n';
  out << "total_steps = " << c.total_steps << '\n';
  out << "eval_every = " << c.eval_every << '\n';
  out << "eval_episodes = " << c.eval_episodes << '\n';
  out << "wallclock = " << (c.record_wallclock ? "true" : "false") << '\n';
  if (c.stop_return) out << "stop_return = " << Real(*c.stop_return) << '\n';
  if (!file.csv.empty()) out << "csv = " << file.csv << '\n';
  if (!file.svg.empty()) out << "svg = " << file.svg << '\n';
  out << "ddpg.actor_hidden = " << JoinInts(d.actor_hidden) << '\n';
  out << "ddpg.critic_hidden = " << JoinInts(d.critic_hidden) << '\n';
  out << "ddpg.actor_learning_rate = " << Real(d.actor_learning_rate) << '\n';
  out << "ddpg.critic_learning_rate = " << Real(d.critic_learning_rate) << '\n';
  out << "ddpg.discount = " << Real(d.discount) << '\n';
  out << "ddpg.tau = " << Real(d.tau) << '\n';
  out << "ddpg.batch_size = " << d.batch_size << '\n';
  out << "ddpg.replay_capacity = " << d.replay_capacity << '\n';
  out << "ddpg.min_replay_size = " << d.min_replay_size << '\n';
  out << "ddpg.updates_per_step = " << d.updates_per_step << '\n';
  out << "ddpg.actor_grad_clip = " << Real(d.actor_grad_clip) << '\n';
  out << "ddpg.final_layer_init = " << Real(d.final_layer_init) << '\n';
  out << "ddpg.noise_theta = " << Real(d.noise.theta) << '\n';
  out << "ddpg.noise_sigma = " << Real(d.noise.sigma) << '\n';
  out << "ddpg.noise_dt = " << Real(d.noise.dt) << '\n';
}

}  // namespace planar
