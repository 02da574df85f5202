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


#ifndef PLANAR_BENCH_CURVES_H_
#define PLANAR_BENCH_CURVES_H_

#include <cstdint>
#include <iosfwd>
#include <map>
#include <string>
#include <vector>

#include "planar/bench/harness.h"

namespace planar {

inline constexpr const char* kCsvHeader =
    "domain,task,agent,seed,env_steps,mean_return,wallclock_s";

// Returns are written with 17 significant digits so a reload is exact.
void WriteCsv(std::ostream& out, const std::vector<CurveRow>& rows);
std::vector<CurveRow> ReadCsv(std::istream& in);  // throws ParseError
void WriteCsvFile(const std::string& path, const std::vector<CurveRow>& rows);
std::vector<CurveRow> ReadCsvFile(const std::string& path);

// Abscissa must be strictly increasing.
struct Curve {
  std::vector<double> steps;
  std::vector<double> values;
};

// Zero-order hold: the value of the last point at or before x (the first
// value before the curve starts).
double StepInterpolate(const Curve& curve, double x);
Curve Resample(const Curve& curve, const std::vector<double>& steps);

// Sorted union of all abscissae.
std::vector<double> UnionSteps(const std::vector<Curve>& curves);

// Linear-interpolated percentile of unsorted values, p in [0, 100].
double Percentile(std::vector<double> values, double p);

struct Band {
  std::vector<double> steps;
  std::vector<double> low;     // 5th percentile
  std::vector<double> median;  // 50th
  std::vector<double> high;    // 95th
};

// Percentile band across seeds on the union abscissa.
Band PercentileBand(const std::vector<Curve>& seeds, double low = 5.0,
                    double high = 95.0);

// Rows grouped as task -> seed -> curve (sorted by env_steps).
using CurveSet = std::map<std::string, std::map<std::uint64_t, Curve>>;
CurveSet GroupCurves(const std::vector<CurveRow>& rows);

// Pointwise mean over tasks of each task's median across seeds. Throws
// ContractError on empty input.
Curve Aggregate(const CurveSet& curves);

struct PlotSeries {
  std::string label;
  Band band;
};

struct PlotOptions {
  std::string title;
  std::string x_label = "environment steps";
  std::string y_label = "return";
  double y_min = 0.0;
  double y_max = 1000.0;
  int width = 640;
  int height = 400;
};

// Line chart of medians with shaded percentile bands.
void WriteSvg(std::ostream& out, const std::vector<PlotSeries>& series,
              const PlotOptions& options);

}  // namespace planar

#endif  // PLANAR_BENCH_CURVES_H_
