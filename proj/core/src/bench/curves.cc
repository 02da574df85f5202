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


#include "planar/bench/curves.h"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>

#include "planar/common/error.h"

namespace planar {
namespace {

std::string Format(double x) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.17g", x);
  return buf;
}

std::vector<std::string> SplitCsvLine(const std::string& line) {
  std::vector<std::string> out;
  std::string field;
  std::istringstream in(line);
  while (std::getline(in, field, ',')) out.push_back(field);
  if (!line.empty() && line.back() == ',') out.emplace_back();
  return out;
}

template <typename T>
T ParseNumber(const std::string& text, int line, int column) {
  std::istringstream in(text);
  T value{};
  in >> value;
  if (!in || !in.eof()) {
    throw ParseError("bad number '" + text + "'", line, column);
  }
  return value;
}

const char* kPalette[] = {"#1f77b4", "#d62728", "#2ca02c", "#9467bd",
                          "#ff7f0e", "#8c564b", "#e377c2", "#17becf"};

std::string Escape(const std::string& s) {
  std::string out;
  for (char c : s) {
    switch (c) {
      case '<':
        out += "&lt;";
        break;
      case '>':
        out += "&gt;";
        break;
      case '&':
        out += "&amp;";
        break;
      case '"':
        out += "&quot;";
        break;
      default:
        out += c;
    }
  }
  return out;
}

}  // namespace

void WriteCsv(std::ostream& out, const std::vector<CurveRow>& rows) {
  out << kCsvHeader << '\n';
  for (const CurveRow& r : rows) {
    out << r.domain << ',' << r.task << ',' << r.agent << ',' << r.seed << ','
        << r.env_steps << ',' << Format(r.mean_return) << ','
        << Format(r.wallclock_s) << '\n';
  }
}

std::vector<CurveRow> ReadCsv(std::istream& in) {
  std::string line;
  if (!std::getline(in, line) || line != kCsvHeader) {
    throw ParseError("expected header '" + std::string(kCsvHeader) + "'", 1, 1);
  }
  std::vector<CurveRow> rows;
  int number = 1;
  while (std::getline(in, line)) {
    ++number;
    if (line.empty()) continue;
    const std::vector<std::string> f = SplitCsvLine(line);
    if (f.size() != 7) {
      throw ParseError("expected 7 fields, got " + std::to_string(f.size()),
                       number, 1);
    }
    CurveRow r;
    r.domain = f[0];
    r.task = f[1];
    r.agent = f[2];
    r.seed = ParseNumber<std::uint64_t>(f[3], number, 4);
    r.env_steps = ParseNumber<std::int64_t>(f[4], number, 5);
    r.mean_return = ParseNumber<double>(f[5], number, 6);
    r.wallclock_s = ParseNumber<double>(f[6], number, 7);
    rows.push_back(std::move(r));
  }
  return rows;
}

void WriteCsvFile(const std::string& path, const std::vector<CurveRow>& rows) {
  std::ofstream out(path);
  if (!out) throw ConfigError("cannot write '" + path + "'");
  WriteCsv(out, rows);
}

std::vector<CurveRow> ReadCsvFile(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot read '" + path + "'");
  return ReadCsv(in);
}

double StepInterpolate(const Curve& curve, double x) {
  if (curve.steps.empty()) throw ContractError("empty curve");
  auto it = std::upper_bound(curve.steps.begin(), curve.steps.end(), x);
  if (it == curve.steps.begin()) return curve.values.front();
  return curve.values[std::distance(curve.steps.begin(), it) - 1];
}

Curve Resample(const Curve& curve, const std::vector<double>& steps) {
  Curve out;
  out.steps = steps;
  for (double x : steps) out.values.push_back(StepInterpolate(curve, x));
  return out;
}

std::vector<double> UnionSteps(const std::vector<Curve>& curves) {
  std::vector<double> steps;
  for (const Curve& c : curves) {
    steps.insert(steps.end(), c.steps.begin(), c.steps.end());
  }
  std::sort(steps.begin(), steps.end());
  steps.erase(std::unique(steps.begin(), steps.end()), steps.end());
  return steps;
}

double Percentile(std::vector<double> values, double p) {
  if (values.empty()) throw ContractError("percentile of nothing");
  if (p < 0.0 || p > 100.0) throw ContractError("percentile outside [0, 100]");
  std::sort(values.begin(), values.end());
  const double rank = p / 100.0 * static_cast<double>(values.size() - 1);
  const std::size_t lo = static_cast<std::size_t>(std::floor(rank));
  const std::size_t hi = std::min(lo + 1, values.size() - 1);
  return values[lo] + (rank - static_cast<double>(lo)) * (values[hi] - values[lo]);
}

Band PercentileBand(const std::vector<Curve>& seeds, double low, double high) {
  if (seeds.empty()) throw ContractError("no curves");
  Band band;
  band.steps = UnionSteps(seeds);
  for (double x : band.steps) {
    std::vector<double> at;
    for (const Curve& c : seeds) at.push_back(StepInterpolate(c, x));
    band.low.push_back(Percentile(at, low));
    band.median.push_back(Percentile(at, 50.0));
    band.high.push_back(Percentile(at, high));
  }
  return band;
}

CurveSet GroupCurves(const std::vector<CurveRow>& rows) {
  std::map<std::string, std::map<std::uint64_t, std::vector<const CurveRow*>>>
      grouped;
  for (const CurveRow& r : rows) {
    grouped[r.domain + ":" + r.task][r.seed].push_back(&r);
  }
  CurveSet out;
  for (auto& [task, seeds] : grouped) {
    for (auto& [seed, list] : seeds) {
      std::stable_sort(list.begin(), list.end(),
                       [](const CurveRow* a, const CurveRow* b) {
                         return a->env_steps < b->env_steps;
                       });
      Curve& c = out[task][seed];
      for (const CurveRow* r : list) {
        const double x = static_cast<double>(r->env_steps);
        if (!c.steps.empty() && c.steps.back() == x) {
          throw ContractError("duplicate env_steps in " + task);
        }
        c.steps.push_back(x);
        c.values.push_back(r->mean_return);
      }
    }
  }
  return out;
}

Curve Aggregate(const CurveSet& curves) {
  if (curves.empty()) throw ContractError("nothing to aggregate");
  std::vector<Curve> medians;
  for (const auto& [task, seeds] : curves) {
    std::vector<Curve> list;
    for (const auto& [seed, c] : seeds) list.push_back(c);
    if (list.empty()) throw ContractError("task without curves: " + task);
    const Band band = PercentileBand(list);
    medians.push_back({band.steps, band.median});
  }
  Curve out;
  out.steps = UnionSteps(medians);
  for (double x : out.steps) {
    double sum = 0.0;
    for (const Curve& m : medians) sum += StepInterpolate(m, x);
    out.values.push_back(sum / static_cast<double>(medians.size()));
  }
  return out;
}

void WriteSvg(std::ostream& out, const std::vector<PlotSeries>& series,
              const PlotOptions& o) {
  const double left = 60, right = 20, top = 30, bottom = 45;
  const double pw = o.width - left - right;
  const double ph = o.height - top - bottom;
  double x_min = 0.0, x_max = 1.0;
  bool any = false;
  for (const PlotSeries& s : series) {
    for (double x : s.band.steps) {
      x_min = any ? std::min(x_min, x) : x;
      x_max = any ? std::max(x_max, x) : x;
      any = true;
    }
  }
  if (x_max <= x_min) x_max = x_min + 1.0;
  const double y_span = o.y_max > o.y_min ? o.y_max - o.y_min : 1.0;
  auto px = [&](double x) { return left + (x - x_min) / (x_max - x_min) * pw; };
  auto py = [&](double y) {
    y = std::clamp(y, o.y_min, o.y_min + y_span);
    return top + ph - (y - o.y_min) / y_span * ph;
  };
  auto num = [](double v) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.2f", v);
    return std::string(buf);
  };

  out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << o.width
      << "\" height=\"" << o.height << "\" font-family=\"sans-serif\" "
      << "font-size=\"12\">\n";
  out << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
  out << "<text x=\"" << o.width / 2 << "\" y=\"18\" text-anchor=\"middle\">"
      << Escape(o.title) << "</text>\n";
  // axes and ticks
  out << "<g stroke=\"#444\" fill=\"none\">\n";
  out << "<line x1=\"" << left << "\" y1=\"" << top + ph << "\" x2=\""
      << left + pw << "\" y2=\"" << top + ph << "\"/>\n";
  out << "<line x1=\"" << left << "\" y1=\"" << top << "\" x2=\"" << left
      << "\" y2=\"" << top + ph << "\"/>\n";
  out << "</g>\n";
  for (int i = 0; i <= 4; ++i) {
    const double y = o.y_min + y_span * i / 4.0;
    const double x = x_min + (x_max - x_min) * i / 4.0;
    out << "<text x=\"" << left - 6 << "\" y=\"" << num(py(y) + 4)
        << "\" text-anchor=\"end\">" << num(y) << "</text>\n";
    char label[32];
    std::snprintf(label, sizeof(label), "%.3g", x);
    out << "<text x=\"" << num(px(x)) << "\" y=\"" << top + ph + 16
        << "\" text-anchor=\"middle\">" << label << "</text>\n";
  }
  out << "<text x=\"" << left + pw / 2 << "\" y=\"" << o.height - 8
      << "\" text-anchor=\"middle\">" << Escape(o.x_label) << "</text>\n";
  out << "<text transform=\"translate(14," << top + ph / 2
      << ") rotate(-90)\" text-anchor=\"middle\">" << Escape(o.y_label)
      << "</text>\n";

  for (std::size_t k = 0; k < series.size(); ++k) {
    const PlotSeries& s = series[k];
    const char* color = kPalette[k % std::size(kPalette)];
    const Band& b = s.band;
    if (b.steps.empty()) continue;
    out << "<polygon fill=\"" << color << "\" fill-opacity=\"0.2\" "
        << "stroke=\"none\" points=\"";
    for (std::size_t i = 0; i < b.steps.size(); ++i) {
      out << num(px(b.steps[i])) << ',' << num(py(b.high[i])) << ' ';
    }
    for (std::size_t i = b.steps.size(); i-- > 0;) {
      out << num(px(b.steps[i])) << ',' << num(py(b.low[i])) << ' ';
    }
    out << "\"/>\n";
    out << "<polyline fill=\"none\" stroke=\"" << color
        << "\" stroke-width=\"2\" points=\"";
    for (std::size_t i = 0; i < b.steps.size(); ++i) {
      out << num(px(b.steps[i])) << ',' << num(py(b.median[i])) << ' ';
    }
    out << "\"/>\n";
    out << "<text x=\"" << left + 8 << "\" y=\"" << top + 14 + 14 * k
        << "\" fill=\"" << color << "\">" << Escape(s.label) << "</text>\n";
  }
  out << "</svg>\n";
}

}  // namespace planar
