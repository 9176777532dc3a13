// Copyright 2026 The Markeval Authors. All Rights Reserved.
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

#include "markeval/report.h"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <string>

#include "markeval/error.h"

namespace markeval {
namespace {

using nlohmann::ordered_json;

ordered_json number(double v) {
  if (!std::isfinite(v)) return nullptr;
  return v;
}

std::string format_number(double v) {
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

ordered_json counts_json(const EstimatorCounts& counts) {
  ordered_json j = ordered_json::object();
  if (const auto* p = std::get_if<PetersenCounts>(&counts)) {
    j["marked"] = p->marked;
    j["captured"] = p->captured;
    j["recaptured"] = p->recaptured;
  } else if (const auto* s = std::get_if<SchnabelCounts>(&counts)) {
    j["total_marked"] = s->total_marked;
    j["total_captured"] = s->total_captured;
    j["total_recaptured"] = s->total_recaptured;
    j["initially_marked"] = s->initially_marked;
    j["iterations"] = s->trace.size();
  } else if (const auto* c = std::get_if<CaptureCounts>(&counts)) {
    j["occasions"] = c->occasions;
    j["unique_marked"] = c->unique_marked;
    j["total_captures"] = c->total_captures;
  }
  return j;
}

}  // namespace

ReportFormat parse_report_format(std::string_view name) {
  if (name == "json") return ReportFormat::kJson;
  if (name == "csv") return ReportFormat::kCsv;
  throw Error(ErrorCode::kInvalidArgument,
              "unknown format '" + std::string(name) + "' (expected json or csv)");
}

ordered_json to_json(const Estimate& e) {
  ordered_json j;
  j["estimator"] = std::string(estimator_name(e.estimator));
  j["true_population"] = e.true_population;
  j["estimated_population"] = number(e.estimated_population);
  j["accuracy_loss"] = e.accuracy_loss;
  j["score"] = e.score;
  j["counts"] = counts_json(e.counts);
  if (e.capture_search) {
    j["search"] = {{"upper_bound", e.capture_search->upper_bound},
                   {"boundary_hit", e.capture_search->boundary_hit},
                   {"log_likelihood", number(e.capture_search->log_likelihood)}};
  }
  return j;
}

ordered_json to_json(const PrecisionRecall& pr) {
  ordered_json j;
  j["precision"] = pr.precision;
  j["recall"] = pr.recall;
  return j;
}

Report make_report(const ExperimentReport& experiment) {
  Report r;
  r.config["experiment"] = experiment.name;
  for (const auto& [key, value] : experiment.config) r.config[key] = number(value);
  r.config["seeds"] = experiment.seeds;

  r.results["axis_label"] = experiment.axis_label;
  r.results["axis"] = ordered_json::array();
  for (double a : experiment.axis) r.results["axis"].push_back(number(a));
  ordered_json series = ordered_json::object();
  for (const auto& [name, values] : experiment.series) {
    ordered_json arr = ordered_json::array();
    for (double v : values) arr.push_back(number(v));
    series[name] = std::move(arr);
  }
  r.results["series"] = std::move(series);

  for (std::size_t a = 0; a < experiment.axis.size(); ++a) {
    for (const auto& [name, values] : experiment.series) {
      r.rows.push_back({format_number(experiment.axis[a]), name, values[a]});
    }
  }
  return r;
}

Report make_report(const Estimate& estimate) {
  Report r;
  const std::string name(estimator_name(estimate.estimator));
  r.config["estimator"] = name;
  r.results[name] = to_json(estimate);
  r.rows.push_back({"", name, estimate.score});
  return r;
}

Report make_report(const PrecisionRecall& pr) {
  Report r;
  r.results["impar"] = to_json(pr);
  r.rows.push_back({"", "impar_precision", pr.precision});
  r.rows.push_back({"", "impar_recall", pr.recall});
  return r;
}

std::string render(const Report& report, ReportFormat format) {
  if (format == ReportFormat::kJson) {
    ordered_json doc;
    doc["tool_version"] = std::string(kToolVersion);
    doc["config"] = report.config;
    doc["results"] = report.results;
    return doc.dump(2) + "\n";
  }
  std::string out = "axis,metric,value\n";
  for (const auto& row : report.rows) {
    out += row.axis + "," + row.metric + "," + format_number(row.value) + "\n";
  }
  return out;
}

void write_report(const Report& report, const std::filesystem::path& path,
                  ReportFormat format) {
  std::ofstream out(path, std::ios::binary);
  if (!out) {
    throw Error(ErrorCode::kIoError, "cannot open '" + path.string() + "' for writing");
  }
  out << render(report, format);
  if (!out) throw Error(ErrorCode::kIoError, "failed writing '" + path.string() + "'");
}

void write_report(const ExperimentReport& report,
                  const std::filesystem::path& path, ReportFormat format) {
  write_report(make_report(report), path, format);
}

void write_report(const Estimate& estimate, const std::filesystem::path& path,
                  ReportFormat format) {
  write_report(make_report(estimate), path, format);
}

void write_report(const PrecisionRecall& pr, const std::filesystem::path& path,
                  ReportFormat format) {
  write_report(make_report(pr), path, format);
}

}  // namespace markeval
