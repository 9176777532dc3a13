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

#ifndef MARKEVAL_REPORT_H_
#define MARKEVAL_REPORT_H_

#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"
#include "markeval/baselines.h"
#include "markeval/estimators.h"
#include "markeval/experiments.h"

namespace markeval {

inline constexpr std::string_view kToolVersion = "0.1.0";

enum class ReportFormat { kJson, kCsv };

ReportFormat parse_report_format(std::string_view name);

// One flattened CSV line: axis point (empty for single-point reports),
// metric name and value.
struct CsvRow {
  std::string axis;
  std::string metric;
  double value = 0.0;
};

// Serializable document. JSON renders as
//   {"tool_version": ..., "config": {...}, "results": {...}}
// and CSV as "axis,metric,value" rows. Non-finite numbers (an infinite
// population estimate) render as JSON null and CSV "inf".
struct Report {
  nlohmann::ordered_json config = nlohmann::ordered_json::object();
  nlohmann::ordered_json results = nlohmann::ordered_json::object();
  std::vector<CsvRow> rows;
};

nlohmann::ordered_json to_json(const Estimate& estimate);
nlohmann::ordered_json to_json(const PrecisionRecall& pr);

Report make_report(const ExperimentReport& experiment);
Report make_report(const Estimate& estimate);
Report make_report(const PrecisionRecall& pr);

std::string render(const Report& report, ReportFormat format);

// Writes render(report, format) to path. Throws IoError.
void write_report(const Report& report, const std::filesystem::path& path,
                  ReportFormat format);
void write_report(const ExperimentReport& report,
                  const std::filesystem::path& path, ReportFormat format);
void write_report(const Estimate& estimate, const std::filesystem::path& path,
                  ReportFormat format);
void write_report(const PrecisionRecall& pr, const std::filesystem::path& path,
                  ReportFormat format);

}  // namespace markeval

#endif  // MARKEVAL_REPORT_H_
