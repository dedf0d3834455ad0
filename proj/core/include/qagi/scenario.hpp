// Copyright 2026 The qagi-lab authors
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

#pragma once

#include <filesystem>
#include <optional>

#include "qagi/jvalue.hpp"

namespace qagi {

/// Scenario kinds accepted by the runner. A scenario file is a JSON
/// object {"kind": ..., "id": ..., "seed": ..., ...} whose remaining
/// fields depend on the kind; asset references (states, channels,
/// environment classes, agents, ray systems) may be inline JSON or a
/// string path relative to the scenario file.
extern const char* const kScenarioKinds[11];

/// A finished run: verdicts for checker scenarios, per-step records for
/// interaction scenarios. Re-running with the same inputs and seed
/// reproduces the records byte-for-byte; wall_seconds is the only
/// non-reproducible field and lives outside the trace.
struct Report {
  std::string scenario_id;
  std::string kind;
  std::uint64_t seed = 0;
  std::string digest;          // FNV-1a of the scenario file bytes
  std::string tool_version;
  std::string schema_version;
  JValue verdict = JValue::object();
  std::vector<JValue> records;
  double wall_seconds = 0.0;
};

enum class ReportFormat { json, csv };

/// Loads, validates and executes a scenario file. The seed is resolved
/// as: explicit override, then the scenario's "seed" field, then the
/// QAGI_LAB_SEED environment variable, then 0. The steps override
/// replaces the scenario's "steps" field when present.
Report run_scenario(const std::filesystem::path& scenario_path,
                    std::optional<std::uint64_t> seed_override = std::nullopt,
                    std::optional<unsigned> steps_override = std::nullopt);

/// Validation only (the `validate` subcommand): throws ValidationError
/// on any schema violation, including unknown kinds.
void validate_scenario_file(const std::filesystem::path& scenario_path);

/// Serializations used by the emitter and the tests.
JValue report_to_jvalue(const Report& report);
std::string trace_jsonl(const Report& report);
std::string trace_csv(const Report& report);

/// Writes <out>/<scenario-id>/report.json, plus trace.jsonl when the
/// report has records and trace.csv when format is csv. Returns the
/// written paths.
std::vector<std::filesystem::path> emit_report(const Report& report,
                                               const std::filesystem::path& out_dir,
                                               ReportFormat format);

}  // namespace qagi
