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

// Command-line front end: runs scenario files through the core library
// and writes reports. Exit codes: 0 success, 2 validation error,
// 3 resource budget exceeded.

#include <CLI11.hpp>
#include <cstdio>
#include <filesystem>
#include <optional>
#include <string>

#include "qagi/error.hpp"
#include "qagi/scenario.hpp"
#include "qagi/version.hpp"

namespace fs = std::filesystem;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitValidation = 2;
constexpr int kExitResource = 3;

struct CommonOptions {
  std::string scenario;
  std::optional<std::uint64_t> seed;
  std::optional<unsigned> steps;
  std::string out_dir = "out";
  std::string format = "json";
  bool no_emit = false;
};

void add_common_flags(CLI::App* cmd, CommonOptions& opts, bool scenario_required) {
  auto* scenario_opt = cmd->add_option("--scenario", opts.scenario, "Scenario JSON file");
  if (scenario_required) scenario_opt->required();
  cmd->add_option("--seed", opts.seed, "Seed override (u64)");
  cmd->add_option("--steps", opts.steps, "Step-count override for interaction scenarios");
  cmd->add_option("--out", opts.out_dir, "Output directory (default: out)");
  cmd->add_option("--format", opts.format, "Report format: json or csv")
      ->check(CLI::IsMember({"json", "csv"}));
  cmd->add_flag("--no-emit", opts.no_emit, "Run without writing report files");
}

int run_and_report(const CommonOptions& opts) {
  const qagi::Report report =
      qagi::run_scenario(opts.scenario, opts.seed, opts.steps);
  std::printf("scenario %s (%s), seed %llu\n", report.scenario_id.c_str(),
              report.kind.c_str(), static_cast<unsigned long long>(report.seed));
  std::printf("verdict: %s\n", report.verdict.dump().c_str());
  if (!report.records.empty())
    std::printf("records: %zu steps\n", report.records.size());
  if (!opts.no_emit) {
    const auto format =
        opts.format == "csv" ? qagi::ReportFormat::csv : qagi::ReportFormat::json;
    for (const auto& path : qagi::emit_report(report, opts.out_dir, format))
      std::printf("wrote %s\n", path.string().c_str());
  }
  return kExitOk;
}

std::string default_scenario(const char* name) {
  return (fs::path(QAGI_DATA_DIR) / "scenarios" / name).string();
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"qagi_lab: desk-scale classical/quantum agent-environment simulations"};
  app.require_subcommand(0, 1);

  bool show_version = false;
  app.add_flag("--version", show_version, "Print tool and schema versions");

  CommonOptions run_opts;
  auto* run_cmd = app.add_subcommand("run", "Run any scenario file");
  add_common_flags(run_cmd, run_opts, true);

  // Checker shortcuts: like `run`, but with a shipped default scenario.
  CommonOptions chsh_opts;
  chsh_opts.scenario = default_scenario("chsh_singlet.json");
  auto* chsh_cmd = app.add_subcommand("chsh", "CHSH quantum value and LHV bound");
  add_common_flags(chsh_cmd, chsh_opts, false);

  CommonOptions ks_opts;
  ks_opts.scenario = default_scenario("ks_d4.json");
  auto* ks_cmd = app.add_subcommand("ks", "Kochen-Specker assignment search");
  add_common_flags(ks_cmd, ks_opts, false);

  CommonOptions noclone_opts;
  noclone_opts.scenario = default_scenario("noclone_zero_plus.json");
  auto* noclone_cmd =
      app.add_subcommand("noclone", "No-cloning feasibility and best approximate cloner");
  add_common_flags(noclone_cmd, noclone_opts, false);

  CommonOptions aixi_opts;
  aixi_opts.scenario = default_scenario("cagi_bandit.json");
  auto* aixi_cmd = app.add_subcommand("aixi", "Micro-AIXI interaction episode");
  add_common_flags(aixi_cmd, aixi_opts, false);

  std::string validate_path;
  auto* validate_cmd = app.add_subcommand("validate", "Validate a scenario file");
  validate_cmd->add_option("--scenario", validate_path, "Scenario JSON file")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitValidation;
  }

  if (show_version) {
    std::printf("qagi_lab %s (report schema %s)\n", qagi::kToolVersion,
                qagi::kSchemaVersion);
    return kExitOk;
  }

  try {
    if (validate_cmd->parsed()) {
      qagi::validate_scenario_file(validate_path);
      std::printf("%s: OK\n", validate_path.c_str());
      return kExitOk;
    }
    if (run_cmd->parsed()) return run_and_report(run_opts);
    if (chsh_cmd->parsed()) return run_and_report(chsh_opts);
    if (ks_cmd->parsed()) return run_and_report(ks_opts);
    if (noclone_cmd->parsed()) return run_and_report(noclone_opts);
    if (aixi_cmd->parsed()) return run_and_report(aixi_opts);
    std::printf("%s\n", app.help().c_str());
    return kExitOk;
  } catch (const qagi::ResourceError& e) {
    std::fprintf(stderr, "resource error: %s\n", e.what());
    return kExitResource;
  } catch (const qagi::Error& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return kExitValidation;
  } catch (const std::exception& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return kExitValidation;
  }
}
