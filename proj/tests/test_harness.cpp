#include <doctest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <json.hpp>

#include "qagi/error.hpp"
#include "qagi/json_io.hpp"
#include "qagi/scenario.hpp"
#include "qagi/version.hpp"

using namespace qagi;
namespace fs = std::filesystem;

namespace {

const fs::path kDataDir = fs::path(QAGI_DATA_DIR);
const fs::path kScenarioDir = kDataDir / "scenarios";

fs::path temp_dir() {
  const fs::path dir = fs::temp_directory_path() / "qagi_harness_tests";
  fs::create_directories(dir);
  return dir;
}

fs::path write_temp_scenario(const std::string& name, const std::string& body) {
  const fs::path path = temp_dir() / name;
  std::ofstream out(path);
  out << body;
  return path;
}

double verdict_number(const Report& report, const std::string& key) {
  const JValue* v = report.verdict.find(key);
  REQUIRE(v != nullptr);
  return std::stod(v->dump());
}

}  // namespace

TEST_CASE("chsh scenario reproduces the Tsirelson-saturating value") {
  const Report report = run_scenario(kScenarioDir / "chsh_singlet.json");
  CHECK(report.kind == "chsh");
  CHECK(std::abs(verdict_number(report, "abs_S") - 2.0 * std::sqrt(2.0)) < 1e-9);
  CHECK(verdict_number(report, "lhv_max") == 2.0);
  CHECK(verdict_number(report, "lhv_strategies_examined") == 16.0);
}

TEST_CASE("scenario reruns with the same seed are byte-identical") {
  for (const char* name :
       {"cagi_bandit.json", "cagi_quantum_plus.json", "qagi_bell.json", "qagi_echo.json",
        "noclone_zero_plus.json"}) {
    const Report first = run_scenario(kScenarioDir / name);
    const Report second = run_scenario(kScenarioDir / name);
    CHECK(trace_jsonl(first) == trace_jsonl(second));
    CHECK(first.verdict.dump() == second.verdict.dump());
    CHECK(first.seed == second.seed);
  }
}

TEST_CASE("unknown scenario kind is a validation error naming the field") {
  const fs::path path = write_temp_scenario(
      "unknown_kind.json", R"({"kind": "unknown", "id": "x"})");
  CHECK_THROWS_WITH_AS(run_scenario(path), doctest::Contains("kind"), ValidationError);
}

TEST_CASE("wrongly typed fields are validation errors, not parser crashes") {
  const fs::path bad_seed = write_temp_scenario(
      "bad_seed.json", R"({"kind": "chsh", "id": "x", "seed": "abc"})");
  CHECK_THROWS_AS(run_scenario(bad_seed), ValidationError);

  const fs::path bad_angles = write_temp_scenario(
      "bad_angles.json", R"({"kind": "chsh", "id": "x", "angles": "wide"})");
  CHECK_THROWS_AS(run_scenario(bad_angles), ValidationError);

  CHECK_THROWS_AS(parse_state_json(R"({"rows": "two", "cols": 2, "entries": []})"),
                  ValidationError);
}

TEST_CASE("missing required fields are named in the error") {
  const fs::path no_id = write_temp_scenario("no_id.json", R"({"kind": "chsh"})");
  CHECK_THROWS_WITH_AS(run_scenario(no_id), doctest::Contains("id"), ValidationError);

  const fs::path no_steps = write_temp_scenario(
      "no_steps.json",
      R"({"kind": "qagi_quantum", "id": "x", "agent": ")" +
          (kDataDir / "agents" / "bell_agent.json").string() +
          R"(", "env_init": "zero", "policy": ["entangle"]})");
  CHECK_THROWS_WITH_AS(run_scenario(no_steps), doctest::Contains("steps"), ValidationError);
}

TEST_CASE("all shipped scenarios validate") {
  for (const auto& entry : fs::directory_iterator(kScenarioDir))
    CHECK_NOTHROW(validate_scenario_file(entry.path()));
}

TEST_CASE("emit_report writes report.json, trace.jsonl, and optionally trace.csv") {
  const fs::path out = temp_dir() / "emit";
  fs::remove_all(out);

  Report report = run_scenario(kScenarioDir / "cagi_bandit.json", std::nullopt, 5u);
  REQUIRE(report.records.size() == 5);
  const auto written = emit_report(report, out, ReportFormat::csv);
  REQUIRE(written.size() == 3);

  // CSV: header plus one row per step.
  std::ifstream csv(out / "cagi_bandit" / "trace.csv");
  std::string line;
  int lines = 0;
  std::string header;
  while (std::getline(csv, line)) {
    if (lines == 0) header = line;
    ++lines;
  }
  CHECK(lines == 6);
  CHECK(header.find("t,action,o,r,p") == 0);

  // report.json reloads to an equal structure.
  const std::string text = read_text_file(out / "cagi_bandit" / "report.json");
  const auto parsed = nlohmann::json::parse(text);
  CHECK(parsed["schema_version"] == kSchemaVersion);
  CHECK(parsed["tool_version"] == kToolVersion);
  CHECK(parsed["scenario_id"] == "cagi_bandit");
  CHECK(parsed["kind"] == "cagi_classical");
  CHECK(parsed["seed"].get<std::uint64_t>() == report.seed);
  CHECK(parsed["records"].size() == 5);
  CHECK(parsed.contains("digest"));
  CHECK(parsed.contains("verdict"));
  CHECK(parsed.contains("wall_seconds"));

  // Round trip: serialized doubles parse back to the exact values.
  const double reported = parsed["verdict"]["total_reward"].get<double>();
  CHECK(reported == verdict_number(report, "total_reward"));

  // Dump -> parse -> dump is a fixed point.
  const auto reparsed = nlohmann::json::parse(parsed.dump());
  CHECK(parsed == reparsed);
}

TEST_CASE("seed resolution: override > scenario field > environment variable") {
  const Report with_field = run_scenario(kScenarioDir / "cagi_bandit.json");
  CHECK(with_field.seed == 11);

  const Report with_override = run_scenario(kScenarioDir / "cagi_bandit.json", 99u);
  CHECK(with_override.seed == 99);

  const fs::path seedless = write_temp_scenario("seedless_chsh.json", R"({
    "kind": "chsh", "id": "seedless_chsh", "state": "singlet"
  })");
  setenv("QAGI_LAB_SEED", "1234", 1);
  const Report from_env = run_scenario(seedless);
  CHECK(from_env.seed == 1234);
  setenv("QAGI_LAB_SEED", "notanumber", 1);
  CHECK_THROWS_AS(run_scenario(seedless), ValidationError);
  unsetenv("QAGI_LAB_SEED");
  const Report fallback = run_scenario(seedless);
  CHECK(fallback.seed == 0);
}

TEST_CASE("expectimax budget overruns surface as resource errors") {
  const fs::path path = write_temp_scenario("huge_horizon.json", R"({
    "kind": "cagi_classical", "id": "huge_horizon", "seed": 1,
    "environments": ")" + (kDataDir / "environments" / "bandit.json").string() + R"(",
    "true_env": "bandit_a", "horizon": 30, "steps": 1
  })");
  CHECK_THROWS_AS(run_scenario(path), ResourceError);
}

TEST_CASE("ks scenario carries the search certificate") {
  const Report report = run_scenario(kScenarioDir / "ks_d4.json");
  CHECK(report.verdict.find("satisfiable")->dump() == "false");
  CHECK(verdict_number(report, "nodes_searched") > 0);
  CHECK(verdict_number(report, "bases_checked") == 9);
  CHECK(verdict_number(report, "rays") == 18);

  const Report d3 = run_scenario(kScenarioDir / "ks_d3_single_basis.json");
  CHECK(d3.verdict.find("satisfiable")->dump() == "true");
  CHECK(verdict_number(d3, "assignment_count") == 3);
}

TEST_CASE("qagi_bell scenario ends maximally non-product") {
  const Report report = run_scenario(kScenarioDir / "qagi_bell.json");
  CHECK(std::abs(verdict_number(report, "final_separability") - 0.75) < 1e-9);
}

TEST_CASE("cagi_quantum scenario concentrates its posterior") {
  const Report report = run_scenario(kScenarioDir / "cagi_quantum_plus.json");
  REQUIRE(report.records.size() == 8);
  const JValue* posterior = report.records.back().find("posterior");
  REQUIRE(posterior != nullptr);
  // One of the two model weights ends at (numerically) 1.
  const auto& weights = posterior->as_array();
  const double w0 = std::stod(weights[0].dump());
  const double w1 = std::stod(weights[1].dump());
  CHECK(std::max(w0, w1) > 0.99);
}

TEST_CASE("steps override replaces the scenario's step count") {
  const Report report = run_scenario(kScenarioDir / "qagi_echo.json", std::nullopt, 3u);
  CHECK(report.records.size() == 3);
}

TEST_CASE("recorded percept probabilities lie in (0, 1]") {
  for (const char* name : {"cagi_bandit.json", "cagi_quantum_plus.json", "qagi_echo.json"}) {
    const Report report = run_scenario(kScenarioDir / name);
    for (const auto& record : report.records) {
      const JValue* p = record.find("p");
      REQUIRE(p != nullptr);
      const double prob = std::stod(p->dump());
      CHECK(prob > 0.0);
      CHECK(prob <= 1.0 + 1e-12);
    }
  }
}

TEST_CASE("emitted reports conform to the published schema") {
  const auto schema = nlohmann::json::parse(read_text_file(kDataDir / "report.schema.json"));
  REQUIRE(schema.contains("required"));
  REQUIRE(schema.contains("properties"));

  for (const char* name : {"chsh_singlet.json", "ks_d4.json", "cagi_bandit.json",
                           "qagi_bell.json", "qagi_echo.json"}) {
    const Report report = run_scenario(kScenarioDir / name);
    const auto doc = nlohmann::json::parse(report_to_jvalue(report).dump());

    for (const auto& field : schema["required"])
      CHECK(doc.contains(field.get<std::string>()));
    CHECK(doc["schema_version"] == schema["properties"]["schema_version"]["const"]);
    CHECK(doc["verdict"].is_object());
    CHECK(doc["records"].is_array());
    CHECK(doc["wall_seconds"].is_number());
    CHECK(doc["seed"].is_number_unsigned());
    CHECK(doc["digest"].get<std::string>().size() == 16);

    bool kind_listed = false;
    for (const auto& kind : schema["properties"]["kind"]["enum"])
      kind_listed = kind_listed || kind == doc["kind"];
    CHECK(kind_listed);

    const auto& record_schema = schema["properties"]["records"]["items"];
    for (const auto& record : doc["records"])
      for (const auto& field : record_schema["required"])
        CHECK(record.contains(field.get<std::string>()));
  }
}
