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

#include "qagi/scenario.hpp"

#include <chrono>
#include <cmath>
#include <cstdlib>
#include <numbers>

#include "json_io_detail.hpp"
#include "qagi/chsh.hpp"
#include "qagi/cloning.hpp"
#include "qagi/error.hpp"
#include "qagi/exchange.hpp"
#include "qagi/identity_channels.hpp"
#include "qagi/interaction.hpp"
#include "qagi/json_io.hpp"
#include "qagi/learning.hpp"
#include "qagi/version.hpp"

namespace qagi {

const char* const kScenarioKinds[11] = {
    "cagi_classical", "cagi_quantum", "qagi_classical", "qagi_quantum",
    "chsh",           "ks",           "noclone",        "indist",
    "identity",       "variational",  "coherent_learn"};

namespace {

using detail::json;
using detail::require_field;

std::string fnv1a_digest(const std::string& bytes) {
  std::uint64_t hash = 14695981039346656037ULL;
  for (unsigned char c : bytes) {
    hash ^= c;
    hash *= 1099511628211ULL;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(hash));
  return buf;
}

struct LoadedScenario {
  json body;
  std::filesystem::path base_dir;
  std::string id;
  std::string kind;
  std::uint64_t seed = 0;
  std::string digest;
};

// Asset fields may be inline JSON or a string path relative to the
// scenario file.
json resolve_ref(const json& j, const std::filesystem::path& base_dir, const char* what) {
  if (j.is_string()) {
    const std::filesystem::path path = base_dir / j.get<std::string>();
    return detail::parse_text(read_text_file(path), what);
  }
  return j;
}

std::uint64_t env_fallback_seed() {
  const char* raw = std::getenv("QAGI_LAB_SEED");
  if (!raw) return 0;
  char* end = nullptr;
  const unsigned long long value = std::strtoull(raw, &end, 10);
  if (end == raw || *end != '\0')
    throw ValidationError("QAGI_LAB_SEED is set but is not an unsigned integer");
  return value;
}

LoadedScenario load(const std::filesystem::path& path,
                    std::optional<std::uint64_t> seed_override) {
  LoadedScenario out;
  const std::string bytes = read_text_file(path);
  out.digest = fnv1a_digest(bytes);
  out.body = detail::parse_text(bytes, "scenario");
  out.base_dir = path.has_parent_path() ? path.parent_path() : std::filesystem::path(".");
  if (!out.body.is_object())
    throw ValidationError("scenario: expected a JSON object");

  out.kind = require_field(out.body, "kind", "scenario").get<std::string>();
  bool known = false;
  for (const char* kind : kScenarioKinds) known = known || out.kind == kind;
  if (!known)
    throw ValidationError("scenario: unknown value for field \"kind\": \"" + out.kind + "\"");
  out.id = require_field(out.body, "id", "scenario").get<std::string>();
  if (out.id.empty() || out.id.find('/') != std::string::npos)
    throw ValidationError("scenario: field \"id\" must be a nonempty path-safe name");

  if (seed_override)
    out.seed = *seed_override;
  else if (out.body.contains("seed"))
    out.seed = out.body["seed"].get<std::uint64_t>();
  else
    out.seed = env_fallback_seed();
  return out;
}

unsigned required_steps(const LoadedScenario& scn, std::optional<unsigned> steps_override) {
  const unsigned steps = steps_override
                             ? *steps_override
                             : require_field(scn.body, "steps", "scenario").get<unsigned>();
  if (steps == 0) throw ValidationError("scenario: field \"steps\" must be positive");
  return steps;
}

JValue doubles_to_jvalue(const std::vector<double>& v) {
  JValue out = JValue::array();
  for (double x : v) out.push_back(JValue(x));
  return out;
}

std::vector<JValue> trace_records(const InteractionTrace& trace) {
  std::vector<JValue> records;
  records.reserve(trace.steps.size());
  for (const auto& step : trace.steps) {
    JValue rec = JValue::object();
    rec["t"] = JValue(static_cast<std::uint64_t>(step.t));
    rec["action"] = JValue(step.action);
    rec["o"] = step.observation ? JValue(*step.observation) : JValue(nullptr);
    rec["r"] = JValue(step.reward);
    rec["p"] = step.probability ? JValue(*step.probability) : JValue(nullptr);
    if (!step.posterior.empty()) rec["posterior"] = doubles_to_jvalue(step.posterior);
    if (step.planner_value) rec["value"] = JValue(*step.planner_value);
    if (step.separability) rec["separability"] = JValue(*step.separability);
    records.push_back(std::move(rec));
  }
  return records;
}

double total_reward(const InteractionTrace& trace) {
  double total = 0.0;
  for (const auto& step : trace.steps) total += step.reward;
  return total;
}

std::vector<Complex> amplitudes_from_json(const json& j, const char* what) {
  if (j.is_string()) {
    const std::string name = j.get<std::string>();
    if (name == "zero") return ket_zero();
    if (name == "one") return ket_one();
    if (name == "plus") return ket_plus();
    if (name == "minus") return ket_minus();
    if (name == "bell_phi_plus") return ket_bell_phi_plus();
    if (name == "singlet") return ket_singlet();
    throw ValidationError(std::string(what) + ": unknown named vector \"" + name + "\"");
  }
  std::vector<Complex> amps;
  for (const auto& c : j) {
    if (!c.is_array() || c.size() != 2)
      throw ValidationError(std::string(what) + ": amplitudes must be [re, im] pairs");
    amps.emplace_back(c[0].get<double>(), c[1].get<double>());
  }
  return amps;
}

// ---- per-kind handlers ---------------------------------------------------

void run_chsh_scenario(const LoadedScenario& scn, bool execute, Report& report) {
  ChshSetting setting;
  setting.state = scn.body.contains("state")
                      ? detail::state_from_json(scn.body["state"])
                      : pure_state(ket_singlet(), {2, 2});
  if (scn.body.contains("angles")) {
    const auto angles = scn.body["angles"].get<std::vector<double>>();
    if (angles.size() != 4)
      throw ValidationError("chsh scenario: field \"angles\" must list (a, a', b, b')");
    setting.a = angles[0];
    setting.a_prime = angles[1];
    setting.b = angles[2];
    setting.b_prime = angles[3];
  } else {
    setting.a = 0.0;
    setting.a_prime = std::numbers::pi / 2;
    setting.b = std::numbers::pi / 4;
    setting.b_prime = -std::numbers::pi / 4;
  }
  if (!execute) return;

  const double s_value = chsh_quantum(setting);
  const LhvResult lhv = chsh_lhv_max(setting.a, setting.a_prime, setting.b, setting.b_prime);
  report.verdict["S"] = JValue(s_value);
  report.verdict["abs_S"] = JValue(std::abs(s_value));
  report.verdict["tsirelson_bound"] = JValue(2.0 * std::sqrt(2.0));
  report.verdict["lhv_max"] = JValue(lhv.max_value);
  report.verdict["lhv_strategies_examined"] = JValue(lhv.strategies_examined);
  JValue angles = JValue::array();
  for (double a : {setting.a, setting.a_prime, setting.b, setting.b_prime})
    angles.push_back(JValue(a));
  report.verdict["angles"] = std::move(angles);
}

void run_ks_scenario(const LoadedScenario& scn, bool execute, Report& report) {
  const json rays_json =
      resolve_ref(require_field(scn.body, "rays", "ks scenario"), scn.base_dir, "ray system");
  const RaySystem system = detail::ray_system_from_json(rays_json);
  if (!execute) return;

  const KsSearchResult result = ks_assignment_search(system);
  report.verdict["satisfiable"] = JValue(result.satisfiable);
  report.verdict["assignment_count"] = JValue(result.assignments.size());
  report.verdict["nodes_searched"] = JValue(result.nodes_searched);
  report.verdict["bases_checked"] = JValue(result.bases_checked);
  report.verdict["rays"] = JValue(result.rays);
  report.verdict["dimension"] = JValue(system.dimension);
  report.verdict["version"] = JValue(system.version);
  if (result.satisfiable && result.assignments.size() <= 64) {
    JValue assignments = JValue::array();
    for (const auto& assignment : result.assignments) {
      JValue row = JValue::array();
      for (int v : assignment) row.push_back(JValue(static_cast<std::int64_t>(v)));
      assignments.push_back(std::move(row));
    }
    report.verdict["assignments"] = std::move(assignments);
  }
}

void run_noclone_scenario(const LoadedScenario& scn, bool execute, Report& report) {
  const json& states_json = require_field(scn.body, "states", "noclone scenario");
  std::vector<std::vector<Complex>> states;
  for (const auto& s : states_json)
    states.push_back(amplitudes_from_json(s, "noclone scenario"));
  if (states.empty())
    throw ValidationError("noclone scenario: field \"states\" must be nonempty");
  const unsigned iters =
      scn.body.contains("iters") ? scn.body["iters"].get<unsigned>() : 3u;
  if (!execute) return;

  JValue pairs = JValue::array();
  for (std::size_t i = 0; i < states.size(); ++i)
    for (std::size_t j = i + 1; j < states.size(); ++j) {
      const CloningFeasibility verdict = nocloning_check(states[i], states[j]);
      JValue pair = JValue::object();
      pair["i"] = JValue(i);
      pair["j"] = JValue(j);
      pair["feasible"] = JValue(verdict.feasible);
      pair["overlap"] = JValue(verdict.overlap);
      pair["overlap_squared"] = JValue(verdict.overlap_squared);
      pairs.push_back(std::move(pair));
    }
  report.verdict["pairs"] = std::move(pairs);

  const CloneOptimum optimum = clone_fidelity_optimize(states, iters, report.seed);
  report.verdict["worst_case_fidelity"] = JValue(optimum.worst_case_fidelity);
  report.verdict["family"] = JValue(optimum.family);
  report.verdict["iters"] = JValue(iters);
}

void run_indist_scenario(const LoadedScenario& scn, bool execute, Report& report) {
  const std::vector<Complex> psi =
      amplitudes_from_json(require_field(scn.body, "state", "indist scenario"),
                           "indist scenario");
  ComplexMatrix observable = pauli_z();
  if (scn.body.contains("observable")) {
    const json& o = scn.body["observable"];
    if (o.is_string()) {
      const std::string name = o.get<std::string>();
      if (name == "z")
        observable = pauli_z();
      else if (name == "x")
        observable = pauli_x();
      else
        throw ValidationError("indist scenario: unknown observable \"" + name + "\"");
    } else {
      observable = detail::matrix_from_json(o);
    }
  }
  if (!execute) return;

  const ExchangeReport result = indistinguishability_check(psi, observable);
  report.verdict["symmetry"] = JValue(to_string(result.symmetry));
  report.verdict["sites"] = JValue(result.sites);
  report.verdict["local_dim"] = JValue(result.local_dim);
  report.verdict["site_expectations"] = doubles_to_jvalue(result.site_expectations);
}

void run_identity_scenario(const LoadedScenario& scn, bool execute, Report& report) {
  const json& symbols_json = require_field(scn.body, "symbols", "identity scenario");
  Alphabet states = symbols_json.is_number()
                        ? numeric_alphabet(symbols_json.get<std::size_t>())
                        : detail::alphabet_from_json(symbols_json, "identity scenario");

  std::vector<std::size_t> readout_map;
  Alphabet readouts = numeric_alphabet(2);
  const std::string rule = scn.body.contains("readout_rule")
                               ? scn.body["readout_rule"].get<std::string>()
                               : "parity";
  if (rule == "parity") {
    for (std::size_t i = 0; i < states.size(); ++i) readout_map.push_back(i % 2);
  } else if (rule == "constant") {
    readouts = numeric_alphabet(1);
    readout_map.assign(states.size(), 0);
  } else {
    throw ValidationError("identity scenario: unknown readout_rule \"" + rule + "\"");
  }
  const CopyObservationChannel channel =
      make_copy_observation(states, readouts, std::move(readout_map));

  const Povm povm = scn.body.contains("povm")
                        ? detail::povm_from_json(scn.body["povm"])
                        : projective_povm(2);
  if (!execute) return;

  const ClassicalIdentityResult classical = classical_identity_check(channel);
  JValue classical_verdict = JValue::object();
  classical_verdict["verified"] = JValue(classical.verified);
  classical_verdict["symbols"] = JValue(channel.state_alphabet.size());
  report.verdict["classical"] = std::move(classical_verdict);

  const NoninjectivityWitness witness = noninjectivity_witness(povm, report.seed);
  JValue witness_verdict = JValue::object();
  witness_verdict["found"] = JValue(witness.found);
  witness_verdict["candidates_examined"] = JValue(witness.candidates_examined);
  if (witness.found) {
    witness_verdict["input_distance"] = JValue(witness.input_distance);
    witness_verdict["output_deviation"] = JValue(witness.output_deviation);
    witness_verdict["rho1"] = state_to_jvalue(witness.rho1);
    witness_verdict["rho2"] = state_to_jvalue(witness.rho2);
  } else {
    witness_verdict["note"] = JValue(witness.note);
  }
  report.verdict["witness"] = std::move(witness_verdict);
}

void run_variational_scenario(const LoadedScenario& scn, bool execute, Report& report) {
  const std::string family_name = scn.body.contains("family")
                                      ? scn.body["family"].get<std::string>()
                                      : "ry";
  if (family_name != "ry")
    throw ValidationError("variational scenario: unknown family \"" + family_name + "\"");
  const ChannelFamily family = [](std::span<const double> theta) {
    const double c = std::cos(theta[0] / 2), s = std::sin(theta[0] / 2);
    return unitary_channel(ComplexMatrix{{c, -s}, {s, c}});
  };

  const Povm readout = scn.body.contains("readout")
                           ? detail::povm_from_json(scn.body["readout"])
                           : projective_povm(2);
  const std::string target =
      scn.body.contains("target") ? scn.body["target"].get<std::string>() : "1";
  const CtqChannel encoder =
      scn.body.contains("encoder")
          ? detail::ctq_from_json(scn.body["encoder"])
          : make_ctq(numeric_alphabet(2), {basis_state(0, 2), basis_state(1, 2)});
  const std::string input =
      scn.body.contains("input") ? scn.body["input"].get<std::string>() : "0";
  const unsigned iters =
      scn.body.contains("iters") ? scn.body["iters"].get<unsigned>() : 3u;
  std::vector<double> theta_init{0.0};
  if (scn.body.contains("theta_init"))
    theta_init = scn.body["theta_init"].get<std::vector<double>>();
  if (!execute) return;

  const VariationalResult result = variational_learn(
      family, theta_init.size(), theta_init, readout, target, encoder, input, iters,
      report.seed);
  report.verdict["theta"] = doubles_to_jvalue(result.theta);
  report.verdict["score"] = JValue(result.score);
  report.verdict["accepted_scores"] = doubles_to_jvalue(result.accepted_scores);
}

void run_coherent_scenario(const LoadedScenario& scn, bool execute, Report& report) {
  const json& unitary_json = require_field(scn.body, "unitary", "coherent_learn scenario");
  ComplexMatrix u;
  if (unitary_json.is_string()) {
    const std::string name = unitary_json.get<std::string>();
    if (name == "swap")
      u = swap_gate();
    else if (name == "cnot")
      u = cnot();
    else
      throw ValidationError("coherent_learn scenario: unknown unitary \"" + name + "\"");
  } else {
    u = detail::matrix_from_json(unitary_json);
  }
  const DensityOperator agent_init =
      detail::state_from_json(require_field(scn.body, "agent_init", "coherent_learn scenario"));
  const DensityOperator env_init =
      detail::state_from_json(require_field(scn.body, "env_init", "coherent_learn scenario"));
  const Povm query = scn.body.contains("query")
                         ? detail::povm_from_json(scn.body["query"])
                         : projective_povm(agent_init.dim());
  const std::string target =
      scn.body.contains("target") ? scn.body["target"].get<std::string>() : "1";
  const double threshold =
      require_field(scn.body, "threshold", "coherent_learn scenario").get<double>();
  if (!execute) return;

  const CoherentLearnResult result = coherent_learn_check(
      unitary_channel(u), agent_init, env_init, query, target, threshold);
  report.verdict["passed"] = JValue(result.passed);
  report.verdict["probability"] = JValue(result.probability);
  report.verdict["threshold"] = JValue(threshold);
}

PolicyConfig policy_config_from(const json& body) {
  PolicyConfig cfg;
  cfg.horizon = body.contains("horizon") ? body["horizon"].get<unsigned>() : 1u;
  cfg.gamma = body.contains("gamma") ? body["gamma"].get<double>() : 1.0;
  if (body.contains("max_leaves")) cfg.max_leaves = body["max_leaves"].get<std::uint64_t>();
  return cfg;
}

void run_cagi_classical_scenario(const LoadedScenario& scn, bool execute, Report& report,
                                 std::optional<unsigned> steps_override) {
  const json class_json = resolve_ref(
      require_field(scn.body, "environments", "cagi_classical scenario"), scn.base_dir,
      "environment class");
  std::vector<EnvironmentModel> envs = detail::environment_class_from_json(class_json);
  const json& true_env_json = require_field(scn.body, "true_env", "cagi_classical scenario");
  EnvironmentModel true_env;
  if (true_env_json.is_string()) {
    const std::string id = true_env_json.get<std::string>();
    bool found = false;
    for (const auto& env : envs)
      if (env.id == id) {
        true_env = env;
        found = true;
      }
    if (!found)
      throw ValidationError("cagi_classical scenario: true_env \"" + id +
                            "\" is not in the environment class");
  } else {
    true_env = detail::environment_from_json(true_env_json);
  }
  const PolicyConfig cfg = policy_config_from(scn.body);
  const unsigned steps = required_steps(scn, steps_override);
  if (!execute) return;

  const MixtureState prior = prior_weights(std::move(envs));
  const InteractionTrace trace =
      run_cagi_classical(prior, true_env, cfg, steps, report.seed);
  report.records = trace_records(trace);
  report.verdict["steps"] = JValue(steps);
  report.verdict["total_reward"] = JValue(total_reward(trace));
  report.verdict["final_posterior"] = doubles_to_jvalue(trace.steps.back().posterior);
}

void run_cagi_quantum_scenario(const LoadedScenario& scn, bool execute, Report& report,
                               std::optional<unsigned> steps_override) {
  const json class_json = resolve_ref(
      require_field(scn.body, "environments", "cagi_quantum scenario"), scn.base_dir,
      "environment class");
  std::vector<EnvironmentModel> envs = detail::environment_class_from_json(class_json);

  const json& true_env_json = require_field(scn.body, "true_env", "cagi_quantum scenario");
  QuantumEnvironment env;
  env.state = detail::state_from_json(require_field(true_env_json, "state", "true_env"));
  env.readout = detail::povm_from_json(require_field(true_env_json, "readout", "true_env"));
  if (true_env_json.contains("encodings"))
    env.control_encodings = detail::ctq_from_json(true_env_json["encodings"]);
  if (true_env_json.contains("rewards"))
    for (const auto& [o, r] : true_env_json["rewards"].items())
      env.rewards[o] = r.get<double>();

  const PolicyConfig cfg = policy_config_from(scn.body);
  const unsigned steps = required_steps(scn, steps_override);
  if (!execute) return;

  const MixtureState prior = prior_weights(std::move(envs));
  const InteractionTrace trace = run_cagi_quantum(prior, env, cfg, steps, report.seed);
  report.records = trace_records(trace);
  report.verdict["steps"] = JValue(steps);
  report.verdict["total_reward"] = JValue(total_reward(trace));
  report.verdict["final_posterior"] = doubles_to_jvalue(trace.steps.back().posterior);
}

void run_qagi_quantum_scenario(const LoadedScenario& scn, bool execute, Report& report,
                               std::optional<unsigned> steps_override) {
  const json agent_json = resolve_ref(
      require_field(scn.body, "agent", "qagi_quantum scenario"), scn.base_dir, "agent");
  const QagiAgent agent = detail::agent_from_json(agent_json);
  const DensityOperator env_init =
      detail::state_from_json(require_field(scn.body, "env_init", "qagi_quantum scenario"));
  const std::vector<std::string> policy =
      require_field(scn.body, "policy", "qagi_quantum scenario")
          .get<std::vector<std::string>>();
  const unsigned steps = required_steps(scn, steps_override);
  if (!execute) return;

  const InteractionTrace trace =
      run_qagi_quantum(agent, env_init, policy, steps, report.seed);
  report.records = trace_records(trace);
  report.verdict["steps"] = JValue(steps);
  report.verdict["total_reward"] = JValue(total_reward(trace));
  report.verdict["final_separability"] =
      JValue(trace.steps.back().separability.value_or(0.0));
}

void run_qagi_classical_scenario(const LoadedScenario& scn, bool execute, Report& report,
                                 std::optional<unsigned> steps_override) {
  const json agent_json = resolve_ref(
      require_field(scn.body, "agent", "qagi_classical scenario"), scn.base_dir, "agent");
  const QagiAgent agent = detail::agent_from_json(agent_json);
  const json env_json = resolve_ref(
      require_field(scn.body, "environment", "qagi_classical scenario"), scn.base_dir,
      "environment");
  const EnvironmentModel env = detail::environment_from_json(env_json);
  const Povm readout =
      detail::povm_from_json(require_field(scn.body, "readout", "qagi_classical scenario"));
  const CtqChannel encoder =
      detail::ctq_from_json(require_field(scn.body, "encoder", "qagi_classical scenario"));
  const unsigned steps = required_steps(scn, steps_override);
  if (!execute) return;

  const InteractionTrace trace =
      run_qagi_classical(agent, env, readout, encoder, steps, report.seed);
  report.records = trace_records(trace);
  report.verdict["steps"] = JValue(steps);
  report.verdict["total_reward"] = JValue(total_reward(trace));
}

Report run_impl(const std::filesystem::path& path, std::optional<std::uint64_t> seed_override,
                std::optional<unsigned> steps_override, bool execute);

// Wrongly typed JSON fields surface from the parser as its own exception
// family; translate them so callers only ever see ValidationError.
Report run_translated(const std::filesystem::path& path,
                      std::optional<std::uint64_t> seed_override,
                      std::optional<unsigned> steps_override, bool execute) {
  try {
    return run_impl(path, seed_override, steps_override, execute);
  } catch (const json::exception& e) {
    throw ValidationError(path.string() + ": " + e.what());
  }
}

Report run_impl(const std::filesystem::path& path, std::optional<std::uint64_t> seed_override,
                std::optional<unsigned> steps_override, bool execute) {
  const auto start = std::chrono::steady_clock::now();
  const LoadedScenario scn = load(path, seed_override);

  Report report;
  report.scenario_id = scn.id;
  report.kind = scn.kind;
  report.seed = scn.seed;
  report.digest = scn.digest;
  report.tool_version = kToolVersion;
  report.schema_version = kSchemaVersion;

  // Errors from the dispatch are reported with the scenario file as
  // context.
  try {
    if (scn.kind == "chsh")
      run_chsh_scenario(scn, execute, report);
    else if (scn.kind == "ks")
      run_ks_scenario(scn, execute, report);
    else if (scn.kind == "noclone")
      run_noclone_scenario(scn, execute, report);
    else if (scn.kind == "indist")
      run_indist_scenario(scn, execute, report);
    else if (scn.kind == "identity")
      run_identity_scenario(scn, execute, report);
    else if (scn.kind == "variational")
      run_variational_scenario(scn, execute, report);
    else if (scn.kind == "coherent_learn")
      run_coherent_scenario(scn, execute, report);
    else if (scn.kind == "cagi_classical")
      run_cagi_classical_scenario(scn, execute, report, steps_override);
    else if (scn.kind == "cagi_quantum")
      run_cagi_quantum_scenario(scn, execute, report, steps_override);
    else if (scn.kind == "qagi_quantum")
      run_qagi_quantum_scenario(scn, execute, report, steps_override);
    else if (scn.kind == "qagi_classical")
      run_qagi_classical_scenario(scn, execute, report, steps_override);
  } catch (const ResourceError& e) {
    throw ResourceError(path.string() + ": " + e.what());
  } catch (const IoError& e) {
    throw IoError(path.string() + ": " + e.what());
  } catch (const DimensionError& e) {
    throw DimensionError(path.string() + ": " + e.what());
  } catch (const json::exception& e) {
    throw ValidationError(path.string() + ": " + e.what());
  } catch (const Error& e) {
    throw ValidationError(path.string() + ": " + e.what());
  }

  const auto end = std::chrono::steady_clock::now();
  report.wall_seconds = std::chrono::duration<double>(end - start).count();
  return report;
}

}  // namespace

Report run_scenario(const std::filesystem::path& scenario_path,
                    std::optional<std::uint64_t> seed_override,
                    std::optional<unsigned> steps_override) {
  return run_translated(scenario_path, seed_override, steps_override, true);
}

void validate_scenario_file(const std::filesystem::path& scenario_path) {
  run_translated(scenario_path, std::nullopt, std::nullopt, false);
}

JValue report_to_jvalue(const Report& report) {
  JValue out = JValue::object();
  out["schema_version"] = JValue(report.schema_version);
  out["tool_version"] = JValue(report.tool_version);
  out["scenario_id"] = JValue(report.scenario_id);
  out["kind"] = JValue(report.kind);
  out["seed"] = JValue(report.seed);
  out["digest"] = JValue(report.digest);
  out["verdict"] = report.verdict;
  JValue records = JValue::array();
  for (const auto& rec : report.records) records.push_back(rec);
  out["records"] = std::move(records);
  out["wall_seconds"] = JValue(report.wall_seconds);
  return out;
}

std::string trace_jsonl(const Report& report) {
  std::string out;
  for (const auto& rec : report.records) {
    out += rec.dump();
    out += '\n';
  }
  return out;
}

std::string trace_csv(const Report& report) {
  // Columns in first-seen order across the records; nested values are
  // embedded as JSON text.
  std::vector<std::string> columns;
  for (const auto& rec : report.records)
    for (const auto& [key, value] : rec.as_object()) {
      bool seen = false;
      for (const auto& c : columns) seen = seen || c == key;
      if (!seen) columns.push_back(key);
    }

  auto csv_cell = [](const JValue& v) {
    std::string text = v.dump();
    bool needs_quoting = text.find_first_of(",\"\n") != std::string::npos;
    if (!needs_quoting) return text;
    std::string quoted = "\"";
    for (char c : text) {
      if (c == '"') quoted += "\"\"";
      else quoted += c;
    }
    quoted += '"';
    return quoted;
  };

  std::string out;
  for (std::size_t i = 0; i < columns.size(); ++i) {
    if (i) out += ',';
    out += columns[i];
  }
  out += '\n';
  for (const auto& rec : report.records) {
    for (std::size_t i = 0; i < columns.size(); ++i) {
      if (i) out += ',';
      if (const JValue* v = rec.find(columns[i])) out += csv_cell(*v);
    }
    out += '\n';
  }
  return out;
}

std::vector<std::filesystem::path> emit_report(const Report& report,
                                               const std::filesystem::path& out_dir,
                                               ReportFormat format) {
  const std::filesystem::path dir = out_dir / report.scenario_id;
  std::error_code ec;
  std::filesystem::create_directories(dir, ec);
  if (ec) throw IoError("cannot create output directory: " + dir.string());

  std::vector<std::filesystem::path> written;
  const std::filesystem::path report_path = dir / "report.json";
  write_text_file(report_path, report_to_jvalue(report).dump_pretty() + "\n");
  written.push_back(report_path);

  if (!report.records.empty()) {
    const std::filesystem::path jsonl_path = dir / "trace.jsonl";
    write_text_file(jsonl_path, trace_jsonl(report));
    written.push_back(jsonl_path);
    if (format == ReportFormat::csv) {
      const std::filesystem::path csv_path = dir / "trace.csv";
      write_text_file(csv_path, trace_csv(report));
      written.push_back(csv_path);
    }
  }
  return written;
}

}  // namespace qagi
