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

#include "qagi/json_io.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

#include "json_io_detail.hpp"
#include "qagi/error.hpp"

namespace qagi {

namespace detail {

json parse_text(const std::string& text, const char* what) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    // The parser message carries line/column context.
    throw ValidationError(std::string(what) + ": " + e.what());
  }
}

const json& require_field(const json& j, const char* field, const char* context) {
  const auto it = j.find(field);
  if (it == j.end())
    throw ValidationError(std::string(context) + ": missing field \"" + field + "\"");
  return *it;
}

namespace {

void check_kind(const json& j, const char* expected, const char* context) {
  if (!j.is_object() || !j.contains("kind")) return;  // kind tag is optional inline
  const std::string kind = j["kind"].get<std::string>();
  if (kind != expected)
    throw ValidationError(std::string(context) + ": expected kind \"" + expected +
                          "\", got \"" + kind + "\"");
}

}  // namespace

ComplexMatrix matrix_from_json(const json& j) {
  if (!j.is_object()) throw ValidationError("matrix: expected an object");
  const std::size_t rows = require_field(j, "rows", "matrix").get<std::size_t>();
  const std::size_t cols = require_field(j, "cols", "matrix").get<std::size_t>();
  const json& entries = require_field(j, "entries", "matrix");
  if (!entries.is_array() || entries.size() != rows * cols)
    throw ValidationError("matrix: field \"entries\" must list rows*cols [re, im] pairs");
  std::vector<Complex> values;
  values.reserve(entries.size());
  for (const auto& e : entries) {
    if (!e.is_array() || e.size() != 2)
      throw ValidationError("matrix: each entry must be an [re, im] pair");
    values.emplace_back(e[0].get<double>(), e[1].get<double>());
  }
  return ComplexMatrix(rows, cols, std::move(values));
}

namespace {

DensityOperator named_state(const std::string& name) {
  if (name == "zero") return pure_state(ket_zero(), {2});
  if (name == "one") return pure_state(ket_one(), {2});
  if (name == "plus") return pure_state(ket_plus(), {2});
  if (name == "minus") return pure_state(ket_minus(), {2});
  if (name == "mixed") return maximally_mixed({2});
  if (name == "bell_phi_plus") return pure_state(ket_bell_phi_plus(), {2, 2});
  if (name == "singlet") return pure_state(ket_singlet(), {2, 2});
  if (name == "mixed2") return maximally_mixed({2, 2});
  throw ValidationError("state: unknown named state \"" + name + "\"");
}

}  // namespace

DensityOperator state_from_json(const json& j) {
  if (j.is_string()) return named_state(j.get<std::string>());
  const ComplexMatrix m = matrix_from_json(j);
  const json& dims_json = require_field(j, "dims", "state");
  std::vector<std::size_t> dims;
  for (const auto& d : dims_json) dims.push_back(d.get<std::size_t>());
  return validate_density(m, std::move(dims));
}

Alphabet alphabet_from_json(const json& j, const char* context) {
  if (!j.is_array())
    throw ValidationError(std::string(context) + ": alphabet must be a list of labels");
  std::vector<std::string> symbols;
  for (const auto& s : j) symbols.push_back(s.get<std::string>());
  return make_alphabet(std::move(symbols));
}

CtcChannel ctc_from_json(const json& j) {
  check_kind(j, "ctc", "ctc channel");
  const Alphabet in = alphabet_from_json(require_field(j, "in", "ctc channel"), "ctc channel");
  const Alphabet out = alphabet_from_json(require_field(j, "out", "ctc channel"), "ctc channel");
  const json& kernel_json = require_field(j, "kernel", "ctc channel");
  std::vector<std::vector<double>> kernel;
  for (const auto& row : kernel_json)
    kernel.push_back(row.get<std::vector<double>>());
  return make_ctc(in, out, std::move(kernel));
}

CtqChannel ctq_from_json(const json& j) {
  check_kind(j, "ctq", "ctq channel");
  const Alphabet in = alphabet_from_json(require_field(j, "in", "ctq channel"), "ctq channel");
  const json& encodings_json = require_field(j, "encodings", "ctq channel");
  std::vector<DensityOperator> encodings;
  for (const auto& symbol : in.symbols) {
    const auto it = encodings_json.find(symbol);
    if (it == encodings_json.end())
      throw ValidationError("ctq channel: missing encoding for symbol \"" + symbol + "\"");
    encodings.push_back(state_from_json(*it));
  }
  return make_ctq(in, std::move(encodings));
}

Povm povm_from_json(const json& j) {
  if (j.is_string()) {
    const std::string name = j.get<std::string>();
    if (name == "z") return projective_povm(2);
    if (name == "x") return basis_povm({ket_plus(), ket_minus()});
    throw ValidationError("povm: unknown named measurement \"" + name + "\"");
  }
  check_kind(j, "qtc", "povm");
  const Alphabet outcomes =
      alphabet_from_json(require_field(j, "outcomes", "povm"), "povm");
  const json& effects = require_field(j, "effects", "povm");
  if (!effects.is_array() || effects.size() != outcomes.size())
    throw ValidationError("povm: field \"effects\" must list one matrix per outcome");
  std::vector<ComplexMatrix> elements;
  for (const auto& e : effects) elements.push_back(matrix_from_json(e));
  return make_povm(outcomes, std::move(elements));
}

QtqChannel qtq_from_json(const json& j) {
  check_kind(j, "qtq", "qtq channel");
  const json& kraus_json = require_field(j, "kraus", "qtq channel");
  if (!kraus_json.is_array() || kraus_json.empty())
    throw ValidationError("qtq channel: field \"kraus\" must be a nonempty matrix list");
  std::vector<ComplexMatrix> kraus;
  for (const auto& k : kraus_json) kraus.push_back(matrix_from_json(k));
  return make_qtq(std::move(kraus));
}

Instrument instrument_from_json(const json& j) {
  check_kind(j, "instrument", "instrument");
  const Alphabet outcomes =
      alphabet_from_json(require_field(j, "outcomes", "instrument"), "instrument");
  const json& branches_json = require_field(j, "branches", "instrument");
  if (!branches_json.is_array() || branches_json.size() != outcomes.size())
    throw ValidationError("instrument: field \"branches\" must list one Kraus list per outcome");
  std::vector<std::vector<ComplexMatrix>> branches;
  for (const auto& branch : branches_json) {
    std::vector<ComplexMatrix> ops;
    for (const auto& k : branch) ops.push_back(matrix_from_json(k));
    branches.push_back(std::move(ops));
  }
  return make_instrument(outcomes, std::move(branches));
}

RaySystem ray_system_from_json(const json& j) {
  RaySystem system;
  system.dimension = require_field(j, "dimension", "ray system").get<std::size_t>();
  const json& rays = require_field(j, "rays", "ray system");
  for (const auto& ray_json : rays) {
    std::vector<Complex> ray;
    for (const auto& c : ray_json) {
      if (!c.is_array() || c.size() != 2)
        throw ValidationError("ray system: ray components must be [re, im] pairs");
      ray.emplace_back(c[0].get<double>(), c[1].get<double>());
    }
    system.rays.push_back(std::move(ray));
  }
  const json& bases = require_field(j, "bases", "ray system");
  for (const auto& basis_json : bases)
    system.bases.push_back(basis_json.get<std::vector<std::size_t>>());
  if (j.contains("version")) system.version = j["version"].get<std::string>();
  validate_ray_system(system);
  return system;
}

EnvironmentModel environment_from_json(const json& j) {
  EnvironmentModel env;
  env.id = require_field(j, "id", "environment").get<std::string>();
  // Both spellings of the description-length field are accepted.
  if (j.contains("k_bits"))
    env.description_bits = j["k_bits"].get<unsigned>();
  else
    env.description_bits = require_field(j, "K_bits", "environment").get<unsigned>();
  env.actions = alphabet_from_json(require_field(j, "actions", "environment"), "environment");

  const json& percepts = require_field(j, "percepts", "environment");
  std::vector<std::string> observation_labels;
  for (const auto& p : percepts) {
    observation_labels.push_back(require_field(p, "o", "environment percept").get<std::string>());
    env.rewards.push_back(require_field(p, "r", "environment percept").get<double>());
  }
  env.observations = make_alphabet(std::move(observation_labels));

  if (j.contains("states"))
    env.state_names = j["states"].get<std::vector<std::string>>();
  else
    env.state_names = {"s0"};
  env.initial_state = 0;
  if (j.contains("initial_state")) {
    const std::string name = j["initial_state"].get<std::string>();
    const auto it = std::find(env.state_names.begin(), env.state_names.end(), name);
    if (it == env.state_names.end())
      throw ValidationError("environment " + env.id + ": unknown initial state \"" + name + "\"");
    env.initial_state = static_cast<std::size_t>(it - env.state_names.begin());
  }

  const json& emission = require_field(j, "emission", "environment");
  const json* transition = j.contains("transition") ? &j["transition"] : nullptr;
  for (std::size_t s = 0; s < env.state_names.size(); ++s) {
    const std::string& state_name = env.state_names[s];
    const auto se = emission.find(state_name);
    if (se == emission.end())
      throw ValidationError("environment " + env.id + ": missing emission for state \"" +
                            state_name + "\"");
    std::vector<std::vector<double>> state_emission;
    std::vector<std::vector<std::size_t>> state_transition;
    for (const auto& action : env.actions.symbols) {
      const auto ae = se->find(action);
      if (ae == se->end())
        throw ValidationError("environment " + env.id + ": missing emission for action \"" +
                              action + "\"");
      state_emission.push_back(ae->get<std::vector<double>>());

      std::vector<std::size_t> targets(env.observations.size(), s);
      if (transition) {
        const auto st = transition->find(state_name);
        if (st != transition->end()) {
          const auto at = st->find(action);
          if (at != st->end()) {
            const auto names = at->get<std::vector<std::string>>();
            if (names.size() != env.observations.size())
              throw ValidationError("environment " + env.id +
                                    ": transition entry per percept required");
            for (std::size_t e = 0; e < names.size(); ++e) {
              const auto it =
                  std::find(env.state_names.begin(), env.state_names.end(), names[e]);
              if (it == env.state_names.end())
                throw ValidationError("environment " + env.id + ": unknown transition target \"" +
                                      names[e] + "\"");
              targets[e] = static_cast<std::size_t>(it - env.state_names.begin());
            }
          }
        }
      }
      state_transition.push_back(std::move(targets));
    }
    env.emission.push_back(std::move(state_emission));
    env.transition.push_back(std::move(state_transition));
  }
  validate_environment(env);
  return env;
}

std::vector<EnvironmentModel> environment_class_from_json(const json& j) {
  if (!j.is_array() || j.empty())
    throw ValidationError("environment class: expected a nonempty JSON list");
  std::vector<EnvironmentModel> envs;
  for (const auto& e : j) envs.push_back(environment_from_json(e));
  return envs;
}

QagiAgent agent_from_json(const json& j) {
  QagiAgent agent;
  agent.internal_state = state_from_json(require_field(j, "internal_state", "agent"));
  agent.action_alphabet =
      alphabet_from_json(require_field(j, "actions", "agent"), "agent");

  const json& table = require_field(j, "action_table", "agent");
  for (const auto& action : agent.action_alphabet.symbols) {
    const auto it = table.find(action);
    if (it == table.end())
      throw ValidationError("agent: missing action_table entry for \"" + action + "\"");
    QagiAction entry;
    const std::string type = require_field(*it, "type", "agent action").get<std::string>();
    if (type == "unitary") {
      const std::string target =
          require_field(*it, "target", "agent action").get<std::string>();
      if (target == "env")
        entry.kind = QagiAction::Kind::unitary_env;
      else if (target == "joint")
        entry.kind = QagiAction::Kind::unitary_joint;
      else
        throw ValidationError("agent action: target must be \"env\" or \"joint\"");
      entry.channel = qtq_from_json(require_field(*it, "channel", "agent action"));
    } else if (type == "instrument") {
      entry.kind = QagiAction::Kind::instrument_env;
      entry.instrument = instrument_from_json(require_field(*it, "instrument", "agent action"));
    } else {
      throw ValidationError("agent action: unknown type \"" + type + "\"");
    }
    agent.action_table.push_back(std::move(entry));
  }

  if (j.contains("reward_table"))
    for (const auto& [outcome, reward] : j["reward_table"].items())
      agent.reward_table[outcome] = reward.get<double>();

  if (j.contains("update_rule")) {
    const json& rule = j["update_rule"];
    if (rule.is_string()) {
      const std::string name = rule.get<std::string>();
      if (name == "identity")
        agent.update_rule.kind = UpdateRule::Kind::identity;
      else if (name == "encode_outcome")
        agent.update_rule.kind = UpdateRule::Kind::encode_outcome;
      else
        throw ValidationError("agent: unknown update rule \"" + name + "\"");
    } else {
      agent.update_rule.kind = UpdateRule::Kind::custom;
      for (const auto& entry : require_field(rule, "custom", "agent update rule")) {
        const std::string action =
            require_field(entry, "action", "update rule").get<std::string>();
        const std::string outcome =
            require_field(entry, "outcome", "update rule").get<std::string>();
        agent.update_rule.channels[{action, outcome}] =
            qtq_from_json(require_field(entry, "channel", "update rule"));
      }
    }
  }
  validate_qagi_agent(agent);
  return agent;
}

}  // namespace detail

std::string read_text_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open file: " + path.string());
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

void write_text_file(const std::filesystem::path& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw IoError("cannot write file: " + path.string());
  out << content;
  if (!out) throw IoError("write failed: " + path.string());
}

namespace {

// Wrongly typed fields throw the parser's own exception family; the
// public API reports them as validation errors instead.
template <typename Fn>
auto with_json_errors(const char* what, Fn&& fn) {
  try {
    return fn();
  } catch (const nlohmann::json::exception& e) {
    throw ValidationError(std::string(what) + ": " + e.what());
  }
}

}  // namespace

ComplexMatrix parse_matrix_json(const std::string& text) {
  return with_json_errors("matrix", [&] {
    return detail::matrix_from_json(detail::parse_text(text, "matrix"));
  });
}

DensityOperator parse_state_json(const std::string& text) {
  return with_json_errors("state", [&] {
    return detail::state_from_json(detail::parse_text(text, "state"));
  });
}

CtcChannel parse_ctc_json(const std::string& text) {
  return with_json_errors("ctc channel", [&] {
    return detail::ctc_from_json(detail::parse_text(text, "ctc channel"));
  });
}

CtqChannel parse_ctq_json(const std::string& text) {
  return with_json_errors("ctq channel", [&] {
    return detail::ctq_from_json(detail::parse_text(text, "ctq channel"));
  });
}

Povm parse_povm_json(const std::string& text) {
  return with_json_errors("povm", [&] {
    return detail::povm_from_json(detail::parse_text(text, "povm"));
  });
}

QtqChannel parse_qtq_json(const std::string& text) {
  return with_json_errors("qtq channel", [&] {
    return detail::qtq_from_json(detail::parse_text(text, "qtq channel"));
  });
}

Instrument parse_instrument_json(const std::string& text) {
  return with_json_errors("instrument", [&] {
    return detail::instrument_from_json(detail::parse_text(text, "instrument"));
  });
}

RaySystem parse_ray_system_json(const std::string& text) {
  return with_json_errors("ray system", [&] {
    return detail::ray_system_from_json(detail::parse_text(text, "ray system"));
  });
}

RaySystem load_ray_system(const std::filesystem::path& path) {
  return parse_ray_system_json(read_text_file(path));
}

std::vector<EnvironmentModel> parse_environment_class_json(const std::string& text) {
  return with_json_errors("environment class", [&] {
    return detail::environment_class_from_json(detail::parse_text(text, "environment class"));
  });
}

std::vector<EnvironmentModel> load_environment_class(const std::filesystem::path& path) {
  return parse_environment_class_json(read_text_file(path));
}

QagiAgent parse_agent_json(const std::string& text) {
  return with_json_errors("agent", [&] {
    return detail::agent_from_json(detail::parse_text(text, "agent"));
  });
}

QagiAgent load_agent(const std::filesystem::path& path) {
  return parse_agent_json(read_text_file(path));
}

JValue matrix_to_jvalue(const ComplexMatrix& m) {
  JValue out = JValue::object();
  out["rows"] = JValue(m.rows());
  out["cols"] = JValue(m.cols());
  JValue entries = JValue::array();
  for (const auto& z : m.entries()) {
    JValue pair = JValue::array();
    pair.push_back(JValue(z.real()));
    pair.push_back(JValue(z.imag()));
    entries.push_back(std::move(pair));
  }
  out["entries"] = std::move(entries);
  return out;
}

JValue state_to_jvalue(const DensityOperator& rho) {
  JValue out = matrix_to_jvalue(rho.matrix);
  JValue dims = JValue::array();
  for (std::size_t d : rho.dims) dims.push_back(JValue(d));
  out["dims"] = std::move(dims);
  return out;
}

}  // namespace qagi
