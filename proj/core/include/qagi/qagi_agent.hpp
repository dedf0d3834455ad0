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

#include <map>

#include "qagi/environment.hpp"
#include "qagi/interaction.hpp"

namespace qagi {

/// An action available to a quantum agent: either a coherent QTQ channel
/// (on the environment part or the whole joint register) or a quantum
/// instrument on the environment part. Instrument actions produce a
/// classical percept; coherent actions produce none.
struct QagiAction {
  enum class Kind { unitary_env, unitary_joint, instrument_env };
  Kind kind = Kind::unitary_env;
  QtqChannel channel;     // for the unitary kinds
  Instrument instrument;  // for instrument_env
};

/// How the agent's internal register reacts to the classical step data
/// (a_t, o_t, r_t). All rules are CPTP maps on the agent subsystem,
/// applied to the joint state extended by identity on the environment.
struct UpdateRule {
  enum class Kind {
    identity,        // internal state untouched
    encode_outcome,  // replace the agent register with |o><o| after a percept
    custom,          // per-(action, outcome) channel, identity when missing
  };
  Kind kind = Kind::encode_outcome;
  std::map<std::pair<std::string, std::string>, QtqChannel> channels;
};

/// Quantum agent: an internal register, an action table over a classical
/// action alphabet, a reward lookup on observation labels, and an update
/// rule. The joint register is [agent, environment], in that order.
struct QagiAgent {
  DensityOperator internal_state;  // single subsystem
  Alphabet action_alphabet;
  std::vector<QagiAction> action_table;  // aligned with action_alphabet
  std::map<std::string, double> reward_table;
  UpdateRule update_rule;
};

void validate_qagi_agent(const QagiAgent& agent, const Tolerances& tol = tolerances());

struct QagiStepResult {
  std::optional<std::string> observation;  // absent for coherent actions
  double reward = 0.0;
  std::optional<double> probability;
  DensityOperator joint;        // new joint state
  DensityOperator agent_state;  // its agent marginal after the update rule
};

/// One interaction step on the joint state: instrument actions sample an
/// outcome with Born probabilities and apply back-action; coherent
/// actions conjugate the joint. The update rule then acts on the agent
/// subsystem. Every emitted state is valid.
QagiStepResult qagi_step(const QagiAgent& agent, const DensityOperator& joint,
                         std::size_t action_index, std::uint64_t rng_seed);
QagiStepResult qagi_step(const QagiAgent& agent, const DensityOperator& joint,
                         std::size_t action_index, SplitMix64& rng);

/// Quantum agent, quantum environment: joint evolution from
/// agent (x) env_init under a fixed action schedule (cycled when shorter
/// than the episode). Percepts appear only on instrument steps. Each
/// step records the separability gap of the joint state.
InteractionTrace run_qagi_quantum(const QagiAgent& agent, const DensityOperator& env_init,
                                  const std::vector<std::string>& action_schedule,
                                  unsigned steps, std::uint64_t seed);

/// Quantum agent, classical environment: each step reads the agent's
/// quantum memory through a QTC readout (outcome index selects the
/// classical action), the environment replies classically, and the reply
/// is re-encoded into the memory through a CTQ channel.
InteractionTrace run_qagi_classical(const QagiAgent& agent, const EnvironmentModel& env,
                                    const Povm& memory_readout, const CtqChannel& percept_encoder,
                                    unsigned steps, std::uint64_t seed);

}  // namespace qagi
