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

#include "qagi/qagi_agent.hpp"

#include "qagi/error.hpp"

namespace qagi {

namespace {

// Extends an operator on the environment part to the joint register:
// I_A (x) op.
ComplexMatrix extend_env(const ComplexMatrix& op, std::size_t agent_dim) {
  return kron(ComplexMatrix::identity(agent_dim), op);
}

// Extends an operator on the agent part: op (x) I_E.
ComplexMatrix extend_agent(const ComplexMatrix& op, std::size_t env_dim) {
  return kron(op, ComplexMatrix::identity(env_dim));
}

// Replacement channel on the agent subsystem: rho_A <- |index><index|.
// Applied to the joint this yields |index><index| (x) Tr_A(rho).
DensityOperator replace_agent_register(const DensityOperator& joint, std::size_t index) {
  const DensityOperator env_part = partial_trace(joint, {1});
  const DensityOperator agent_part = basis_state(index, joint.dims[0]);
  return tensor(agent_part, env_part);
}

DensityOperator apply_update_rule(const QagiAgent& agent, const DensityOperator& joint,
                                  const std::string& action,
                                  const std::optional<std::string>& outcome) {
  switch (agent.update_rule.kind) {
    case UpdateRule::Kind::identity:
      return joint;
    case UpdateRule::Kind::encode_outcome: {
      if (!outcome) return joint;  // coherent step, nothing to encode
      // Outcome label must index into the agent register's basis.
      const auto& instr_outcomes =
          agent.action_table[*agent.action_alphabet.index_of(action)].instrument.outcome_alphabet;
      const auto pos = instr_outcomes.index_of(*outcome);
      if (!pos || *pos >= joint.dims[0])
        throw DimensionError(
            "update rule: outcome index does not fit in the agent register");
      return replace_agent_register(joint, *pos);
    }
    case UpdateRule::Kind::custom: {
      const auto it = agent.update_rule.channels.find({action, outcome.value_or("")});
      if (it == agent.update_rule.channels.end()) return joint;
      const QtqChannel& ch = it->second;
      if (ch.dim() != joint.dims[0])
        throw DimensionError("update rule: channel dimension != agent register dimension");
      std::vector<ComplexMatrix> extended;
      extended.reserve(ch.kraus.size());
      for (const auto& k : ch.kraus) extended.push_back(extend_agent(k, joint.dims[1]));
      return apply_qtq(QtqChannel{std::move(extended)}, joint);
    }
  }
  return joint;
}

}  // namespace

void validate_qagi_agent(const QagiAgent& agent, const Tolerances& tol) {
  if (agent.internal_state.dims.size() != 1)
    throw ValidationError("qagi agent: internal register must be a single subsystem");
  validate_density(agent.internal_state.matrix, agent.internal_state.dims, tol);
  if (agent.action_table.size() != agent.action_alphabet.size())
    throw ValidationError("qagi agent: one table entry required per action");
  for (const auto& action : agent.action_table) {
    if (action.kind == QagiAction::Kind::instrument_env) {
      if (action.instrument.branches.empty())
        throw ValidationError("qagi agent: instrument action without branches");
      make_instrument(action.instrument.outcome_alphabet, action.instrument.branches, tol);
    } else {
      if (action.channel.kraus.empty())
        throw ValidationError("qagi agent: unitary action without a channel");
      const CptpCheck check = validate_cptp(action.channel.kraus, tol);
      if (!check.ok)
        throw ValidationError("qagi agent: action channel not trace-preserving; " + check.detail);
    }
  }
  for (const auto& [key, ch] : agent.update_rule.channels) {
    const CptpCheck check = validate_cptp(ch.kraus, tol);
    if (!check.ok)
      throw ValidationError("qagi agent: update-rule channel not trace-preserving; " +
                            check.detail);
  }
}

QagiStepResult qagi_step(const QagiAgent& agent, const DensityOperator& joint,
                         std::size_t action_index, std::uint64_t rng_seed) {
  SplitMix64 rng(rng_seed);
  return qagi_step(agent, joint, action_index, rng);
}

QagiStepResult qagi_step(const QagiAgent& agent, const DensityOperator& joint,
                         std::size_t action_index, SplitMix64& rng) {
  if (action_index >= agent.action_table.size())
    throw DimensionError("qagi_step: unknown action");
  if (joint.dims.size() != 2)
    throw DimensionError("qagi_step: joint register must declare [agent, environment]");
  const std::size_t agent_dim = joint.dims[0];
  const std::size_t env_dim = joint.dims[1];
  const QagiAction& action = agent.action_table[action_index];
  const std::string action_label = agent.action_alphabet.at(action_index);

  QagiStepResult result{.observation = std::nullopt,
                        .reward = 0.0,
                        .probability = std::nullopt,
                        .joint = joint,
                        .agent_state = partial_trace(joint, {0})};

  switch (action.kind) {
    case QagiAction::Kind::unitary_env: {
      if (action.channel.dim() != env_dim)
        throw DimensionError("qagi_step: environment channel dimension mismatch");
      std::vector<ComplexMatrix> extended;
      extended.reserve(action.channel.kraus.size());
      for (const auto& k : action.channel.kraus) extended.push_back(extend_env(k, agent_dim));
      result.joint = apply_qtq(QtqChannel{std::move(extended)}, joint);
      break;
    }
    case QagiAction::Kind::unitary_joint: {
      if (action.channel.dim() != joint.dim())
        throw DimensionError("qagi_step: joint channel dimension mismatch");
      result.joint = apply_qtq(action.channel, joint);
      break;
    }
    case QagiAction::Kind::instrument_env: {
      if (action.instrument.dim() != env_dim)
        throw DimensionError("qagi_step: instrument dimension mismatch");
      // Branch Kraus operators act on E, extended by identity on A. The
      // outcome probability then equals Tr[E_k(Tr_A rho_AE)].
      std::vector<std::vector<ComplexMatrix>> extended;
      extended.reserve(action.instrument.branches.size());
      for (const auto& branch : action.instrument.branches) {
        std::vector<ComplexMatrix> ops;
        ops.reserve(branch.size());
        for (const auto& k : branch) ops.push_back(extend_env(k, agent_dim));
        extended.push_back(std::move(ops));
      }
      const Instrument joint_instrument{action.instrument.outcome_alphabet,
                                        std::move(extended)};
      const InstrumentOutcome outcome = apply_instrument(joint_instrument, joint, rng);
      result.observation = outcome.outcome;
      result.probability = outcome.prob;
      const auto reward_it = agent.reward_table.find(outcome.outcome);
      result.reward = reward_it == agent.reward_table.end() ? 0.0 : reward_it->second;
      result.joint = outcome.post_state;
      break;
    }
  }

  result.joint = apply_update_rule(agent, result.joint, action_label, result.observation);
  result.agent_state = partial_trace(result.joint, {0});
  return result;
}

InteractionTrace run_qagi_quantum(const QagiAgent& agent, const DensityOperator& env_init,
                                  const std::vector<std::string>& action_schedule,
                                  unsigned steps, std::uint64_t seed) {
  validate_qagi_agent(agent);
  if (env_init.dims.size() != 1)
    throw DimensionError("run_qagi_quantum: environment register must be a single subsystem");
  validate_density(env_init.matrix, env_init.dims);
  if (action_schedule.empty())
    throw ValidationError("run_qagi_quantum: empty action schedule");

  InteractionTrace trace;
  trace.protocol = "qagi_quantum";
  trace.seed = seed;

  DensityOperator joint = tensor(agent.internal_state, env_init);

  for (unsigned t = 0; t < steps; ++t) {
    const std::string& action = action_schedule[t % action_schedule.size()];
    const auto action_index = agent.action_alphabet.index_of(action);
    if (!action_index)
      throw ValidationError("run_qagi_quantum: schedule action \"" + action + "\" not in table");

    SplitMix64 rng = SplitMix64::stream(seed, t);
    QagiStepResult step_result = qagi_step(agent, joint, *action_index, rng);
    joint = step_result.joint;

    const DensityOperator product =
        tensor(partial_trace(joint, {0}), partial_trace(joint, {1}));

    TraceStep step;
    step.t = t;
    step.action = action;
    step.observation = step_result.observation;
    step.reward = step_result.reward;
    step.probability = step_result.probability;
    step.separability = trace_distance(joint, product);
    step.joint_snapshot = joint;
    trace.steps.push_back(std::move(step));
  }
  return trace;
}

InteractionTrace run_qagi_classical(const QagiAgent& agent, const EnvironmentModel& env,
                                    const Povm& memory_readout, const CtqChannel& percept_encoder,
                                    unsigned steps, std::uint64_t seed) {
  validate_qagi_agent(agent);
  validate_environment(env);
  if (memory_readout.dim() != agent.internal_state.dim())
    throw DimensionError("run_qagi_classical: readout dimension != agent register dimension");
  if (memory_readout.outcome_alphabet.size() > env.actions.size())
    throw DimensionError("run_qagi_classical: more readout outcomes than actions");
  if (percept_encoder.in_alphabet != env.observations)
    throw DimensionError("run_qagi_classical: encoder must be keyed by the percept alphabet");
  if (percept_encoder.encodings.front().dim() != agent.internal_state.dim())
    throw DimensionError("run_qagi_classical: encoder states must fit the agent register");

  InteractionTrace trace;
  trace.protocol = "qagi_classical";
  trace.seed = seed;

  DensityOperator memory = agent.internal_state;
  EnvironmentCursor cursor(env);

  for (unsigned t = 0; t < steps; ++t) {
    SplitMix64 rng = SplitMix64::stream(seed, t);

    // QTC readout of the quantum memory picks the classical action.
    const QtcSample readout = qtc_sample(memory_readout, memory, rng);
    const std::size_t action_index = readout.outcome_index;
    const std::string action = env.actions.at(action_index);

    // Classical environment replies.
    const auto& percept_dist = cursor.predict(action_index);
    const std::size_t e = sample_index(percept_dist, rng.next_double(), tolerances().prob_floor);
    const Percept percept = env.percept_of(e);
    const double percept_prob = percept_dist[e];
    cursor.advance(action_index, e);

    // CTQ re-encoding of the classical reply into the quantum memory.
    memory = percept_encoder.encodings[e];

    TraceStep step;
    step.t = t;
    step.action = action;
    step.observation = percept.observation;
    step.reward = percept.reward;
    step.probability = percept_prob;
    trace.steps.push_back(std::move(step));
  }
  return trace;
}

}  // namespace qagi
