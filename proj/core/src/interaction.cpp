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

#include "qagi/interaction.hpp"

#include "qagi/error.hpp"

namespace qagi {

InteractionTrace run_cagi_classical(const MixtureState& prior, const EnvironmentModel& true_env,
                                    const PolicyConfig& cfg, unsigned steps,
                                    std::uint64_t seed) {
  if (true_env.actions != prior.environments.front().actions ||
      true_env.observations != prior.environments.front().observations)
    throw ValidationError("run_cagi_classical: true environment alphabets differ from the class");
  validate_environment(true_env);

  InteractionTrace trace;
  trace.protocol = "cagi_classical";
  trace.seed = seed;

  History history;
  MixtureState posterior = prior;
  EnvironmentCursor truth(true_env);

  for (unsigned t = 0; t < steps; ++t) {
    const PolicyDecision decision = aixi_policy(posterior, history, cfg);

    // The true environment emits the percept; one stream per step.
    SplitMix64 rng = SplitMix64::stream(seed, t);
    const auto& percept_dist = truth.predict(decision.action_index);
    const std::size_t e =
        sample_index(percept_dist, rng.next_double(), tolerances().prob_floor);
    const double percept_prob = percept_dist[e];
    truth.advance(decision.action_index, e);

    posterior = posterior_update(posterior, history, decision.action_index, e);
    const Percept percept = true_env.percept_of(e);

    TraceStep step;
    step.t = t;
    step.action = true_env.actions.at(decision.action_index);
    step.observation = percept.observation;
    step.reward = percept.reward;
    step.probability = percept_prob;
    step.posterior = posterior.weights;
    step.planner_value = decision.value;
    trace.steps.push_back(std::move(step));

    history.push_back(HistoryStep{true_env.actions.at(decision.action_index), percept});
  }
  return trace;
}

InteractionTrace run_cagi_quantum(const MixtureState& prior, const QuantumEnvironment& env,
                                  const PolicyConfig& cfg, unsigned steps,
                                  std::uint64_t seed) {
  const Alphabet& actions = prior.environments.front().actions;
  const Alphabet& observations = prior.environments.front().observations;
  if (observations != env.readout.outcome_alphabet)
    throw ValidationError(
        "run_cagi_quantum: mixture percept labels differ from readout outcome labels");
  if (env.control_encodings && env.control_encodings->in_alphabet != actions)
    throw ValidationError(
        "run_cagi_quantum: control encodings are not keyed by the action alphabet");

  DensityOperator state = env.state;
  validate_density(state.matrix, state.dims);
  if (env.control_encodings) {
    const auto& enc_dims = env.control_encodings->encodings.front().dims;
    if (enc_dims.size() != 1 || state.dims.empty() || enc_dims[0] != state.dims[0])
      throw DimensionError(
          "run_cagi_quantum: control encoding must match the register's first subsystem");
    if (state.dims.size() < 2)
      throw DimensionError(
          "run_cagi_quantum: control preparation needs a core subsystem to act on");
  }

  InteractionTrace trace;
  trace.protocol = "cagi_quantum";
  trace.seed = seed;

  History history;
  MixtureState posterior = prior;

  for (unsigned t = 0; t < steps; ++t) {
    const PolicyDecision decision = aixi_policy(posterior, history, cfg);
    const std::string action = actions.at(decision.action_index);

    // CTQ preparation: write the encoded control state into the first
    // subsystem, keeping the rest of the register.
    if (env.control_encodings) {
      std::vector<std::size_t> keep;
      for (std::size_t i = 1; i < state.dims.size(); ++i) keep.push_back(i);
      const DensityOperator core = partial_trace(state, keep);
      state = tensor(env.control_encodings->encodings[decision.action_index], core);
    }

    // QTC readout with back-action; the percept is entirely classical.
    SplitMix64 rng = SplitMix64::stream(seed, t);
    const QtcSample sample = qtc_sample(env.readout, state, rng);
    state = sample.post_state;

    const auto reward_it = env.rewards.find(sample.outcome);
    const double reward = reward_it == env.rewards.end() ? 0.0 : reward_it->second;

    posterior = posterior_update(posterior, history, decision.action_index,
                                 sample.outcome_index);

    TraceStep step;
    step.t = t;
    step.action = action;
    step.observation = sample.outcome;
    step.reward = reward;
    step.probability = sample.prob;
    step.posterior = posterior.weights;
    step.planner_value = decision.value;
    trace.steps.push_back(std::move(step));

    history.push_back(HistoryStep{action, Percept{sample.outcome, reward}});
  }
  return trace;
}

}  // namespace qagi
