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

#include "qagi/environment.hpp"

#include <cmath>

#include "qagi/error.hpp"

namespace qagi {

std::size_t EnvironmentModel::state_after(const History& h) const {
  std::size_t s = initial_state;
  for (const auto& step : h) {
    const auto a = actions.index_of(step.action);
    const auto e = observations.index_of(step.percept.observation);
    if (!a) throw DimensionError("environment " + id + ": unknown action in history");
    if (!e) throw DimensionError("environment " + id + ": unknown percept in history");
    s = transition[s][*a][*e];
  }
  return s;
}

const std::vector<double>& EnvironmentModel::predict(const History& h,
                                                     std::size_t action_index) const {
  if (action_index >= actions.size())
    throw DimensionError("environment " + id + ": action index out of range");
  return emission[state_after(h)][action_index];
}

double EnvironmentModel::likelihood(const History& h, std::size_t action_index,
                                    std::size_t percept_index) const {
  const auto& dist = predict(h, action_index);
  if (percept_index >= dist.size())
    throw DimensionError("environment " + id + ": percept index out of range");
  return dist[percept_index];
}

void validate_environment(const EnvironmentModel& env, const Tolerances& tol) {
  if (env.id.empty()) throw ValidationError("environment: empty id");
  if (env.description_bits == 0)
    throw ValidationError("environment " + env.id + ": description_bits must be positive");
  if (env.rewards.size() != env.observations.size())
    throw ValidationError("environment " + env.id + ": one reward required per percept");
  for (double r : env.rewards)
    if (!std::isfinite(r))
      throw ValidationError("environment " + env.id + ": non-finite reward");
  const std::size_t n_states = env.state_names.size();
  if (n_states == 0)
    throw ValidationError("environment " + env.id + ": no internal states");
  if (env.initial_state >= n_states)
    throw ValidationError("environment " + env.id + ": initial state out of range");
  if (env.emission.size() != n_states || env.transition.size() != n_states)
    throw ValidationError("environment " + env.id + ": table row per state required");
  for (std::size_t s = 0; s < n_states; ++s) {
    if (env.emission[s].size() != env.actions.size() ||
        env.transition[s].size() != env.actions.size())
      throw ValidationError("environment " + env.id + ": table column per action required");
    for (std::size_t a = 0; a < env.actions.size(); ++a) {
      // Reuses the distribution validator for the emission rows.
      make_distribution(env.observations, env.emission[s][a], tol);
      if (env.transition[s][a].size() != env.observations.size())
        throw ValidationError("environment " + env.id + ": transition entry per percept required");
      for (std::size_t next : env.transition[s][a])
        if (next >= n_states)
          throw ValidationError("environment " + env.id + ": transition target out of range");
    }
  }
}

EnvironmentModel memoryless_environment(std::string id, unsigned description_bits,
                                        Alphabet actions, Alphabet observations,
                                        std::vector<double> rewards,
                                        std::vector<std::vector<double>> emission_by_action) {
  EnvironmentModel env;
  env.id = std::move(id);
  env.description_bits = description_bits;
  env.actions = std::move(actions);
  env.observations = std::move(observations);
  env.rewards = std::move(rewards);
  env.state_names = {"s0"};
  env.initial_state = 0;
  env.emission = {std::move(emission_by_action)};
  env.transition = {std::vector<std::vector<std::size_t>>(
      env.actions.size(), std::vector<std::size_t>(env.observations.size(), 0))};
  validate_environment(env);
  return env;
}

}  // namespace qagi
