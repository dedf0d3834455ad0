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

#include <cstdint>
#include <string>
#include <vector>

#include "qagi/classical.hpp"

namespace qagi {

/// Classical percept: observation label plus real-valued reward.
struct Percept {
  std::string observation;
  double reward = 0.0;
};

/// One interaction step as the agent remembers it.
struct HistoryStep {
  std::string action;
  Percept percept;
};

/// Append-only classical interaction record.
using History = std::vector<HistoryStep>;

/// Finite chronological environment: a deterministic internal state
/// machine with stochastic percept emission. The percept law for a given
/// history is recovered by replaying the history through the machine, so
/// predictions depend only on the past. description_bits supplies the
/// explicit description-length prior exponent for the mixture.
class EnvironmentModel {
 public:
  std::string id;
  unsigned description_bits = 1;
  Alphabet actions;
  Alphabet observations;              // one label per percept kind
  std::vector<double> rewards;        // reward per percept index
  std::vector<std::string> state_names;
  std::size_t initial_state = 0;
  // emission[state][action] = distribution over percept indices
  std::vector<std::vector<std::vector<double>>> emission;
  // transition[state][action][percept] = next state index
  std::vector<std::vector<std::vector<std::size_t>>> transition;

  std::size_t percept_count() const { return observations.size(); }

  /// Internal state index after replaying a history from the start.
  std::size_t state_after(const History& h) const;

  /// nu(e | h, a): percept distribution given history and action index.
  const std::vector<double>& predict(const History& h, std::size_t action_index) const;

  /// Likelihood of one percept index under predict(h, a).
  double likelihood(const History& h, std::size_t action_index,
                    std::size_t percept_index) const;

  Percept percept_of(std::size_t percept_index) const {
    return Percept{observations.at(percept_index), rewards[percept_index]};
  }
};

/// Structural validation: table shapes, distributions, state indices.
void validate_environment(const EnvironmentModel& env,
                          const Tolerances& tol = tolerances());

/// Incremental view of an environment's machine state, for interaction
/// loops that would otherwise replay an ever-growing history each step.
class EnvironmentCursor {
 public:
  explicit EnvironmentCursor(const EnvironmentModel& env)
      : env_(&env), state_(env.initial_state) {}

  const std::vector<double>& predict(std::size_t action_index) const {
    return env_->emission[state_][action_index];
  }
  void advance(std::size_t action_index, std::size_t percept_index) {
    state_ = env_->transition[state_][action_index][percept_index];
  }

 private:
  const EnvironmentModel* env_;
  std::size_t state_;
};

/// A memoryless environment (single internal state) from per-action
/// percept distributions. Handy for bandits and test fixtures.
EnvironmentModel memoryless_environment(std::string id, unsigned description_bits,
                                        Alphabet actions, Alphabet observations,
                                        std::vector<double> rewards,
                                        std::vector<std::vector<double>> emission_by_action);

}  // namespace qagi
