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

#include "qagi/environment.hpp"

namespace qagi {

/// Bayesian mixture over a finite environment class. Weights align with
/// the environment list and always sum to 1.
struct MixtureState {
  std::vector<EnvironmentModel> environments;
  std::vector<double> weights;
};

/// Prior weights proportional to 2^(-description_bits), normalized.
/// All environments must share action and observation alphabets.
MixtureState prior_weights(std::vector<EnvironmentModel> environments);

/// Bayes update on one (action, percept) pair appended after history h:
/// w' proportional to w * nu(e | h, a). Throws if every environment
/// assigns the percept zero probability.
MixtureState posterior_update(const MixtureState& mix, const History& h,
                              std::size_t action_index, std::size_t percept_index);

/// Planner configuration: lookahead depth, discount, and the exactness
/// budget. Tie-breaking is always lowest action index.
struct PolicyConfig {
  unsigned horizon = 1;
  double gamma = 1.0;
  std::uint64_t max_leaves = 1'000'000;  // |A|^m * |E|^m cap, checked up front
};

struct PolicyDecision {
  std::size_t action_index;
  double value;  // expected discounted reward of the chosen action
};

/// Exact expectimax to the horizon: alternating max over actions and
/// mixture expectation over percepts, with in-branch posterior updating.
/// No approximation: exceeding the leaf budget is a ResourceError.
PolicyDecision aixi_policy(const MixtureState& mix, const History& h,
                           const PolicyConfig& cfg);

}  // namespace qagi
