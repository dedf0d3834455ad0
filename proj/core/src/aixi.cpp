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

#include "qagi/aixi.hpp"

#include <cmath>
#include <limits>

#include "qagi/error.hpp"

namespace qagi {

MixtureState prior_weights(std::vector<EnvironmentModel> environments) {
  if (environments.empty())
    throw ValidationError("prior_weights: empty environment class");
  for (const auto& env : environments) {
    validate_environment(env);
    if (env.actions != environments.front().actions ||
        env.observations != environments.front().observations)
      throw ValidationError("prior_weights: environments must share action and percept alphabets");
  }
  std::vector<double> weights;
  weights.reserve(environments.size());
  double total = 0.0;
  for (const auto& env : environments) {
    const double w = std::ldexp(1.0, -static_cast<int>(env.description_bits));
    weights.push_back(w);
    total += w;
  }
  if (total <= 0.0)
    throw ValidationError("prior_weights: all prior weights underflowed to zero");
  for (double& w : weights) w /= total;
  return MixtureState{std::move(environments), std::move(weights)};
}

MixtureState posterior_update(const MixtureState& mix, const History& h,
                              std::size_t action_index, std::size_t percept_index) {
  MixtureState out = mix;
  double total = 0.0;
  for (std::size_t i = 0; i < out.environments.size(); ++i) {
    out.weights[i] *= out.environments[i].likelihood(h, action_index, percept_index);
    total += out.weights[i];
  }
  if (total <= 0.0)
    throw ValidationError("posterior_update: percept has zero likelihood under every environment");
  for (double& w : out.weights) w /= total;
  return out;
}

namespace {

// Expectimax working state: per-environment machine states and
// unnormalized weights are threaded down the tree so the mixture
// predictive at every node comes out of plain multiplications.
class Expectimax {
 public:
  Expectimax(const MixtureState& mix, const PolicyConfig& cfg)
      : mix_(mix), cfg_(cfg),
        n_actions_(mix.environments.front().actions.size()),
        n_percepts_(mix.environments.front().observations.size()),
        rewards_(mix.environments.front().rewards) {}

  // Unnormalized expected discounted reward-to-go over `remaining` steps.
  // weights carries w_nu times the likelihood of the branch so far;
  // states carries each environment's machine state in this branch.
  double value(const std::vector<double>& weights, const std::vector<std::size_t>& states,
               unsigned remaining, double discount, std::size_t* best_action) const {
    if (remaining == 0) return 0.0;
    double best = -std::numeric_limits<double>::infinity();
    for (std::size_t a = 0; a < n_actions_; ++a) {
      double q = 0.0;
      for (std::size_t e = 0; e < n_percepts_; ++e) {
        std::vector<double> next_weights(weights.size());
        std::vector<std::size_t> next_states(states.size());
        double mass = 0.0;
        for (std::size_t i = 0; i < weights.size(); ++i) {
          const auto& env = mix_.environments[i];
          next_weights[i] = weights[i] * env.emission[states[i]][a][e];
          next_states[i] = env.transition[states[i]][a][e];
          mass += next_weights[i];
        }
        if (mass <= 0.0) continue;  // percept impossible in this branch
        q += mass * discount * rewards_[e] +
             value(next_weights, next_states, remaining - 1, discount * cfg_.gamma, nullptr);
      }
      if (q > best) {
        best = q;
        if (best_action) *best_action = a;
      }
    }
    return best;
  }

 private:
  const MixtureState& mix_;
  const PolicyConfig& cfg_;
  std::size_t n_actions_;
  std::size_t n_percepts_;
  const std::vector<double>& rewards_;
};

}  // namespace

PolicyDecision aixi_policy(const MixtureState& mix, const History& h,
                           const PolicyConfig& cfg) {
  if (mix.environments.empty())
    throw ValidationError("aixi_policy: empty mixture");
  if (cfg.horizon == 0)
    throw ValidationError("aixi_policy: horizon must be at least 1");
  if (!(cfg.gamma > 0.0 && cfg.gamma <= 1.0))
    throw ValidationError("aixi_policy: discount must lie in (0, 1]");

  const std::size_t branch =
      mix.environments.front().actions.size() * mix.environments.front().observations.size();
  std::uint64_t leaves = 1;
  for (unsigned i = 0; i < cfg.horizon; ++i) {
    if (leaves > cfg.max_leaves / branch)
      throw ResourceError("aixi_policy: expectimax leaf budget exceeded");
    leaves *= branch;
  }

  std::vector<std::size_t> states;
  states.reserve(mix.environments.size());
  for (const auto& env : mix.environments) states.push_back(env.state_after(h));

  Expectimax planner(mix, cfg);
  std::size_t best_action = 0;
  const double value = planner.value(mix.weights, states, cfg.horizon, 1.0, &best_action);
  return PolicyDecision{best_action, value};
}

}  // namespace qagi
