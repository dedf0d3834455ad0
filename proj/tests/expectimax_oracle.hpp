// Independent brute-force planner used to cross-check aixi_policy, plus
// the random environment-instance generator shared by the unit and
// acceptance suites.
//
// The oracle enumerates complete (action, percept) leaf sequences and
// computes every sequence's mixture likelihood from scratch as
//   L(seq) = sum_nu w_nu * prod_j nu(e_j | h + seq_<j, a_j),
// then folds max over actions and likelihood-ratio expectations over
// percepts. The implementation under test threads unnormalized weights
// down the tree instead; agreement checks the Bayes chain-rule identity.

#pragma once

#include <cmath>
#include <limits>
#include <utility>
#include <vector>

#include "qagi/aixi.hpp"
#include "qagi/rng.hpp"

namespace qagi::test {

inline double sequence_likelihood(
    const MixtureState& mix, const History& h,
    const std::vector<std::pair<std::size_t, std::size_t>>& seq) {
  double total = 0.0;
  for (std::size_t i = 0; i < mix.environments.size(); ++i) {
    const EnvironmentModel& env = mix.environments[i];
    double product = mix.weights[i];
    History extended = h;
    for (const auto& [a, e] : seq) {
      product *= env.likelihood(extended, a, e);
      extended.push_back(HistoryStep{env.actions.at(a), env.percept_of(e)});
    }
    total += product;
  }
  return total;
}

inline double oracle_value(const MixtureState& mix, const History& h,
                           std::vector<std::pair<std::size_t, std::size_t>>& prefix,
                           unsigned depth, const PolicyConfig& cfg,
                           std::size_t* best_action) {
  if (depth == cfg.horizon) return 0.0;
  const EnvironmentModel& front = mix.environments.front();
  const double prefix_likelihood = sequence_likelihood(mix, h, prefix);
  double best = -std::numeric_limits<double>::infinity();
  for (std::size_t a = 0; a < front.actions.size(); ++a) {
    double q = 0.0;
    for (std::size_t e = 0; e < front.observations.size(); ++e) {
      prefix.emplace_back(a, e);
      const double full_likelihood = sequence_likelihood(mix, h, prefix);
      if (full_likelihood > 0.0) {
        const double ratio = full_likelihood / prefix_likelihood;
        q += ratio * (std::pow(cfg.gamma, depth) * front.rewards[e] +
                      oracle_value(mix, h, prefix, depth + 1, cfg, nullptr));
      }
      prefix.pop_back();
    }
    if (q > best) {
      best = q;
      if (best_action && depth == 0) *best_action = a;
    }
  }
  return best;
}

inline PolicyDecision oracle_policy(const MixtureState& mix, const History& h,
                                    const PolicyConfig& cfg) {
  std::vector<std::pair<std::size_t, std::size_t>> prefix;
  std::size_t best = 0;
  const double value = oracle_value(mix, h, prefix, 0, cfg, &best);
  return PolicyDecision{best, value};
}

inline EnvironmentModel random_environment(SplitMix64& rng, const std::string& id,
                                           std::size_t n_actions, std::size_t n_percepts,
                                           std::size_t n_states) {
  EnvironmentModel env;
  env.id = id;
  env.description_bits = 1 + static_cast<unsigned>(rng.next_u64() % 4);
  env.actions = numeric_alphabet(n_actions);
  env.observations = numeric_alphabet(n_percepts);
  for (std::size_t e = 0; e < n_percepts; ++e) env.rewards.push_back(rng.next_double());
  for (std::size_t s = 0; s < n_states; ++s)
    env.state_names.push_back("s" + std::to_string(s));
  env.initial_state = 0;
  for (std::size_t s = 0; s < n_states; ++s) {
    std::vector<std::vector<double>> emission_row;
    std::vector<std::vector<std::size_t>> transition_row;
    for (std::size_t a = 0; a < n_actions; ++a) {
      std::vector<double> probs(n_percepts);
      double total = 0.0;
      for (double& p : probs) {
        p = 0.05 + rng.next_double();
        total += p;
      }
      for (double& p : probs) p /= total;
      emission_row.push_back(std::move(probs));
      std::vector<std::size_t> targets(n_percepts);
      for (auto& t : targets) t = rng.next_u64() % n_states;
      transition_row.push_back(std::move(targets));
    }
    env.emission.push_back(std::move(emission_row));
    env.transition.push_back(std::move(transition_row));
  }
  validate_environment(env);
  return env;
}

}  // namespace qagi::test
