#include <doctest.h>

#include <cmath>

#include "qagi/aixi.hpp"
#include "qagi/error.hpp"
#include "expectimax_oracle.hpp"
#include "test_helpers.hpp"

using namespace qagi;
using test::oracle_policy;
using test::random_environment;

namespace {

MixtureState two_env_bandit() {
  // Arm "0" pays 1 w.p. 0.9 under nu1 and w.p. 0.1 under nu2; arm "1"
  // the other way around.
  const Alphabet actions = numeric_alphabet(2);
  const Alphabet percepts = make_alphabet({"win", "lose"});
  const EnvironmentModel nu1 = memoryless_environment(
      "nu1", 2, actions, percepts, {1.0, 0.0}, {{0.9, 0.1}, {0.1, 0.9}});
  const EnvironmentModel nu2 = memoryless_environment(
      "nu2", 2, actions, percepts, {1.0, 0.0}, {{0.1, 0.9}, {0.9, 0.1}});
  return prior_weights({nu1, nu2});
}

}  // namespace

TEST_CASE("prior_weights: description-length prior shapes") {
  const Alphabet actions = numeric_alphabet(1);
  const Alphabet percepts = numeric_alphabet(2);
  auto env = [&](const std::string& id, unsigned k) {
    return memoryless_environment(id, k, actions, percepts, {0.0, 1.0}, {{0.5, 0.5}});
  };

  const MixtureState two = prior_weights({env("a", 1), env("b", 2)});
  CHECK(two.weights[0] == doctest::Approx(2.0 / 3.0));
  CHECK(two.weights[1] == doctest::Approx(1.0 / 3.0));

  const MixtureState three = prior_weights({env("a", 3), env("b", 3), env("c", 3)});
  for (double w : three.weights) CHECK(w == doctest::Approx(1.0 / 3.0));

  const MixtureState one = prior_weights({env("a", 7)});
  CHECK(one.weights[0] == doctest::Approx(1.0));

  CHECK_THROWS_AS(prior_weights({}), ValidationError);
}

TEST_CASE("posterior_update: elimination, uninformative evidence, Bayes arithmetic") {
  const Alphabet actions = numeric_alphabet(1);
  const Alphabet percepts = numeric_alphabet(2);
  const EnvironmentModel certain = memoryless_environment(
      "certain", 1, actions, percepts, {0.0, 1.0}, {{1.0, 0.0}});
  const EnvironmentModel coin = memoryless_environment(
      "coin", 1, actions, percepts, {0.0, 1.0}, {{0.5, 0.5}});

  // Percept 1 is impossible under "certain".
  MixtureState mix = prior_weights({certain, coin});
  const MixtureState eliminated = posterior_update(mix, {}, 0, 1);
  CHECK(eliminated.weights[0] == 0.0);
  CHECK(eliminated.weights[1] == doctest::Approx(1.0));

  // Two identical predictors leave the posterior untouched.
  const MixtureState same = prior_weights({coin, coin});
  const MixtureState unchanged = posterior_update(same, {}, 0, 0);
  CHECK(unchanged.weights[0] == doctest::Approx(same.weights[0]));
  CHECK(unchanged.weights[1] == doctest::Approx(same.weights[1]));

  // Prior (2/3, 1/3) with likelihoods (0.5, 1.0) -> (0.5, 0.5).
  const EnvironmentModel half = memoryless_environment(
      "half", 1, actions, percepts, {0.0, 1.0}, {{0.5, 0.5}});
  const EnvironmentModel sure = memoryless_environment(
      "sure", 2, actions, percepts, {0.0, 1.0}, {{1.0, 0.0}});
  const MixtureState bayes = posterior_update(prior_weights({half, sure}), {}, 0, 0);
  CHECK(bayes.weights[0] == doctest::Approx(0.5));
  CHECK(bayes.weights[1] == doctest::Approx(0.5));

  // A percept nobody predicts is an inconsistency.
  const EnvironmentModel zero1 = memoryless_environment(
      "z1", 1, actions, percepts, {0.0, 1.0}, {{1.0, 0.0}});
  CHECK_THROWS_AS(posterior_update(prior_weights({zero1, zero1}), {}, 0, 1),
                  ValidationError);

  // Weight once zero never regains mass.
  MixtureState revived = posterior_update(eliminated, {}, 0, 0);
  CHECK(revived.weights[0] == 0.0);
}

TEST_CASE("aixi_policy: one-step dominance") {
  const Alphabet actions = numeric_alphabet(2);
  const Alphabet percepts = make_alphabet({"win", "lose"});
  const EnvironmentModel env = memoryless_environment(
      "det", 1, actions, percepts, {1.0, 0.0}, {{0.0, 1.0}, {1.0, 0.0}});
  const MixtureState mix = prior_weights({env});

  const PolicyDecision decision = aixi_policy(mix, {}, PolicyConfig{1, 1.0});
  CHECK(decision.action_index == 1);  // action "1" always wins
  CHECK(decision.value == doctest::Approx(1.0));
}

TEST_CASE("aixi_policy: symmetric values break ties to the lowest index") {
  const Alphabet actions = numeric_alphabet(2);
  const Alphabet percepts = make_alphabet({"win", "lose"});
  const EnvironmentModel coin_a = memoryless_environment(
      "a", 1, actions, percepts, {1.0, 0.0}, {{0.5, 0.5}, {0.5, 0.5}});
  const EnvironmentModel coin_b = memoryless_environment(
      "b", 1, actions, percepts, {1.0, 0.0}, {{0.5, 0.5}, {0.5, 0.5}});
  const MixtureState mix = prior_weights({coin_a, coin_b});

  const PolicyDecision decision = aixi_policy(mix, {}, PolicyConfig{2, 1.0});
  CHECK(decision.action_index == 0);
  CHECK(decision.value == doctest::Approx(1.0));  // 0.5 reward per step, two steps
}

TEST_CASE("aixi_policy matches the brute-force oracle on random instances") {
  SplitMix64 rng(4242);
  int instances = 0;
  for (std::size_t n_envs : {1, 2, 3}) {
    for (std::size_t n_actions : {1, 2, 3}) {
      for (std::size_t n_percepts : {1, 2, 3}) {
        for (unsigned horizon : {1u, 2u, 3u}) {
          std::vector<EnvironmentModel> envs;
          for (std::size_t i = 0; i < n_envs; ++i)
            envs.push_back(random_environment(rng, "env" + std::to_string(i), n_actions,
                                              n_percepts, 1 + rng.next_u64() % 2));
          const MixtureState mix = prior_weights(envs);
          const PolicyConfig cfg{horizon, 0.9};

          // Check from an empty history and from a one-step history.
          for (int with_history : {0, 1}) {
            History h;
            if (with_history)
              h.push_back(HistoryStep{envs.front().actions.at(0),
                                      envs.front().percept_of(0)});
            const PolicyDecision actual = aixi_policy(mix, h, cfg);
            const PolicyDecision expected = oracle_policy(mix, h, cfg);
            CHECK(actual.value == doctest::Approx(expected.value).epsilon(1e-9));
            if (actual.action_index != expected.action_index) {
              // Only acceptable on an exact value tie.
              CHECK(std::abs(actual.value - expected.value) < 1e-12);
            }
            ++instances;
          }
        }
      }
    }
  }
  CHECK(instances == 162);
}

TEST_CASE("aixi_policy: reward scaling leaves the argmax unchanged") {
  SplitMix64 rng(99);
  for (int rep = 0; rep < 10; ++rep) {
    EnvironmentModel env = random_environment(rng, "env", 3, 2, 1);
    const MixtureState mix = prior_weights({env});
    const PolicyConfig cfg{2, 1.0};
    const PolicyDecision base = aixi_policy(mix, {}, cfg);

    const double c = 3.5;
    for (double& r : env.rewards) r *= c;
    const MixtureState scaled_mix = prior_weights({env});
    const PolicyDecision scaled = aixi_policy(scaled_mix, {}, cfg);
    CHECK(scaled.action_index == base.action_index);
    CHECK(scaled.value == doctest::Approx(base.value * c).epsilon(1e-9));
  }
}

TEST_CASE("aixi_policy: leaf budget is enforced up front") {
  const MixtureState mix = two_env_bandit();
  PolicyConfig cfg;
  cfg.horizon = 12;        // (2*2)^12 = 16.7M leaves
  cfg.max_leaves = 1000000;
  CHECK_THROWS_AS(aixi_policy(mix, {}, cfg), ResourceError);
}

TEST_CASE("aixi_policy: config bounds") {
  const MixtureState mix = two_env_bandit();
  CHECK_THROWS_AS(aixi_policy(mix, {}, PolicyConfig{0, 1.0}), ValidationError);
  CHECK_THROWS_AS(aixi_policy(mix, {}, PolicyConfig{1, 0.0}), ValidationError);
  CHECK_THROWS_AS(aixi_policy(mix, {}, PolicyConfig{1, 1.5}), ValidationError);
}
