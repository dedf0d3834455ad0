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

#include <functional>
#include <span>

#include "qagi/channels.hpp"

namespace qagi {

/// Derivative-free maximizer: coordinate-wise golden-section refinement
/// seeded by a coarse grid (17 points per coordinate), repeated for
/// `passes` sweeps. Candidates are accepted only when they improve the
/// score, so the result is monotone in the number of passes. Optional
/// seeded random restarts escape flat starts. Deterministic given seed.
struct BoxMaximizeResult {
  std::vector<double> params;
  double score;
};

BoxMaximizeResult maximize_in_box(const std::function<double(std::span<const double>)>& score,
                                  std::vector<double> initial, double lo, double hi,
                                  unsigned passes, std::uint64_t seed,
                                  unsigned restarts = 2);

/// Parametrized channel family for the variational learning mode.
using ChannelFamily = std::function<QtqChannel(std::span<const double>)>;

struct VariationalResult {
  std::vector<double> theta;
  double score;                        // probability of the target outcome
  std::vector<double> accepted_scores; // non-decreasing acceptance history
};

/// Classical-parameter learning loop: the input state is the CTQ encoding
/// of `input_symbol`, the candidate channel is applied, and the score is
/// the probability of `target_outcome` under the readout. Parameters are
/// re-encoded classically between iterations; only the best parameters
/// survive. Scores must stay finite.
VariationalResult variational_learn(const ChannelFamily& family, std::size_t param_count,
                                    std::vector<double> theta_init,
                                    const Povm& readout, const std::string& target_outcome,
                                    const CtqChannel& encoder, const std::string& input_symbol,
                                    unsigned iters, std::uint64_t seed);

struct CoherentLearnResult {
  bool passed;
  double probability;
};

/// Coherent learning check: evolve agent (x) env once under the joint
/// channel, read the query distribution on the agent marginal, and
/// compare the target-outcome probability against the threshold.
CoherentLearnResult coherent_learn_check(const QtqChannel& joint_channel,
                                         const DensityOperator& agent_init,
                                         const DensityOperator& env_init,
                                         const Povm& query, const std::string& target_outcome,
                                         double threshold);

}  // namespace qagi
