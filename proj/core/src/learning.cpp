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

#include "qagi/learning.hpp"

#include <cmath>
#include <numbers>

#include "qagi/error.hpp"

namespace qagi {

namespace {

constexpr unsigned kGridPoints = 17;
constexpr unsigned kGoldenIters = 40;
constexpr double kGoldenRatio = 0.6180339887498949;

double checked(double v) {
  if (!std::isfinite(v)) throw ValidationError("optimizer: non-finite score");
  return v;
}

// Golden-section maximization of a 1-d slice on [lo, hi].
double golden_section(const std::function<double(double)>& f, double lo, double hi,
                      double* best_x) {
  double a = lo, b = hi;
  double x1 = b - kGoldenRatio * (b - a);
  double x2 = a + kGoldenRatio * (b - a);
  double f1 = checked(f(x1));
  double f2 = checked(f(x2));
  for (unsigned i = 0; i < kGoldenIters; ++i) {
    if (f1 < f2) {
      a = x1;
      x1 = x2;
      f1 = f2;
      x2 = a + kGoldenRatio * (b - a);
      f2 = checked(f(x2));
    } else {
      b = x2;
      x2 = x1;
      f2 = f1;
      x1 = b - kGoldenRatio * (b - a);
      f1 = checked(f(x1));
    }
  }
  if (f1 >= f2) {
    *best_x = x1;
    return f1;
  }
  *best_x = x2;
  return f2;
}

}  // namespace

BoxMaximizeResult maximize_in_box(const std::function<double(std::span<const double>)>& score,
                                  std::vector<double> initial, double lo, double hi,
                                  unsigned passes, std::uint64_t seed, unsigned restarts) {
  const std::size_t n = initial.size();
  std::vector<double> best = initial;
  double best_score = checked(score(best));

  auto sweep = [&](std::vector<double> point, double point_score) {
    for (unsigned pass = 0; pass < passes; ++pass) {
      for (std::size_t c = 0; c < n; ++c) {
        const double original = point[c];
        // Coarse grid on this coordinate, everything else fixed.
        double grid_best_x = original;
        double grid_best = point_score;
        for (unsigned g = 0; g < kGridPoints; ++g) {
          const double x = lo + (hi - lo) * g / (kGridPoints - 1);
          point[c] = x;
          const double v = checked(score(point));
          if (v > grid_best) {
            grid_best = v;
            grid_best_x = x;
          }
        }
        // Golden-section refinement around the best grid cell.
        const double cell = (hi - lo) / (kGridPoints - 1);
        double refined_x = grid_best_x;
        const double refined = golden_section(
            [&](double x) {
              point[c] = x;
              return score(point);
            },
            std::max(lo, grid_best_x - cell), std::min(hi, grid_best_x + cell), &refined_x);
        // Monotone acceptance: keep the best of refine/grid/previous.
        if (refined > point_score && refined >= grid_best) {
          point[c] = refined_x;
          point_score = refined;
        } else if (grid_best > point_score) {
          point[c] = grid_best_x;
          point_score = grid_best;
        } else {
          point[c] = original;
        }
      }
    }
    if (point_score > best_score) {
      best = point;
      best_score = point_score;
    }
  };

  if (passes > 0) {
    sweep(initial, best_score);
    SplitMix64 rng(seed);
    for (unsigned r = 0; r < restarts; ++r) {
      std::vector<double> start(n);
      for (double& x : start) x = lo + (hi - lo) * rng.next_double();
      sweep(start, checked(score(start)));
    }
  }
  return BoxMaximizeResult{std::move(best), best_score};
}

VariationalResult variational_learn(const ChannelFamily& family, std::size_t param_count,
                                    std::vector<double> theta_init,
                                    const Povm& readout, const std::string& target_outcome,
                                    const CtqChannel& encoder, const std::string& input_symbol,
                                    unsigned iters, std::uint64_t seed) {
  if (theta_init.size() != param_count)
    throw DimensionError("variational_learn: initial parameter size mismatch");
  const auto symbol_index = encoder.in_alphabet.index_of(input_symbol);
  if (!symbol_index)
    throw DimensionError("variational_learn: input symbol not in encoder alphabet");
  const auto target_index = readout.outcome_alphabet.index_of(target_outcome);
  if (!target_index)
    throw DimensionError("variational_learn: target outcome not in readout alphabet");

  const DensityOperator input = encoder.encodings[*symbol_index];

  const auto score = [&](std::span<const double> theta) {
    const QtqChannel channel = family(theta);
    const DensityOperator evolved = apply_qtq(channel, input);
    const ClassicalDistribution dist = qtc_distribution(readout, evolved);
    return checked(dist.probs[*target_index]);
  };

  VariationalResult result;
  result.theta = theta_init;
  result.score = checked(score(theta_init));
  result.accepted_scores.push_back(result.score);

  if (iters > 0) {
    const BoxMaximizeResult opt = maximize_in_box(score, std::move(theta_init), 0.0,
                                                  2.0 * std::numbers::pi, iters, seed);
    if (opt.score > result.score) {
      result.theta = opt.params;
      result.score = opt.score;
    }
    result.accepted_scores.push_back(result.score);
  }
  return result;
}

CoherentLearnResult coherent_learn_check(const QtqChannel& joint_channel,
                                         const DensityOperator& agent_init,
                                         const DensityOperator& env_init,
                                         const Povm& query, const std::string& target_outcome,
                                         double threshold) {
  const auto target_index = query.outcome_alphabet.index_of(target_outcome);
  if (!target_index)
    throw DimensionError("coherent_learn_check: target outcome not in query alphabet");
  if (query.dim() != agent_init.dim())
    throw DimensionError("coherent_learn_check: query must act on the agent register");

  const DensityOperator joint = tensor(agent_init, env_init);
  if (joint_channel.dim() != joint.dim())
    throw DimensionError("coherent_learn_check: joint channel dimension mismatch");

  const DensityOperator evolved = apply_qtq(joint_channel, joint);
  const DensityOperator agent_part = partial_trace(evolved, {0});
  const ClassicalDistribution dist = qtc_distribution(query, agent_part);
  const double prob = dist.probs[*target_index];
  return CoherentLearnResult{prob >= threshold, prob};
}

}  // namespace qagi
