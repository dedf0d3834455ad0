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

#include <map>
#include <optional>

#include "qagi/aixi.hpp"
#include "qagi/channels.hpp"

namespace qagi {

/// One step of an interaction trace. Observation/probability are absent
/// on steps that produced no classical percept (coherent QTQ steps).
struct TraceStep {
  unsigned t = 0;
  std::string action;
  std::optional<std::string> observation;
  double reward = 0.0;
  std::optional<double> probability;       // Pr(o_t) at the time of sampling
  std::vector<double> posterior;           // mixture weights after update (CAGI runs)
  std::optional<double> planner_value;     // expectimax value of the chosen action
  std::optional<double> separability;      // gap of the joint state (QAGI quantum runs)
  std::optional<DensityOperator> joint_snapshot;
};

/// Time-ordered record of one episode.
struct InteractionTrace {
  std::string protocol;
  std::uint64_t seed = 0;
  std::vector<TraceStep> steps;
};

/// Classical agent, classical environment (the CTC loop): plan with
/// expectimax, act, sample the true environment's percept, update the
/// posterior. The agent's record is History plus mixture weights only;
/// by construction it never holds a quantum state.
InteractionTrace run_cagi_classical(const MixtureState& prior, const EnvironmentModel& true_env,
                                    const PolicyConfig& cfg, unsigned steps,
                                    std::uint64_t seed);

/// A quantum environment as the classical agent sees it: a persistent
/// register measured by a fixed readout each step. If control encodings
/// are present, the acting step first writes the encoded control state
/// into the register's first subsystem (a CTQ preparation); the readout
/// is a QTC map with measurement back-action. Rewards are a classical
/// lookup on the readout outcome (missing entries pay 0).
struct QuantumEnvironment {
  DensityOperator state;
  std::optional<CtqChannel> control_encodings;  // keyed by the agent's action alphabet
  Povm readout;
  std::map<std::string, double> rewards;
};

/// Classical agent, quantum environment: the agent still plans over its
/// classical mixture (its only model of the world), but percepts come
/// from measuring the quantum register. Observation labels of the
/// mixture must match the readout outcome labels.
InteractionTrace run_cagi_quantum(const MixtureState& prior, const QuantumEnvironment& env,
                                  const PolicyConfig& cfg, unsigned steps,
                                  std::uint64_t seed);

}  // namespace qagi
