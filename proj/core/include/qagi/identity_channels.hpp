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

#include "qagi/channels.hpp"

namespace qagi {

/// Classical copy-observation channel s -> (s, f(s)): reads out f while
/// keeping the state component. Injective by construction.
struct CopyObservationChannel {
  Alphabet state_alphabet;    // Sigma
  Alphabet readout_alphabet;  // Gamma
  std::vector<std::size_t> readout;  // f as index map Sigma -> Gamma
};

CopyObservationChannel make_copy_observation(Alphabet states, Alphabet readouts,
                                             std::vector<std::size_t> readout_map);

/// Result of constructing the discard-observation left inverse and
/// verifying the round trip on every symbol.
struct ClassicalIdentityResult {
  bool verified = false;
  // (s, (s, f(s))) pairs: the explicit forward map that the inverse undoes.
  std::vector<std::pair<std::string, std::pair<std::string, std::string>>> forward;
};

/// Builds the left inverse (discard the observation component) and checks
/// inverse(channel(s)) == s for all s in Sigma.
ClassicalIdentityResult classical_identity_check(const CopyObservationChannel& channel);

/// A pair of distinct states that the measurement record channel maps to
/// the same classical-quantum output, or a report that the searched
/// family contained none. The search is bounded, not a completeness
/// proof: "not found" means no witness in the candidate family.
struct NoninjectivityWitness {
  bool found = false;
  DensityOperator rho1;
  DensityOperator rho2;
  DensityOperator common_output;
  double input_distance = 0.0;    // trace distance between the inputs
  double output_deviation = 0.0;  // max entrywise difference of the outputs
  unsigned candidates_examined = 0;
  std::string note;
};

/// Searches a structured candidate family (coherent superpositions vs.
/// uniform mixtures, basis states, measurement-basis-adapted pairs, then
/// seeded random pairs) for two states with equal measurement-channel
/// outputs. Any projective POVM with two or more rank-1 effects has its
/// in-basis coherences erased, so a witness is always found for those.
NoninjectivityWitness noninjectivity_witness(const Povm& povm, std::uint64_t seed = 0,
                                             const Tolerances& tol = tolerances());

/// trace_distance(rho_AE, rho_A (x) rho_E) for a two-subsystem state:
/// zero exactly when the state is the product of its marginals. Measures
/// non-productness, not entanglement.
double separability_gap(const DensityOperator& joint);

}  // namespace qagi
