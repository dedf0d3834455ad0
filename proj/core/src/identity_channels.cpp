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

#include "qagi/identity_channels.hpp"

#include <cmath>

#include "qagi/eigen.hpp"
#include "qagi/error.hpp"

namespace qagi {

namespace {

// Candidate pair generator for the witness search. Order matters: the
// canonical coherence-erasure pair (superposition projector vs. uniform
// mixture) comes first, then basis states vs. the uniform mixture, then
// pairs adapted to the measurement basis, then seeded random pairs.
std::vector<std::pair<DensityOperator, DensityOperator>> candidate_pairs(
    const Povm& povm, std::uint64_t seed) {
  const std::size_t d = povm.dim();
  std::vector<std::pair<DensityOperator, DensityOperator>> pairs;
  const DensityOperator uniform = maximally_mixed({d});

  // Equal superpositions of two computational basis states vs. I/d.
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = i + 1; j < d; ++j) {
      std::vector<Complex> amps(d, 0.0);
      amps[i] = 1.0 / std::sqrt(2.0);
      amps[j] = 1.0 / std::sqrt(2.0);
      pairs.emplace_back(pure_state(amps, {d}), uniform);
    }
  // Basis projectors vs. I/d.
  for (std::size_t i = 0; i < d; ++i)
    pairs.emplace_back(basis_state(i, d), uniform);

  // Pairs adapted to the measurement basis: for the top eigenvectors
  // u, v of the first two effects, (u+v)/sqrt(2) vs. the even mixture
  // of u and v. Erased coherence in the measurement basis shows up here
  // for any projective measurement, whatever basis it uses.
  if (povm.elements.size() >= 2) {
    const auto eig0 = hermitian_eigen(povm.elements[0].adjoint() * povm.elements[0]);
    const auto eig1 = hermitian_eigen(povm.elements[1].adjoint() * povm.elements[1]);
    std::vector<Complex> u(d), v(d), sup(d);
    for (std::size_t r = 0; r < d; ++r) {
      u[r] = eig0.vectors.at(r, 0);
      v[r] = eig1.vectors.at(r, 0);
      sup[r] = (u[r] + v[r]) / std::sqrt(2.0);
    }
    double norm = 0.0;
    for (const auto& z : sup) norm += std::norm(z);
    if (norm > 1e-6) {
      for (auto& z : sup) z /= std::sqrt(norm);
      const DensityOperator mix_uv{
          {d}, Complex(0.5, 0.0) * (pure_state(u, {d}).matrix + pure_state(v, {d}).matrix)};
      pairs.emplace_back(pure_state(sup, {d}), mix_uv);
    }
  }

  // Basis projector pairs.
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = i + 1; j < d; ++j)
      pairs.emplace_back(basis_state(i, d), basis_state(j, d));

  // Phase-rotated superpositions vs. the plain ones.
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = i + 1; j < d; ++j) {
      std::vector<Complex> plain(d, 0.0), rotated(d, 0.0);
      plain[i] = 1.0 / std::sqrt(2.0);
      plain[j] = 1.0 / std::sqrt(2.0);
      rotated[i] = 1.0 / std::sqrt(2.0);
      rotated[j] = Complex(0.0, 1.0) / std::sqrt(2.0);
      pairs.emplace_back(pure_state(plain, {d}), pure_state(rotated, {d}));
    }

  // Seeded random pure-state pairs.
  SplitMix64 rng(seed);
  for (unsigned k = 0; k < 8; ++k) {
    std::vector<Complex> a(d), b(d);
    double na = 0.0, nb = 0.0;
    for (std::size_t r = 0; r < d; ++r) {
      a[r] = Complex(rng.next_double() - 0.5, rng.next_double() - 0.5);
      b[r] = Complex(rng.next_double() - 0.5, rng.next_double() - 0.5);
      na += std::norm(a[r]);
      nb += std::norm(b[r]);
    }
    for (std::size_t r = 0; r < d; ++r) {
      a[r] /= std::sqrt(na);
      b[r] /= std::sqrt(nb);
    }
    pairs.emplace_back(pure_state(a, {d}), pure_state(b, {d}));
  }
  return pairs;
}

}  // namespace

CopyObservationChannel make_copy_observation(Alphabet states, Alphabet readouts,
                                             std::vector<std::size_t> readout_map) {
  if (readout_map.size() != states.size())
    throw DimensionError("copy-observation channel: one readout entry per state symbol");
  for (std::size_t r : readout_map)
    if (r >= readouts.size())
      throw DimensionError("copy-observation channel: readout index out of range");
  return CopyObservationChannel{std::move(states), std::move(readouts), std::move(readout_map)};
}

ClassicalIdentityResult classical_identity_check(const CopyObservationChannel& channel) {
  ClassicalIdentityResult result;
  result.verified = true;
  for (std::size_t s = 0; s < channel.state_alphabet.size(); ++s) {
    const std::string& state = channel.state_alphabet.at(s);
    const std::string& observed = channel.readout_alphabet.at(channel.readout[s]);
    const auto image = std::make_pair(state, observed);
    // Left inverse: discard the observation component of the image.
    const std::string& recovered = image.first;
    if (recovered != state) result.verified = false;
    result.forward.emplace_back(state, image);
  }
  return result;
}

NoninjectivityWitness noninjectivity_witness(const Povm& povm, std::uint64_t seed,
                                             const Tolerances& tol) {
  NoninjectivityWitness out;
  for (auto& [rho1, rho2] : candidate_pairs(povm, seed)) {
    ++out.candidates_examined;
    const double input_dist = trace_distance(rho1, rho2);
    if (input_dist <= tol.witness) continue;  // not usefully distinct
    const DensityOperator out1 = measurement_channel(povm, rho1);
    const DensityOperator out2 = measurement_channel(povm, rho2);
    const double dev = max_abs_diff(out1.matrix, out2.matrix);
    if (dev <= tol.numeric) {
      out.found = true;
      out.rho1 = std::move(rho1);
      out.rho2 = std::move(rho2);
      out.common_output = out1;
      out.input_distance = input_dist;
      out.output_deviation = dev;
      return out;
    }
  }
  out.note = "no witness in the searched candidate family";
  return out;
}

double separability_gap(const DensityOperator& joint) {
  if (joint.dims.size() != 2)
    throw DimensionError("separability_gap: state must declare exactly two subsystems");
  const DensityOperator left = partial_trace(joint, {0});
  const DensityOperator right = partial_trace(joint, {1});
  return trace_distance(joint, tensor(left, right));
}

}  // namespace qagi
