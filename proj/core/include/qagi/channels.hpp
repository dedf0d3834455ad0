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
#include "qagi/density.hpp"
#include "qagi/matrix.hpp"
#include "qagi/rng.hpp"

namespace qagi {

// The four register/channel classes plus quantum instruments. All types
// are immutable once built through their make_ factory, which enforces
// the class invariants; applying a channel returns a new state.

/// Classical-to-classical channel: a column-stochastic kernel, one column
/// per input symbol (so output probs = kernel * input probs).
struct CtcChannel {
  Alphabet in_alphabet;
  Alphabet out_alphabet;
  std::vector<std::vector<double>> kernel;  // kernel[out][in]
};

CtcChannel make_ctc(Alphabet in, Alphabet out, std::vector<std::vector<double>> kernel,
                    const Tolerances& tol = tolerances());

ClassicalDistribution apply_ctc(const CtcChannel& ch, const ClassicalDistribution& d);

/// Classical-to-quantum channel: one state encoding per input symbol,
/// all on the same register.
struct CtqChannel {
  Alphabet in_alphabet;
  std::vector<DensityOperator> encodings;  // aligned with in_alphabet
};

CtqChannel make_ctq(Alphabet in, std::vector<DensityOperator> encodings,
                    const Tolerances& tol = tolerances());

DensityOperator apply_ctq(const CtqChannel& ch, const ClassicalDistribution& d);

/// Measurement described by operators {M_k} with sum_k M_k^dag M_k = I;
/// outcome k fires with Tr(M_k rho M_k^dag).
struct Povm {
  Alphabet outcome_alphabet;
  std::vector<ComplexMatrix> elements;  // aligned with outcome_alphabet

  std::size_t dim() const { return elements.empty() ? 0 : elements.front().rows(); }
};

Povm make_povm(Alphabet outcomes, std::vector<ComplexMatrix> elements,
               const Tolerances& tol = tolerances());

/// Computational-basis projective measurement in dimension d.
Povm projective_povm(std::size_t d);
/// Projective measurement onto the rows of a basis (given as unit vectors).
Povm basis_povm(const std::vector<std::vector<Complex>>& basis_vectors,
                const Tolerances& tol = tolerances());

/// Born-rule outcome distribution Pr(k) = Tr(M_k rho M_k^dag).
ClassicalDistribution qtc_distribution(const Povm& p, const DensityOperator& rho,
                                       const Tolerances& tol = tolerances());

struct QtcSample {
  std::size_t outcome_index;
  std::string outcome;
  double prob;
  DensityOperator post_state;  // M_k rho M_k^dag / Pr(k)
};

/// Seeded measurement: outcome drawn per qtc_distribution, post-state with
/// back-action. Deterministic given the seed.
QtcSample qtc_sample(const Povm& p, const DensityOperator& rho, std::uint64_t rng_seed);
QtcSample qtc_sample(const Povm& p, const DensityOperator& rho, SplitMix64& rng);

/// Quantum-to-quantum channel in Kraus form; completeness checked at
/// construction.
struct QtqChannel {
  std::vector<ComplexMatrix> kraus;

  std::size_t dim() const { return kraus.empty() ? 0 : kraus.front().rows(); }
};

QtqChannel make_qtq(std::vector<ComplexMatrix> kraus, const Tolerances& tol = tolerances());
/// Single-Kraus channel from a unitary; unitarity checked.
QtqChannel unitary_channel(const ComplexMatrix& u, const Tolerances& tol = tolerances());

DensityOperator apply_qtq(const QtqChannel& ch, const DensityOperator& rho);

/// Sequential composition: apply first, then second.
QtqChannel compose(const QtqChannel& second, const QtqChannel& first,
                   const Tolerances& tol = tolerances());

struct CptpCheck {
  bool ok = false;
  double deviation = 0.0;  // max entrywise |sum K^dag K - I|
  std::string detail;
};

/// True iff the Kraus family is trace-preserving within tol.cptp. Shape
/// mismatches throw; completeness failure is reported, not thrown.
CptpCheck validate_cptp(const std::vector<ComplexMatrix>& kraus,
                        const Tolerances& tol = tolerances());

/// Quantum instrument: outcome-indexed families of Kraus operators, each
/// branch CP trace-non-increasing, summing to a trace-preserving channel.
struct Instrument {
  Alphabet outcome_alphabet;
  std::vector<std::vector<ComplexMatrix>> branches;  // aligned with outcomes

  std::size_t dim() const {
    return branches.empty() || branches.front().empty() ? 0 : branches.front().front().rows();
  }
};

Instrument make_instrument(Alphabet outcomes, std::vector<std::vector<ComplexMatrix>> branches,
                           const Tolerances& tol = tolerances());

/// Projective instrument from a POVM: branch k = {M_k}.
Instrument instrument_from_povm(const Povm& p, const Tolerances& tol = tolerances());

struct InstrumentOutcome {
  std::size_t outcome_index;
  std::string outcome;
  double prob;                 // Tr[E_k(rho)]
  DensityOperator post_state;  // E_k(rho) / prob
};

/// Branch probabilities Tr[E_k(rho)] for all outcomes.
std::vector<double> instrument_probabilities(const Instrument& instr,
                                             const DensityOperator& rho);

/// Seeded instrument application. Branch probabilities sum to 1 within
/// tol.trace for a valid instrument; violations throw.
InstrumentOutcome apply_instrument(const Instrument& instr, const DensityOperator& rho,
                                   std::uint64_t rng_seed);
InstrumentOutcome apply_instrument(const Instrument& instr, const DensityOperator& rho,
                                   SplitMix64& rng);

/// The classical-quantum record channel rho -> sum_k M_k rho M_k^dag (x) |k><k|
/// on system (x) outcome-pointer. The pointer register has dimension
/// max(|outcomes|, 2) so the output stays a well-formed density operator.
DensityOperator measurement_channel(const Povm& p, const DensityOperator& rho);

}  // namespace qagi
