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
#include <span>
#include <string>
#include <vector>

#include "qagi/matrix.hpp"
#include "qagi/tolerances.hpp"

namespace qagi {

/// Verdict on whether a single operation could clone both states
/// perfectly. Unitarity forces <psi|phi> = <psi|phi>^2 across a perfect
/// cloner, so only orthogonal or identical pairs are cloneable; the
/// witness reports the contradicting pair of values otherwise.
struct CloningFeasibility {
  bool feasible = false;
  double overlap = 0.0;          // |<psi|phi>|
  double overlap_squared = 0.0;  // what unitarity would force it to equal
};

/// Pairwise feasibility for two unit vectors of equal dimension.
CloningFeasibility nocloning_check(const std::vector<Complex>& psi,
                                   const std::vector<Complex>& phi,
                                   const Tolerances& tol = tolerances());

/// Result of the numerical search for the best approximate cloner.
struct CloneOptimum {
  std::vector<double> params;
  double worst_case_fidelity = 0.0;  // min over input states
  std::string family;                // "unitary_ancilla" or "measure_prepare"
};

/// Two-copy fidelity <psi psi| Phi(|psi><psi|) |psi psi> of one candidate
/// channel. Exposed so tests can sweep the parameter space independently.
double unitary_ancilla_fidelity(std::span<const double> params,
                                const std::vector<Complex>& psi);
double measure_prepare_fidelity(std::span<const double> params,
                                const std::vector<Complex>& psi);

std::size_t unitary_ancilla_param_count();
std::size_t measure_prepare_param_count();

/// Maximizes the worst-case two-copy fidelity over two parametrized
/// families of physical channels on a qubit: a unitary-with-ancilla
/// circuit (contains the exact basis copier) and a measure-and-prepare
/// channel (contains constant preparation). For any set containing a
/// non-orthogonal distinct pair the result stays below 1 - clone_margin.
CloneOptimum clone_fidelity_optimize(const std::vector<std::vector<Complex>>& states,
                                     unsigned iters, std::uint64_t seed,
                                     const Tolerances& tol = tolerances(),
                                     unsigned restarts = 8);

}  // namespace qagi
