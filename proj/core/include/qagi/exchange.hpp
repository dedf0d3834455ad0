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

#include <vector>

#include "qagi/matrix.hpp"
#include "qagi/tolerances.hpp"

namespace qagi {

enum class ExchangeSymmetry { symmetric, antisymmetric, neither };

/// Exchange-symmetry report for an N-subsystem pure state: how the state
/// transforms under every pairwise swap, plus the expectation of one
/// single-site observable measured at each site.
struct ExchangeReport {
  ExchangeSymmetry symmetry = ExchangeSymmetry::neither;
  std::size_t sites = 0;
  std::size_t local_dim = 0;
  std::vector<double> site_expectations;  // <O_k> per site
};

/// Classifies |psi> on (C^d)^(x N) under all transpositions P_ij and
/// computes <psi| I..O_k..I |psi> per site. The site count is inferred
/// from the observable dimension; a state length that is not a perfect
/// N-fold power of it is an input error. For symmetric or antisymmetric
/// states all site expectations agree.
ExchangeReport indistinguishability_check(const std::vector<Complex>& psi,
                                          const ComplexMatrix& observable,
                                          const Tolerances& tol = tolerances());

const char* to_string(ExchangeSymmetry s);

}  // namespace qagi
