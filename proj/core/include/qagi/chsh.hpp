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

#include <array>

#include "qagi/density.hpp"

namespace qagi {

/// A CHSH experiment: a two-qubit state and four measurement angles.
/// Each side measures cos(theta) Z + sin(theta) X.
struct ChshSetting {
  DensityOperator state;  // dims must be [2, 2]
  double a = 0.0;
  double a_prime = 0.0;
  double b = 0.0;
  double b_prime = 0.0;
};

/// E(x, y) = Tr[(A_x (x) B_y) rho] for the X-Z plane observables.
double chsh_correlator(const DensityOperator& state, double theta_a, double theta_b);

/// S = E(a,b) + E(a,b') + E(a',b) - E(a',b'). Bounded by 2*sqrt(2) in
/// magnitude for any valid state.
double chsh_quantum(const ChshSetting& setting);

/// Result of enumerating every deterministic local strategy: each side
/// assigns +-1 to each of its two settings, 16 strategies total.
struct LhvResult {
  double max_value;                // always 2
  unsigned strategies_examined;    // always 16
  std::array<int, 4> best_strategy;  // (A(a), A(a'), B(b), B(b'))
};

/// Maximum CHSH combination over deterministic local hidden-variable
/// strategies. Angle-independent; the angles are accepted to mirror the
/// quantum evaluation's interface.
LhvResult chsh_lhv_max(double a, double a_prime, double b, double b_prime);

}  // namespace qagi
