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

#include <cstddef>

namespace qagi {

/// Central numerical tolerance configuration. Every validity check and
/// comparison in the library reads from one of these knobs; nothing
/// hard-codes its own epsilon.
struct Tolerances {
  double hermitian = 1e-9;    ///< max entrywise |M - M^dag|
  double trace = 1e-9;        ///< |tr(rho) - 1| and distribution sums
  double psd = 1e-9;          ///< eigenvalues allowed down to -psd
  double eigen = 1e-8;        ///< eigendecomposition reconstruction error
  double numeric = 1e-8;      ///< generic numerical comparisons
  double cptp = 1e-9;         ///< max entrywise |sum K^dag K - I|
  double prob_floor = 1e-12;  ///< branch probabilities below this never fire
  double witness = 1e-6;      ///< minimum trace distance for a witness pair
  double clone_margin = 1e-3; ///< worst-case clone fidelity must sit below 1 - this
};

/// Process-wide default tolerances. Mutable so a host application can
/// retune centrally; the library itself never writes to it.
Tolerances& tolerances();

/// Hard cap on the total Hilbert-space dimension of a density operator.
/// The kit is desk-scale by design; dense storage past this is a bug.
inline constexpr std::size_t kMaxTotalDim = 64;

}  // namespace qagi
