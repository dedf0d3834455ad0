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

#include "qagi/error.hpp"
#include "qagi/rng.hpp"
#include "qagi/tolerances.hpp"

namespace qagi {

Tolerances& tolerances() {
  static Tolerances instance;
  return instance;
}

std::size_t sample_index(std::span<const double> probs, double u, double floor) {
  double acc = 0.0;
  std::size_t last_live = probs.size();
  for (std::size_t i = 0; i < probs.size(); ++i) {
    if (probs[i] < floor) continue;
    last_live = i;
    acc += probs[i];
    if (u < acc) return i;
  }
  if (last_live == probs.size())
    throw ValidationError("sample_index: no branch above the probability floor");
  // u landed in the rounding slack past the last live branch.
  return last_live;
}

}  // namespace qagi
