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

#include "qagi/chsh.hpp"

#include "qagi/error.hpp"

namespace qagi {

double chsh_correlator(const DensityOperator& state, double theta_a, double theta_b) {
  const ComplexMatrix joint_observable = kron(xz_observable(theta_a), xz_observable(theta_b));
  return (joint_observable * state.matrix).trace().real();
}

double chsh_quantum(const ChshSetting& setting) {
  if (setting.state.dims != std::vector<std::size_t>{2, 2})
    throw DimensionError("chsh_quantum: state must declare dims [2, 2]");
  validate_density(setting.state.matrix, setting.state.dims);

  return chsh_correlator(setting.state, setting.a, setting.b) +
         chsh_correlator(setting.state, setting.a, setting.b_prime) +
         chsh_correlator(setting.state, setting.a_prime, setting.b) -
         chsh_correlator(setting.state, setting.a_prime, setting.b_prime);
}

LhvResult chsh_lhv_max(double, double, double, double) {
  LhvResult result{-4.0, 0, {0, 0, 0, 0}};
  const int signs[2] = {+1, -1};
  for (int aa : signs)
    for (int ap : signs)
      for (int bb : signs)
        for (int bp : signs) {
          ++result.strategies_examined;
          const double value = aa * bb + aa * bp + ap * bb - ap * bp;
          if (value > result.max_value) {
            result.max_value = value;
            result.best_strategy = {aa, ap, bb, bp};
          }
        }
  return result;
}

}  // namespace qagi
