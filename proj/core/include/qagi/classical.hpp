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

#include <optional>
#include <string>
#include <vector>

#include "qagi/tolerances.hpp"

namespace qagi {

/// Finite ordered alphabet of distinct symbol labels. The declared order
/// is load-bearing: tie-breaking and kernel columns follow it.
struct Alphabet {
  std::vector<std::string> symbols;

  std::size_t size() const { return symbols.size(); }
  const std::string& at(std::size_t i) const { return symbols[i]; }
  std::optional<std::size_t> index_of(const std::string& symbol) const;

  bool operator==(const Alphabet&) const = default;
};

/// Validated alphabet: nonempty, labels unique.
Alphabet make_alphabet(std::vector<std::string> symbols);

/// Convenience: "0", "1", ..., up to n-1.
Alphabet numeric_alphabet(std::size_t n);

/// Probability vector aligned with an alphabet's symbol order.
struct ClassicalDistribution {
  Alphabet alphabet;
  std::vector<double> probs;

  double prob_of(const std::string& symbol) const;
};

/// Validated distribution: nonnegative entries summing to 1 within tol.trace.
ClassicalDistribution make_distribution(Alphabet alphabet, std::vector<double> probs,
                                        const Tolerances& tol = tolerances());

ClassicalDistribution point_mass(Alphabet alphabet, std::size_t index);
ClassicalDistribution uniform_distribution(Alphabet alphabet);

}  // namespace qagi
