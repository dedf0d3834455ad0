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

#include "qagi/classical.hpp"

#include <cmath>
#include <set>

#include "qagi/error.hpp"

namespace qagi {

std::optional<std::size_t> Alphabet::index_of(const std::string& symbol) const {
  for (std::size_t i = 0; i < symbols.size(); ++i)
    if (symbols[i] == symbol) return i;
  return std::nullopt;
}

Alphabet make_alphabet(std::vector<std::string> symbols) {
  if (symbols.empty()) throw ValidationError("alphabet: empty symbol list");
  std::set<std::string> seen;
  for (const auto& s : symbols)
    if (!seen.insert(s).second)
      throw ValidationError("alphabet: duplicate symbol \"" + s + "\"");
  return Alphabet{std::move(symbols)};
}

Alphabet numeric_alphabet(std::size_t n) {
  std::vector<std::string> symbols;
  symbols.reserve(n);
  for (std::size_t i = 0; i < n; ++i) symbols.push_back(std::to_string(i));
  return make_alphabet(std::move(symbols));
}

double ClassicalDistribution::prob_of(const std::string& symbol) const {
  const auto idx = alphabet.index_of(symbol);
  if (!idx) throw DimensionError("distribution: unknown symbol \"" + symbol + "\"");
  return probs[*idx];
}

ClassicalDistribution make_distribution(Alphabet alphabet, std::vector<double> probs,
                                        const Tolerances& tol) {
  if (probs.size() != alphabet.size())
    throw DimensionError("distribution: probability vector length != alphabet size");
  double sum = 0.0;
  for (double p : probs) {
    if (!std::isfinite(p) || p < -tol.trace)
      throw ValidationError("distribution: negative or non-finite probability");
    sum += p;
  }
  if (std::abs(sum - 1.0) > tol.trace)
    throw ValidationError("distribution: probabilities sum to " + std::to_string(sum));
  return ClassicalDistribution{std::move(alphabet), std::move(probs)};
}

ClassicalDistribution point_mass(Alphabet alphabet, std::size_t index) {
  if (index >= alphabet.size())
    throw DimensionError("point_mass: index out of range");
  std::vector<double> probs(alphabet.size(), 0.0);
  probs[index] = 1.0;
  return ClassicalDistribution{std::move(alphabet), std::move(probs)};
}

ClassicalDistribution uniform_distribution(Alphabet alphabet) {
  std::vector<double> probs(alphabet.size(), 1.0 / static_cast<double>(alphabet.size()));
  return ClassicalDistribution{std::move(alphabet), std::move(probs)};
}

}  // namespace qagi
