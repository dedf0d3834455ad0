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

#include "qagi/exchange.hpp"

#include <cmath>

#include "qagi/error.hpp"

namespace qagi {

namespace {

// Digits of `index` in base d, most significant site first.
std::vector<std::size_t> digits_of(std::size_t index, std::size_t d, std::size_t n) {
  std::vector<std::size_t> digits(n);
  for (std::size_t i = n; i-- > 0;) {
    digits[i] = index % d;
    index /= d;
  }
  return digits;
}

std::size_t index_of(const std::vector<std::size_t>& digits, std::size_t d) {
  std::size_t idx = 0;
  for (std::size_t v : digits) idx = idx * d + v;
  return idx;
}

}  // namespace

const char* to_string(ExchangeSymmetry s) {
  switch (s) {
    case ExchangeSymmetry::symmetric: return "symmetric";
    case ExchangeSymmetry::antisymmetric: return "antisymmetric";
    case ExchangeSymmetry::neither: return "neither";
  }
  return "neither";
}

ExchangeReport indistinguishability_check(const std::vector<Complex>& psi,
                                          const ComplexMatrix& observable,
                                          const Tolerances& tol) {
  if (!observable.is_square() || observable.rows() < 2)
    throw DimensionError("indistinguishability_check: observable must be square, dim >= 2");
  if (observable.hermiticity_error() > tol.hermitian)
    throw ValidationError("indistinguishability_check: observable is not Hermitian");

  const std::size_t d = observable.rows();
  std::size_t n = 0;
  std::size_t total = 1;
  while (total < psi.size()) {
    total *= d;
    ++n;
  }
  if (total != psi.size() || n == 0)
    throw DimensionError(
        "indistinguishability_check: state length is not a power of the observable dimension");

  double norm = 0.0;
  for (const auto& z : psi) norm += std::norm(z);
  if (std::abs(norm - 1.0) > tol.numeric)
    throw ValidationError("indistinguishability_check: state vector is not normalized");

  ExchangeReport report;
  report.sites = n;
  report.local_dim = d;

  // Apply every transposition P_ij and compare against +-|psi>.
  bool all_plus = true;
  bool all_minus = true;
  std::vector<Complex> swapped(psi.size());
  for (std::size_t i = 0; i < n && (all_plus || all_minus); ++i) {
    for (std::size_t j = i + 1; j < n && (all_plus || all_minus); ++j) {
      for (std::size_t idx = 0; idx < psi.size(); ++idx) {
        auto digits = digits_of(idx, d, n);
        std::swap(digits[i], digits[j]);
        swapped[index_of(digits, d)] = psi[idx];
      }
      double plus_dev = 0.0, minus_dev = 0.0;
      for (std::size_t idx = 0; idx < psi.size(); ++idx) {
        plus_dev = std::max(plus_dev, std::abs(swapped[idx] - psi[idx]));
        minus_dev = std::max(minus_dev, std::abs(swapped[idx] + psi[idx]));
      }
      if (plus_dev > tol.numeric) all_plus = false;
      if (minus_dev > tol.numeric) all_minus = false;
    }
  }
  if (n == 1 || all_plus)
    report.symmetry = ExchangeSymmetry::symmetric;
  else if (all_minus)
    report.symmetry = ExchangeSymmetry::antisymmetric;
  else
    report.symmetry = ExchangeSymmetry::neither;

  // <psi| I .. O_k .. I |psi> per site, contracted directly.
  report.site_expectations.resize(n, 0.0);
  for (std::size_t site = 0; site < n; ++site) {
    Complex acc = 0.0;
    for (std::size_t idx = 0; idx < psi.size(); ++idx) {
      const auto digits = digits_of(idx, d, n);
      for (std::size_t v = 0; v < d; ++v) {
        auto other = digits;
        other[site] = v;
        acc += std::conj(psi[idx]) * observable.at(digits[site], v) * psi[index_of(other, d)];
      }
    }
    report.site_expectations[site] = acc.real();
  }
  return report;
}

}  // namespace qagi
