// Shared fixtures and random-object generators for the test suite.

#pragma once

#include <cmath>
#include <vector>

#include "qagi/channels.hpp"
#include "qagi/density.hpp"
#include "qagi/eigen.hpp"
#include "qagi/rng.hpp"

namespace qagi::test {

inline Complex random_complex(SplitMix64& rng) {
  return {rng.next_double() * 2.0 - 1.0, rng.next_double() * 2.0 - 1.0};
}

inline ComplexMatrix random_matrix(SplitMix64& rng, std::size_t rows, std::size_t cols) {
  ComplexMatrix m(rows, cols);
  for (auto& z : m.entries()) z = random_complex(rng);
  return m;
}

// Random full-rank density operator: G G^dag normalized.
inline DensityOperator random_density(SplitMix64& rng, std::vector<std::size_t> dims) {
  std::size_t d = 1;
  for (std::size_t s : dims) d *= s;
  const ComplexMatrix g = random_matrix(rng, d, d);
  ComplexMatrix rho = g * g.adjoint();
  rho *= Complex(1.0 / rho.trace().real(), 0.0);
  return validate_density(rho, std::move(dims));
}

// Random normalized state vector.
inline std::vector<Complex> random_ket(SplitMix64& rng, std::size_t d) {
  std::vector<Complex> v(d);
  double norm = 0.0;
  for (auto& z : v) {
    z = random_complex(rng);
    norm += std::norm(z);
  }
  for (auto& z : v) z /= std::sqrt(norm);
  return v;
}

// Random CPTP Kraus family: raw Gaussian-ish operators G_i whitened by
// S^{-1/2}, S = sum G^dag G, so completeness holds exactly up to
// numerics.
inline std::vector<ComplexMatrix> random_kraus(SplitMix64& rng, std::size_t d,
                                               std::size_t count) {
  std::vector<ComplexMatrix> raw;
  for (std::size_t i = 0; i < count; ++i) raw.push_back(random_matrix(rng, d, d));
  ComplexMatrix gram(d, d);
  for (const auto& g : raw) gram += g.adjoint() * g;
  const EigenDecomposition eig = hermitian_eigen(gram);
  // S^{-1/2} = V diag(1/sqrt(lambda)) V^dag
  ComplexMatrix inv_sqrt(d, d);
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j) {
      Complex acc = 0.0;
      for (std::size_t k = 0; k < d; ++k)
        acc += eig.vectors.at(i, k) * std::conj(eig.vectors.at(j, k)) /
               std::sqrt(eig.values[k]);
      inv_sqrt.at(i, j) = acc;
    }
  std::vector<ComplexMatrix> kraus;
  for (const auto& g : raw) kraus.push_back(g * inv_sqrt);
  return kraus;
}

// Random instrument over `outcomes` outcomes with one Kraus operator per
// branch.
inline Instrument random_instrument(SplitMix64& rng, std::size_t d, std::size_t outcomes) {
  auto kraus = random_kraus(rng, d, outcomes);
  std::vector<std::vector<ComplexMatrix>> branches;
  for (auto& k : kraus) branches.push_back({std::move(k)});
  return make_instrument(numeric_alphabet(outcomes), std::move(branches));
}

}  // namespace qagi::test
