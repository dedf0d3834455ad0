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

#include "qagi/eigen.hpp"

#include <Eigen/Dense>

#include "qagi/error.hpp"

namespace qagi {

namespace {

Eigen::MatrixXcd to_eigen(const ComplexMatrix& m) {
  Eigen::MatrixXcd out(m.rows(), m.cols());
  for (std::size_t r = 0; r < m.rows(); ++r)
    for (std::size_t c = 0; c < m.cols(); ++c)
      out(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(c)) = m.at(r, c);
  return out;
}

}  // namespace

EigenDecomposition hermitian_eigen(const ComplexMatrix& m, const Tolerances& tol) {
  if (!m.is_square())
    throw ValidationError("hermitian_eigen: matrix is not square");
  if (!m.is_finite())
    throw ValidationError("hermitian_eigen: matrix has non-finite entries");
  if (m.hermiticity_error() > tol.hermitian)
    throw ValidationError("hermitian_eigen: matrix is not Hermitian within tolerance");

  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(to_eigen(m));
  if (solver.info() != Eigen::Success)
    throw ValidationError("hermitian_eigen: eigensolver failed to converge");

  const std::size_t n = m.rows();
  EigenDecomposition out;
  out.values.resize(n);
  out.vectors = ComplexMatrix(n, n);
  // Solver returns ascending order; flip to descending.
  for (std::size_t i = 0; i < n; ++i) {
    const Eigen::Index src = static_cast<Eigen::Index>(n - 1 - i);
    out.values[i] = solver.eigenvalues()(src);
    for (std::size_t r = 0; r < n; ++r)
      out.vectors.at(r, i) = solver.eigenvectors()(static_cast<Eigen::Index>(r), src);
  }
  return out;
}

std::vector<double> hermitian_eigenvalues(const ComplexMatrix& m, const Tolerances& tol) {
  return hermitian_eigen(m, tol).values;
}

}  // namespace qagi
