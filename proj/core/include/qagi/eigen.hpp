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

/// Result of a Hermitian eigendecomposition: m = V diag(values) V^dag,
/// eigenvalues in descending order, eigenvectors as the columns of V.
struct EigenDecomposition {
  std::vector<double> values;
  ComplexMatrix vectors;
};

/// Eigendecomposition of a Hermitian matrix. Precondition: square and
/// Hermitian within tol.hermitian (throws ValidationError otherwise).
EigenDecomposition hermitian_eigen(const ComplexMatrix& m,
                                   const Tolerances& tol = tolerances());

/// Eigenvalues only, descending.
std::vector<double> hermitian_eigenvalues(const ComplexMatrix& m,
                                          const Tolerances& tol = tolerances());

}  // namespace qagi
