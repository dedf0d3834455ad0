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

#include "qagi/matrix.hpp"
#include "qagi/tolerances.hpp"

namespace qagi {

/// Density operator with explicit subsystem dimensions. The dims are
/// declared metadata, never inferred, so partial traces are unambiguous.
struct DensityOperator {
  std::vector<std::size_t> dims;  // each >= 2
  ComplexMatrix matrix;           // D x D, D = product of dims

  std::size_t dim() const {
    std::size_t d = 1;
    for (std::size_t s : dims) d *= s;
    return d;
  }
};

/// Outcome of a density-operator validity check. On failure `violation`
/// names the broken invariant and `detail` quantifies it.
struct DensityCheck {
  bool ok = false;
  std::string violation;  // "non-hermitian" | "trace" | "negative-eigenvalue" | shape issues
  std::string detail;
};

/// Non-throwing validity check: Hermitian, unit trace, PSD, finite,
/// declared dims consistent with the matrix size.
DensityCheck check_density(const ComplexMatrix& m, const std::vector<std::size_t>& dims,
                           const Tolerances& tol = tolerances());

/// Validates and wraps; throws ValidationError naming the violated
/// invariant otherwise.
DensityOperator validate_density(const ComplexMatrix& m, std::vector<std::size_t> dims,
                                 const Tolerances& tol = tolerances());

/// Reduced state on the kept subsystems (0-based indices, original order
/// preserved). Trace is preserved. Keeping everything is the identity.
DensityOperator partial_trace(const DensityOperator& rho,
                              const std::vector<std::size_t>& keep);

/// (1/2) sum |eigenvalues(rho - sigma)|. Requires equal total dimension.
/// Symmetric bit-for-bit: the difference is taken in a canonical order.
double trace_distance(const DensityOperator& rho, const DensityOperator& sigma);

// Convenience constructors (all validated).
DensityOperator pure_state(const std::vector<Complex>& amplitudes,
                           std::vector<std::size_t> dims);
DensityOperator basis_state(std::size_t index, std::size_t dim);
DensityOperator maximally_mixed(std::vector<std::size_t> dims);
DensityOperator tensor(const DensityOperator& a, const DensityOperator& b);

/// <0|, |+> etc. as normalized amplitude vectors, for test and scenario use.
std::vector<Complex> ket_zero();
std::vector<Complex> ket_one();
std::vector<Complex> ket_plus();
std::vector<Complex> ket_minus();
/// (|00...> + |11...>)/sqrt(2) style two-qubit Bell states.
std::vector<Complex> ket_bell_phi_plus();
std::vector<Complex> ket_singlet();

}  // namespace qagi
